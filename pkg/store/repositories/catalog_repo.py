# store/repositories/catalog_repo.py
import json
from pathlib import Path
from typing import Any, Dict, Iterable

import pandas as pd

from ..base import BaseRepository
from ..errors import StorageError

CATALOG_COLUMNS = ["schema_version", "germ", "exponents", "signs", "fukui", "zeta_digest", "class_id"]


class CatalogRepository(BaseRepository):
    def __init__(self):
        super().__init__("catalog")

    @staticmethod
    def serialize(record: Dict[str, Any]) -> str:
        return json.dumps(record, sort_keys=True, ensure_ascii=False)

    def write(self, path: str | Path, records: Iterable[Dict[str, Any]]) -> Path:
        """Write one JSON object per line.

        Raises:
            StorageError: If writing fails; no partial file is left behind.
        """
        return self.write_lines_safe(path, (self.serialize(r) for r in records))

    def read(self, path: str | Path) -> pd.DataFrame:
        """Load a catalog back as a DataFrame with one row per germ.

        Raises:
            StorageError: If the file is missing or a line is not JSON.
        """
        rows = []
        for lineno, line in enumerate(self.read_text_safe(path).splitlines(), start=1):
            if not line.strip():
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise StorageError(f"[{self.name}] line {lineno} of {path} is not JSON: {e}") from e
        if not rows:
            return pd.DataFrame(columns=CATALOG_COLUMNS)
        return pd.DataFrame(rows)
