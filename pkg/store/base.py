# store/base.py
import json
import os
from pathlib import Path
from typing import Any, Dict, Iterable

from .errors import StorageError


class BaseRepository:
    def __init__(self, name: str):
        self.name = name

    def read_text_safe(self, path: str | Path) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except Exception as e:
            raise StorageError(f"[{self.name}] read failed: {e}") from e

    def load_json_safe(self, path: str | Path) -> Any:
        text = self.read_text_safe(path)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise StorageError(f"[{self.name}] {path} is not valid JSON: {e}") from e

    def write_lines_safe(self, path: str | Path, lines: Iterable[str]) -> Path:
        """Write to a temporary sibling and rename it into place.

        The partial file is removed if anything fails.
        """
        target = Path(path)
        tmp = target.with_name(f".{target.name}.partial")
        try:
            with tmp.open("w", encoding="utf-8", newline="\n") as fh:
                for line in lines:
                    fh.write(line)
                    fh.write("\n")
            os.replace(tmp, target)
            return target
        except Exception as e:
            tmp.unlink(missing_ok=True)
            raise StorageError(f"[{self.name}] write failed: {e}") from e

    def dump_json_safe(self, path: str | Path, doc: Dict[str, Any]) -> Path:
        return self.write_lines_safe(path, [json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)])
