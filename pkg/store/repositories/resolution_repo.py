# store/repositories/resolution_repo.py
from pathlib import Path
from typing import Any, Dict

from jsonschema import Draft202012Validator

from services.resolution_service import ResolutionData, require_valid
from utils.constants import SCHEMA_VERSION
from ..base import BaseRepository
from ..errors import ApplicationError

RESOLUTION_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ResolutionData",
    "type": "object",
    "required": ["divisors", "strata"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "divisors": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "N", "nu", "exceptional"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "N": {"type": "integer", "minimum": 1},
                    "nu": {"type": "integer", "minimum": 1},
                    "exceptional": {"type": "boolean"},
                },
            },
        },
        "strata": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["divisors", "chi_c", "alpha_plus", "alpha_minus"],
                "additionalProperties": False,
                "properties": {
                    "divisors": {"type": "array", "minItems": 1, "items": {"type": "string"}},
                    "chi_c": {"type": "integer"},
                    "alpha_plus": {"type": "integer", "minimum": 0},
                    "alpha_minus": {"type": "integer", "minimum": 0},
                },
            },
        },
        # informational fields written by `resolve`
        "rays": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "hj": {"type": "object"},
        "weights": {"type": "array", "items": {"type": "integer"}},
    },
}

_VALIDATOR = Draft202012Validator(RESOLUTION_SCHEMA)


class ResolutionRepository(BaseRepository):
    def __init__(self):
        super().__init__("resolution")

    def from_document(self, doc: Any) -> ResolutionData:
        """Validate a parsed JSON document and build resolution data from it.

        Args:
            doc: Parsed JSON (a dict with ``divisors`` and ``strata``).

        Returns:
            ResolutionData that also passes the stratum/divisor invariants.

        Raises:
            ApplicationError: If the document violates the schema.
            ResolutionValidationError: If the data violates a stratum invariant.
        """
        errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(e.absolute_path))
        if errors:
            details = "; ".join(
                f"{'/'.join(str(p) for p in e.absolute_path) or '<root>'}: {e.message}" for e in errors
            )
            raise ApplicationError(f"resolution document does not match the schema: {details}")
        data = ResolutionData.from_dict(doc)
        require_valid(data)
        return data

    def to_document(self, data: ResolutionData) -> Dict[str, Any]:
        return {"schema_version": SCHEMA_VERSION, **data.to_dict()}

    def load(self, path: str | Path) -> ResolutionData:
        """
        Raises:
            StorageError: If the file cannot be read or is not JSON.
        """
        return self.from_document(self.load_json_safe(path))

    def save(self, path: str | Path, data: ResolutionData) -> Path:
        require_valid(data)
        return self.dump_json_safe(path, self.to_document(data))
