# store/__init__.py

"""File storage for the blowzeta tools.

Contains:
    - repositories.resolution_repo: schema-checked resolution data documents
    - repositories.catalog_repo: JSONL catalogs of germ classes
    - StorageError: wrapper for file-system failures

Repositories are imported from their modules; the services import
``store.errors`` and must not pull the repositories in with it.
"""

from .errors import StorageError

__all__ = ["StorageError"]
