# views/catalog_view.py
"""Catalog command: sweep an exponent grid into a JSONL file."""
import click

from services.catalog_service import build_catalog
from store.repositories.catalog_repo import CatalogRepository
from utils.constants import ExitCode
from views.common import RunOptions, echo_json, run_guarded


def render(opts: RunOptions, n_vars: int, max_exp: int, out: str, workers: int = 1) -> int:
    """Write the JSONL catalog of the exponent grid and print a summary."""

    def body() -> int:
        catalog = build_catalog(n_vars, max_exp, workers=workers)
        path = CatalogRepository().write(out, catalog.records)
        summary = {
            "out": str(path),
            "germs": len(catalog.records),
            "classes": catalog.class_count,
            "unresolved_pairs": [list(p) for p in catalog.unresolved],
        }
        if opts.json_output:
            echo_json(summary)
        else:
            click.echo(
                f"{summary['germs']} germs in {summary['classes']} classes "
                f"({len(catalog.unresolved)} unresolved pairs) -> {path}"
            )
        return int(ExitCode.OK)

    return run_guarded("catalog", body)
