# views/common.py
"""Output and error plumbing shared by the command views."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict

import click

from services.toric_service import WeightVector, build_resolution
from store.errors import ApplicationError, InconclusiveError, StorageError
from store.repositories.resolution_repo import ResolutionRepository
from utils.constants import SCHEMA_VERSION, ExitCode
from utils.germ_parser import parse_germ, parse_weights

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunOptions:
    json_output: bool = False
    order: int | None = None


def echo_json(doc: Dict[str, Any]) -> None:
    click.echo(json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2, ensure_ascii=False))


def report_error(e: Exception) -> int:
    message = f"Error: {e}"
    if isinstance(e, InconclusiveError) and e.suggested_order:
        message += f" (retry with --order {e.suggested_order})"
    click.echo(message, err=True)
    return int(ExitCode.ERROR)


def run_guarded(command: str, body: Callable[[], int]) -> int:
    """Run a view body; domain and storage failures become exit code 3."""
    try:
        return body()
    except (StorageError, ApplicationError) as e:
        logger.debug("%s failed", command, exc_info=True)
        return report_error(e)
    except Exception as e:
        logger.debug("%s crashed", command, exc_info=True)
        return report_error(ApplicationError(f"Unexpected error in {command}: {e}"))


# --- Input routing --------------------------------------------------------------------

@dataclass(frozen=True)
class GermInput:
    """What a germ option resolved to: a Brieskorn germ, or resolution data."""

    label: str
    brieskorn: Any = None
    resolution: Any = None


def load_germ_input(
    germ: str | None,
    weights: str | None,
    resolution_path: str | None,
) -> GermInput:
    """Route ``--germ``/``--weights``/``--resolution`` to a computable object.

    Brieskorn germs without ``--weights`` stay symbolic; everything else goes
    through a toric build or a hand-authored resolution file.
    """
    if resolution_path:
        if germ:
            raise ApplicationError("pass either --germ or --resolution, not both")
        return GermInput(str(resolution_path), resolution=ResolutionRepository().load(resolution_path))
    if not germ:
        raise ApplicationError("missing --germ (or --resolution)")
    expr = parse_germ(germ)
    if weights is None and expr.is_brieskorn():
        g = expr.to_brieskorn()
        return GermInput(str(g), brieskorn=g)
    if weights is None:
        raise ApplicationError(f"{expr} is not a Brieskorn germ; pass --weights m,k")
    m, k = parse_weights(weights)
    return GermInput(str(expr), resolution=build_resolution(expr.to_support(), WeightVector(m, k)))
