# views/fukui_view.py
"""Fukui invariants of a germ, from the closed forms or from a resolution."""
import click

from services.fukui_service import fukui_brieskorn, fukui_from_resolution
from utils.constants import ExitCode
from utils.render_utils import render_arith_set
from views.common import RunOptions, echo_json, load_germ_input, run_guarded


def render(
    opts: RunOptions,
    germ: str | None = None,
    weights: str | None = None,
    resolution: str | None = None,
) -> int:
    """Print A(f), A+(f), A-(f) as unions of progressions, tails and points."""

    def body() -> int:
        source = load_germ_input(germ, weights, resolution)
        if source.brieskorn is not None:
            triple = fukui_brieskorn(source.brieskorn)
        else:
            triple = fukui_from_resolution(source.resolution)
        rendered = {
            "A": render_arith_set(triple.total),
            "A+": render_arith_set(triple.plus),
            "A-": render_arith_set(triple.minus),
        }
        if opts.json_output:
            echo_json({"germ": source.label, "rendered": rendered, "sets": triple.to_dict()})
        else:
            click.echo(source.label)
            for name, text in rendered.items():
                click.echo(f"  {name:<3}= {text}")
        return int(ExitCode.OK)

    return run_guarded("fukui", body)
