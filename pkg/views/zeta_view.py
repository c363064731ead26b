# views/zeta_view.py
"""Zeta command.

Expands Z+, Z- and Z of a germ (closed form or resolution) to the requested
order, optionally reduced mod 2.
"""
import click

from services.resolution_service import expand_signed
from services.series_service import series_mod2
from services.zeta_service import to_modified, zeta_brieskorn
from utils import settings
from utils.constants import ExitCode
from utils.render_utils import render_series
from views.common import RunOptions, echo_json, load_germ_input, run_guarded


def compute(germ: str | None, weights: str | None, resolution: str | None, order: int):
    source = load_germ_input(germ, weights, resolution)
    if source.brieskorn is not None:
        return source.label, zeta_brieskorn(source.brieskorn, order)
    return source.label, expand_signed(source.resolution, order)


def render(
    opts: RunOptions,
    germ: str | None = None,
    weights: str | None = None,
    resolution: str | None = None,
    modified: bool = False,
    mod2: bool = False,
) -> int:
    """
    Print the zeta triple of a germ.

    Brieskorn germs use the closed forms; two-variable weighted-homogeneous
    polynomials (``--weights m,k``) and ``--resolution`` files go through the
    Denef-Loeser formulas. ``--modified`` prints the modified coefficients and
    ``--mod2`` reduces everything mod 2.

    Returns:
        Exit code 0, or 3 on error.
    """

    def body() -> int:
        order = opts.order or settings.DEFAULT_ORDER
        label, z = compute(germ, weights, resolution, order)
        if modified:
            m = to_modified(z)
            rows = {"tplus": m.tplus, "tminus": m.tminus}
            names = {"tplus": "Z~+(T)", "tminus": "Z~-(T)"}
        else:
            rows = {"plus": z.plus, "minus": z.minus, "total": z.total()}
            names = {"plus": "Z+(T)", "minus": "Z-(T)", "total": "Z(T)"}
        if mod2:
            rows = {k: series_mod2(v) for k, v in rows.items()}

        if opts.json_output:
            echo_json(
                {
                    "germ": label,
                    "order": order,
                    "form": "modified" if modified else "zeta",
                    "mod2": mod2,
                    **{k: list(v.coeffs) for k, v in rows.items()},
                }
            )
        else:
            suffix = " mod 2" if mod2 else ""
            click.echo(f"{label}  (order {order}{suffix})")
            for key, series in rows.items():
                click.echo(f"  {names[key]:<7} = {render_series(series)}")
        return int(ExitCode.OK)

    return run_guarded("zeta", body)

