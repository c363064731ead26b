# views/resolve_view.py
"""Resolve command: toric fan, divisors and strata of a weighted homogeneous germ."""
import click

from services.toric_service import WeightVector, hj_cfrac, infer_brieskorn_weights, ray_vectors
from store.errors import ApplicationError
from store.repositories.resolution_repo import ResolutionRepository
from utils.constants import ExitCode
from utils.germ_parser import parse_germ, parse_weights
from views.common import RunOptions, echo_json, load_germ_input, run_guarded


def render(opts: RunOptions, germ: str, weights: str | None = None, out: str | None = None) -> int:
    """
    Print the toric resolution data of a two-variable polynomial as JSON.

    The document holds the divisors and strata (the format `--resolution`
    reads back), the ray sequence and both Hirzebruch-Jung expansions.
    With ``--out`` it is also written to a file.
    """

    def body() -> int:
        expr = parse_germ(germ)
        if weights is not None:
            w = WeightVector(*parse_weights(weights))
        elif expr.is_brieskorn() and len(expr.variables) == 2:
            w = infer_brieskorn_weights(*(t.powers[0][1] for t in expr.terms))
        else:
            raise ApplicationError(f"cannot infer weights for {expr}; pass --weights m,k")
        data = load_germ_input(germ, f"{w.m},{w.k}", None).resolution
        repo = ResolutionRepository()
        doc = {
            **repo.to_document(data),
            "weights": [w.m, w.k],
            "rays": [list(r) for r in ray_vectors(w)],
            "hj": {"m/k": hj_cfrac(w.m, w.k), "k/m": hj_cfrac(w.k, w.m)},
        }
        if out:
            repo.dump_json_safe(out, doc)
        doc.pop("schema_version")
        echo_json({"germ": str(expr), **doc})
        if out and not opts.json_output:
            click.echo(f"written to {out}", err=True)
        return int(ExitCode.OK)

    return run_guarded("resolve", body)
