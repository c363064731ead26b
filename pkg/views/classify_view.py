# views/classify_view.py
"""Classify command.

Prints the verdict for a pair of Brieskorn germs; the exit code encodes the
verdict kind (0 equivalent, 1 not equivalent, 2 unresolved).
"""
import click

from services.classify_service import classify_pair
from utils.constants import ExitCode, VerdictKind
from utils.germ_parser import parse_germ
from views.common import RunOptions, echo_json, run_guarded

EXIT_FOR_VERDICT = {
    VerdictKind.EQUIVALENT: ExitCode.EQUIVALENT,
    VerdictKind.NOT_EQUIVALENT: ExitCode.NOT_EQUIVALENT,
    VerdictKind.UNRESOLVED: ExitCode.UNRESOLVED,
}


def render(opts: RunOptions, f: str, g: str) -> int:
    """
    Decide blow-analytic equivalence of two Brieskorn germs.

    Returns:
        0 Equivalent, 1 NotEquivalent, 2 Unresolved, 3 on error.
    """

    def body() -> int:
        gf = parse_germ(f).to_brieskorn()
        gg = parse_germ(g).to_brieskorn()
        verdict = classify_pair(gf, gg, opts.order)
        if opts.json_output:
            echo_json({"f": str(gf), "g": str(gg), "verdict": verdict.to_dict()})
        else:
            click.echo(f"{gf}  vs  {gg}: {verdict.describe()}")
        return int(EXIT_FOR_VERDICT[verdict.kind])

    return run_guarded("classify", body)
