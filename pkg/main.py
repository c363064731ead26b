"""Command-line entry point: zeta functions, Fukui invariants and classification
of Brieskorn germs."""

import sys

import click

from utils import settings
from utils.constants import TABLE_NAMES, ExitCode
from utils.logging_utils import configure_logging
from views import catalog_view, classify_view, fukui_view, resolve_view, table_view, zeta_view
from views.common import RunOptions


# --- COMMAND REGISTRY ---------------------------------------------------------
COMMANDS = {
    "zeta":     lambda opts, **kw: zeta_view.render(opts, **kw),
    "fukui":    lambda opts, **kw: fukui_view.render(opts, **kw),
    "resolve":  lambda opts, **kw: resolve_view.render(opts, **kw),
    "classify": lambda opts, **kw: classify_view.render(opts, **kw),
    "table":    lambda opts, **kw: table_view.render(opts, **kw),
    "catalog":  lambda opts, **kw: catalog_view.render(opts, **kw),
}


class BlowzetaGroup(click.Group):
    """Group whose usage errors exit with 3, keeping 0/1/2 for verdicts."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except click.ClickException as e:
            e.show()
            rv = int(ExitCode.ERROR)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            rv = int(ExitCode.ERROR)
        if standalone_mode:
            sys.exit(int(rv or 0))
        return rv


def _options(ctx: click.Context, json_output: bool, order: int | None) -> RunOptions:
    base: RunOptions = ctx.obj or RunOptions()
    return RunOptions(json_output=json_output or base.json_output, order=order or base.order)


def _dispatch(ctx: click.Context, name: str, json_output: bool, order: int | None, /, **kw) -> None:
    ctx.exit(COMMANDS[name](_options(ctx, json_output, order), **kw))


def common_options(fn):
    fn = click.option("--order", type=click.IntRange(min=1), default=None, help="Truncation order.")(fn)
    fn = click.option("--json", "json_output", is_flag=True, help="Print JSON instead of text.")(fn)
    return fn


def germ_options(fn):
    fn = click.option("--resolution", type=click.Path(dir_okay=False), default=None,
                      help="Hand-authored resolution data (JSON).")(fn)
    fn = click.option("--weights", default=None, help="Weight vector m,k for non-Brieskorn polynomials.")(fn)
    fn = click.option("--germ", default=None, help='Germ expression, e.g. "x^3 - y^6".')(fn)
    return fn


@click.group(cls=BlowzetaGroup)
@click.option("--json", "json_output", is_flag=True, help="Print JSON instead of text.")
@click.option("--order", type=click.IntRange(min=1), default=None, help="Truncation order.")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def cli(ctx: click.Context, json_output: bool, order: int | None, verbose: bool) -> None:
    """Zeta functions and Fukui invariants of real germs."""
    configure_logging("DEBUG" if verbose else settings.LOG_LEVEL)
    ctx.obj = RunOptions(json_output=json_output, order=order)


@cli.command()
@germ_options
@click.option("--modified", is_flag=True, help="Print the modified coefficients.")
@click.option("--mod2", is_flag=True, help="Reduce coefficients mod 2.")
@common_options
@click.pass_context
def zeta(ctx, germ, weights, resolution, modified, mod2, json_output, order):
    """Zeta functions Z+, Z-, Z of a germ."""
    _dispatch(ctx, "zeta", json_output, order, germ=germ, weights=weights,
              resolution=resolution, modified=modified, mod2=mod2)


@cli.command()
@germ_options
@common_options
@click.pass_context
def fukui(ctx, germ, weights, resolution, json_output, order):
    """Fukui invariants A, A+, A- of a germ."""
    _dispatch(ctx, "fukui", json_output, order, germ=germ, weights=weights, resolution=resolution)


@cli.command()
@click.option("--germ", required=True, help="Two-variable polynomial.")
@click.option("--weights", default=None, help="Weight vector m,k (inferred for Brieskorn germs).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Also write the JSON here.")
@common_options
@click.pass_context
def resolve(ctx, germ, weights, out, json_output, order):
    """Toric resolution data of a weighted-homogeneous polynomial."""
    _dispatch(ctx, "resolve", json_output, order, germ=germ, weights=weights, out=out)


@cli.command()
@click.argument("f")
@click.argument("g")
@common_options
@click.pass_context
def classify(ctx, f, g, json_output, order):
    """Blow-analytic classification of two Brieskorn germs (exit 0/1/2)."""
    _dispatch(ctx, "classify", json_output, order, f=f, g=g)


@cli.command()
@click.option("--name", type=click.Choice(TABLE_NAMES), required=True)
@click.option("--pmax", type=click.IntRange(min=2), default=8, show_default=True)
@click.option("--p", "p", type=int, default=3, show_default=True)
@click.option("--k", "k", type=int, default=3, show_default=True)
@click.option("--check-resolution", is_flag=True, help="Also compare against toric resolutions.")
@common_options
@click.pass_context
def table(ctx, name, pmax, p, k, check_resolution, json_output, order):
    """Rebuild a reference table."""
    _dispatch(ctx, "table", json_output, order, name=name, pmax=pmax, p=p, k=k,
              check_resolution=check_resolution)


@cli.command()
@click.option("--vars", "n_vars", type=click.IntRange(2, 3), required=True)
@click.option("--max-exp", type=click.IntRange(min=2), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Worker processes (default: BLOWZETA_CATALOG_WORKERS).")
@common_options
@click.pass_context
def catalog(ctx, n_vars, max_exp, out, workers, json_output, order):
    """JSONL catalog of equivalence classes on an exponent grid."""
    _dispatch(ctx, "catalog", json_output, order, n_vars=n_vars, max_exp=max_exp, out=out,
              workers=workers or settings.CATALOG_WORKERS)


def main() -> None:
    cli(prog_name="blowzeta")


if __name__ == "__main__":
    main()
