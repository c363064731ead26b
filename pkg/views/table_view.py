# views/table_view.py
"""Reference table command."""
import click

from store.errors import ApplicationError
from tables.invariant_tables import fukui_2var_table, fingerprint_table
from utils.constants import TABLE_NAMES, ExitCode
from utils.render_utils import render_table
from views.common import RunOptions, echo_json, run_guarded


def render(
    opts: RunOptions,
    name: str,
    pmax: int = 8,
    p: int = 3,
    k: int = 3,
    check_resolution: bool = False,
) -> int:
    """Rebuild one of the reference tables (`fukui-2var` or `table7`)."""

    def body() -> int:
        if name == "fukui-2var":
            df = fukui_2var_table(pmax, check_resolution=check_resolution)
        elif name == "table7":
            df = fingerprint_table(p, k)
        else:
            raise ApplicationError(f"unknown table {name!r}; choose one of {', '.join(TABLE_NAMES)}")
        if opts.json_output:
            echo_json({"table": name, "rows": df.to_dict(orient="records")})
        else:
            click.echo(render_table(df.itertuples(index=False), list(df.columns)))
        return int(ExitCode.OK)

    return run_guarded("table", body)
