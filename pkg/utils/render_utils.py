# utils/render_utils.py
"""Human-readable rendering of series and Fukui sets for the CLI."""
from __future__ import annotations

from math import lcm
from typing import List, Sequence

from services.fukui_service import ArithSet, INFINITY_LABEL
from services.series_service import TruncSeries

# lcm cap when checking whether progressions cover a residue class
_COVER_CHECK_LIMIT = 10**6


def render_series(s: TruncSeries, var: str = "T") -> str:
    """``2T^3 - 2T^6 + O(T^31)`` style rendering; ``0 + O(...)`` for the zero series."""
    parts: List[str] = []
    for n, c in s.nonzero():
        mono = var if n == 1 else f"{var}^{n}"
        mag = abs(c)
        body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    head = " ".join(parts) if parts else "0"
    return f"{head} + O({var}^{s.order + 1})"


def _covers_all(multiple_of: Sequence[int], start: int, period: int, residue: int) -> bool:
    """True iff every ``n > start`` with ``n ≡ residue (mod period)`` is a multiple of one step."""
    if not multiple_of:
        return False
    span = lcm(period, *multiple_of)
    if span > _COVER_CHECK_LIMIT:
        return False
    first = start + 1 + (residue - start - 1) % period
    return all(any(n % e == 0 for e in multiple_of) for n in range(first, first + span, period))


def _progression_inside(a: ArithSet, e: int) -> bool:
    limit = a.transient_max + e * a.period + e
    return all(n in a for n in range(e, limit + 1, e))


def _braces(items: Sequence[int]) -> str:
    return "{" + ", ".join(str(n) for n in items) + "}"


def render_arith_set(a: ArithSet) -> str:
    """Render like ``3N ∪ 5N ∪ N≥16 ∪ {∞}``.

    Progressions come first, then a periodic block or a tail, then leftover
    singletons, then ``{∞}``. The empty set renders as ``∅``.
    """
    if a.is_empty():
        return "∅"
    pieces: List[str] = []
    big_l, period = a.transient_max, a.period
    steps: List[int] = []

    def covered(n: int) -> bool:
        return any(n % e == 0 for e in steps)

    if all(a.residues):
        # a tail exists: t0 is where [t0, ∞) starts
        t0 = big_l + 1
        while t0 > 1 and (t0 - 1) in a:
            t0 -= 1
        for e in range(1, t0):
            if e in a and not covered(e) and 2 * e < t0 and _progression_inside(a, e):
                steps.append(e)
        start = t0
        while covered(start):
            start += 1
        pieces += [f"{e}N" for e in steps]
        pieces.append("N" if start == 1 else f"N≥{start}")
        singles = [n for n in range(1, t0) if n in a and not covered(n)]
    elif any(a.residues):
        horizon = big_l + period
        for e in range(1, horizon + 1):
            if e in a and not covered(e) and _progression_inside(a, e):
                steps.append(e)
        classes = [r for r in range(period) if a.residues[r]]
        open_classes = [r for r in classes if not _covers_all(steps, big_l, period, r)]
        if open_classes:
            # the periodic block already holds every element above L
            steps = [e for e in steps if e <= big_l]
            first = min(n for n in range(big_l + 1, big_l + period + 1) if n % period in open_classes)
            residues = ",".join(str(r) for r in open_classes)
            pieces += [f"{e}N" for e in steps]
            pieces.append(f"{{n≥{first} : n≡{residues} (mod {period})}}")
            singles = [
                n for n in range(1, big_l + 1)
                if n in a and not covered(n)
            ]
        else:
            pieces += [f"{e}N" for e in steps]
            singles = [n for n in range(1, big_l + 1) if n in a and not covered(n)]
    else:
        singles = [n for n in range(1, big_l + 1) if n in a]

    if singles:
        pieces.append(_braces(singles))
    if a.has_infinity:
        pieces.append("{" + INFINITY_LABEL + "}")
    return " ∪ ".join(pieces)


def render_table(rows: Sequence[Sequence[object]], headers: Sequence[str]) -> str:
    """Plain fixed-width table."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
