"""
Invariant Tables
Pure functions that rebuild the two reference tables as pandas DataFrames.
"""

from __future__ import annotations

import itertools
import logging
from typing import Dict, List

import pandas as pd

from store.errors import ApplicationError
from services.classify_service import Fingerprint3, fingerprint_3var, normalize_brieskorn
from services.fukui_service import fukui_from_resolution, fukui_table_2var, fukui_ts_fold
from services.toric_service import resolve_brieskorn
from services.zeta_service import BrieskornGerm
from utils.constants import FINGERPRINT_R_OFFSETS, FINGERPRINT_ROWS
from utils.render_utils import render_arith_set

logger = logging.getLogger(__name__)

FUKUI_COLUMNS = ["germ", "p", "q", "A", "A+", "A-", "fold_agrees", "resolution_agrees"]
FINGERPRINT_COLUMNS = ["row", "A+_{kp+1}", "A-_{kp+1}", "A±_{kp+2}", "kp+1 in A+", "kp+1 in A-"]


# ---------- Fukui sets of ±x^p ± y^q ----------

def two_variable_germs(pmax: int, pmin: int = 2) -> List[BrieskornGerm]:
    """Normalized ``±x^p ± y^q`` with ``pmin <= p <= q <= pmax``, in canonical order."""
    seen: Dict[BrieskornGerm, None] = {}
    for p in range(pmin, pmax + 1):
        for q in range(p, pmax + 1):
            for sp, sq in itertools.product((1, -1), repeat=2):
                seen.setdefault(normalize_brieskorn(BrieskornGerm.of((p, sp), (q, sq))), None)
    return list(seen)


def fukui_2var_table(pmax: int, check_resolution: bool = False) -> pd.DataFrame:
    """
    One row per normalized germ: closed-form A, A+, A- plus agreement flags.
    ``fold_agrees`` compares against the Thom-Sebastiani fold; ``resolution_agrees``
    (None unless requested) against the toric resolution.
    """
    if pmax < 2:
        raise ApplicationError(f"pmax must be >= 2, got {pmax}")
    rows = []
    for g in two_variable_germs(pmax):
        closed = fukui_table_2var(g)
        resolved = fukui_from_resolution(resolve_brieskorn(g)) == closed if check_resolution else None
        p, q = g.exponents
        rows.append(
            {
                "germ": str(g),
                "p": p,
                "q": q,
                "A": render_arith_set(closed.total),
                "A+": render_arith_set(closed.plus),
                "A-": render_arith_set(closed.minus),
                "fold_agrees": fukui_ts_fold(g) == closed,
                "resolution_agrees": resolved,
            }
        )
    logger.info("Fukui table built for %d germs", len(rows))
    return pd.DataFrame(rows, columns=FUKUI_COLUMNS)


# ---------- Three-variable fingerprints ----------

def _exponent(kind: str, kp: int, r_offset: int) -> int:
    return {"kp": kp, "kp+1": kp + 1, "kp+2": kp + 2, "r": kp + r_offset}[kind]


def fingerprint_row(p: int, k: int, y_signs, y_kind: str, z_signs, z_kind: str) -> Fingerprint3:
    """
    Fingerprint shared by every instance of one row shape.
    Raises ApplicationError when two instances disagree.
    """
    kp = k * p
    offsets = FINGERPRINT_R_OFFSETS if "r" in (y_kind, z_kind) else FINGERPRINT_R_OFFSETS[:1]
    found = set()
    for off, sy, sz in itertools.product(offsets, y_signs, z_signs):
        tail = BrieskornGerm.of((_exponent(y_kind, kp, off), sy), (_exponent(z_kind, kp, off), sz))
        found.add(fingerprint_3var(p, k, tail))
    if len(found) != 1:
        raise ApplicationError(f"row shape y:{y_kind} z:{z_kind} has inconsistent fingerprints {found}")
    return found.pop()


def fingerprint_table(p: int, k: int) -> pd.DataFrame:
    """Twelve rows for ``x^p + g2(y, z)``, ``p`` and ``k`` odd."""
    if p < 3 or p % 2 == 0:
        raise ApplicationError(f"p must be odd and >= 3, got {p}")
    if k < 1 or k % 2 == 0:
        raise ApplicationError(f"k must be odd and >= 1, got {k}")
    rows = []
    for label, y_signs, y_kind, z_signs, z_kind in FINGERPRINT_ROWS:
        fp = fingerprint_row(p, k, y_signs, y_kind, z_signs, z_kind)
        rows.append([label, *fp.as_row()])
    return pd.DataFrame(rows, columns=FINGERPRINT_COLUMNS)
