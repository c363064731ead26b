# services/catalog_service.py
"""Enumerate Brieskorn germs on an exponent grid and group them into classes."""
from __future__ import annotations

import hashlib
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from store.errors import ApplicationError
from services.classify_service import classify_pair, comparison_order, normalize_brieskorn
from services.fukui_service import FukuiTriple, fukui_brieskorn
from services.zeta_service import BrieskornGerm, zeta_brieskorn
from utils.constants import SCHEMA_VERSION, VerdictKind
from utils.render_utils import render_arith_set

logger = logging.getLogger(__name__)


@dataclass
class Catalog:
    records: List[Dict[str, Any]]
    class_count: int
    unresolved: List[Tuple[str, str]] = field(default_factory=list)


def enumerate_germs(n_vars: int, max_exp: int, min_exp: int = 2) -> List[BrieskornGerm]:
    """Normalized germs with ``min_exp <= exponents <= max_exp``, sorted canonically."""
    if n_vars < 1:
        raise ApplicationError(f"need at least one variable, got {n_vars}")
    if max_exp < min_exp:
        raise ApplicationError(f"max exponent {max_exp} is below {min_exp}")
    found = set()
    for exps in itertools.combinations_with_replacement(range(min_exp, max_exp + 1), n_vars):
        for signs in itertools.product((1, -1), repeat=n_vars):
            found.add(normalize_brieskorn(BrieskornGerm.of(*zip(exps, signs))))
    return sorted(found, key=lambda g: (g.exponents, tuple(-s for s in g.signs)))


def zeta_digest(g: BrieskornGerm) -> str:
    """Short SHA-256 digest of the zeta triple at the germ's own comparison order."""
    z = zeta_brieskorn(g, comparison_order(g, g))
    payload = ",".join(str(c) for c in z.plus.coeffs + z.minus.coeffs)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _invariants(g: BrieskornGerm) -> Tuple[FukuiTriple, str]:
    return fukui_brieskorn(g), zeta_digest(g)


def build_catalog(n_vars: int, max_exp: int, workers: int = 1) -> Catalog:
    """Records for every germ of the grid, with class ids in order of first appearance.

    Germs are bucketed by their Fukui triple; inside a bucket each germ is
    compared against the representatives found so far. Unresolved pairs stay in
    separate classes and are listed in ``Catalog.unresolved``.
    """
    if n_vars not in (2, 3):
        raise ApplicationError(f"catalogs cover two or three variables, got {n_vars}")
    germs = enumerate_germs(n_vars, max_exp)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            invariants = list(pool.map(_invariants, germs, chunksize=8))
    else:
        invariants = [_invariants(g) for g in germs]
    logger.info("computed invariants for %d germs with %d worker(s)", len(germs), workers)

    representatives: Dict[FukuiTriple, List[Tuple[BrieskornGerm, int]]] = {}
    unresolved: List[Tuple[str, str]] = []
    records: List[Dict[str, Any]] = []
    next_id = 0
    for g, (fk, digest) in zip(germs, invariants):
        class_id = None
        for rep, rep_id in representatives.get(fk, []):
            verdict = classify_pair(rep, g)
            if verdict.kind is VerdictKind.EQUIVALENT:
                class_id = rep_id
                break
            if verdict.kind is VerdictKind.UNRESOLVED:
                unresolved.append((str(rep), str(g)))
        if class_id is None:
            class_id = next_id
            next_id += 1
            representatives.setdefault(fk, []).append((g, class_id))
        records.append(
            {
                "schema_version": SCHEMA_VERSION,
                "germ": str(g),
                "exponents": list(g.exponents),
                "signs": list(g.signs),
                "fukui": {
                    "A": render_arith_set(fk.total),
                    "A+": render_arith_set(fk.plus),
                    "A-": render_arith_set(fk.minus),
                },
                "zeta_digest": digest,
                "class_id": class_id,
            }
        )
    logger.info("catalog: %d germs in %d classes, %d unresolved pairs", len(records), next_id, len(unresolved))
    return Catalog(records, next_id, unresolved)
