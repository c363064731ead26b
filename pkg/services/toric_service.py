# services/toric_service.py
"""Toric resolution of nondegenerate weighted-homogeneous plane germs.

The fan is the unimodular subdivision of the first quadrant generated by the
Hirzebruch-Jung continued fractions of ``m/k`` and ``k/m``. For consecutive rays
``v = (a, b)`` and ``w = (c, d)`` the chart is ``(X, Y) -> (X^a Y^c, X^b Y^d)``
with ``E_v = {X = 0}`` and ``E_w = {Y = 0}``; there
``f = X^{N_v} Y^{N_w} u(X, Y)``. Each exceptional divisor is read in the chart
shared with its successor, where ``Y = 0`` is the corner with the successor and
``Y = ∞`` the corner with the predecessor.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, List, Mapping, Tuple

from store.errors import (
    ApplicationError,
    DegenerateError,
    NotCoprimeError,
    NotWeightedHomogeneousError,
)
from services.resolution_service import Divisor, ResolutionData, Stratum, require_valid
from services.zeta_service import BrieskornGerm
from utils.sturm_utils import (
    constant_sign,
    count_real_roots_split,
    is_squarefree,
    leading_sign,
    univariate,
)

logger = logging.getLogger(__name__)

Ray = Tuple[int, int]


@dataclass(frozen=True)
class WeightVector:
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.k < 1:
            raise ApplicationError(f"weights must be positive, got ({self.m}, {self.k})")
        if gcd(self.m, self.k) != 1:
            raise NotCoprimeError(f"weights ({self.m}, {self.k}) are not coprime")

    @property
    def ray(self) -> Ray:
        return (self.m, self.k)


@dataclass(frozen=True)
class RaySeq:
    """Rays of a unimodular fan of the first quadrant, from (1,0) to (0,1)."""

    rays: Tuple[Ray, ...]

    def __post_init__(self) -> None:
        rays = tuple(tuple(r) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        if len(rays) < 2 or rays[0] != (1, 0) or rays[-1] != (0, 1):
            raise ApplicationError(f"ray sequence must run from (1,0) to (0,1): {rays}")
        for (a, b), (c, d) in zip(rays, rays[1:]):
            if a * d - b * c != 1:
                raise ApplicationError(f"cone ({a},{b}),({c},{d}) is not unimodular")

    def __len__(self) -> int:
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)


@dataclass(frozen=True)
class Monomial:
    i: int
    j: int
    coeff: int


@dataclass(frozen=True)
class SupportPoly:
    """A bivariate integer polynomial vanishing at the origin."""

    monomials: Tuple[Monomial, ...]

    def __post_init__(self) -> None:
        monos = tuple(sorted(self.monomials, key=lambda t: (t.i, t.j)))
        if not monos:
            raise ApplicationError("polynomial is identically zero")
        seen = set()
        for t in monos:
            if t.i < 0 or t.j < 0:
                raise ApplicationError(f"negative exponent in monomial ({t.i}, {t.j})")
            if t.coeff == 0:
                raise ApplicationError(f"zero coefficient at ({t.i}, {t.j})")
            if (t.i, t.j) == (0, 0):
                raise ApplicationError("polynomial does not vanish at the origin")
            if (t.i, t.j) in seen:
                raise ApplicationError(f"duplicate monomial ({t.i}, {t.j})")
            seen.add((t.i, t.j))
        object.__setattr__(self, "monomials", monos)

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[int, int], int]) -> "SupportPoly":
        """Collect ``{(i, j): coeff}``; monomials that cancel are dropped."""
        return cls(tuple(Monomial(i, j, c) for (i, j), c in terms.items() if c))

    def to_dict(self) -> Dict[str, Any]:
        return {"monomials": [{"i": t.i, "j": t.j, "coeff": t.coeff} for t in self.monomials]}

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "SupportPoly":
        try:
            return cls(tuple(Monomial(int(t["i"]), int(t["j"]), int(t["coeff"])) for t in doc["monomials"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed polynomial document: {e}") from e


@dataclass(frozen=True)
class DivisorMults:
    N: int
    nu: int


# --- Fan ----------------------------------------------------------------------------

def hj_cfrac(m: int, k: int) -> List[int]:
    """Hirzebruch-Jung expansion ``m/k = a_1 - 1/(a_2 - 1/(... - 1/a_r))``.

    ``k = 0`` gives the empty list.
    """
    if m < 1 or k < 0:
        raise ApplicationError(f"continued fraction needs m >= 1, k >= 0, got ({m}, {k})")
    if k == 0:
        return []
    if gcd(m, k) != 1:
        raise NotCoprimeError(f"({m}, {k}) is not coprime")
    out: List[int] = []
    num, den = m, k
    while den:
        a = -(-num // den)
        out.append(a)
        num, den = den, a * den - num
    return out


def _walk(coeffs: List[int], start: Tuple[Ray, Ray]) -> List[Ray]:
    """Run ``v_{i+1} = a_i v_i - v_{i-1}`` from the two starting vectors."""
    prev, cur = start
    out = [prev, cur]
    for a in coeffs[1:]:
        prev, cur = cur, (a * cur[0] - prev[0], a * cur[1] - prev[1])
        out.append(cur)
    return out


def ray_vectors(w: WeightVector) -> RaySeq:
    """Rays ``(1,0), (m_2,k_2) .. (m,k) .. (m'_2,k'_2), (0,1)`` of the fan of ``w``."""
    m, k = w.m, w.k
    a = hj_cfrac(m, k)
    b = hj_cfrac(k, m)
    lower = _walk(a, ((1, 0), (a[0], 1)))
    upper = _walk(b, ((0, 1), (1, b[0])))
    if lower[-1] != (m, k) or upper[-1] != (m, k):
        raise ApplicationError(f"ray recurrences did not end at ({m}, {k})")
    # upper runs (0,1) -> (m,k); reverse it and drop the shared weight ray
    return RaySeq(tuple(lower) + tuple(reversed(upper[:-1])))


def divisor_mults(s: SupportPoly, v: Ray) -> DivisorMults:
    a, b = v
    return DivisorMults(min(a * t.i + b * t.j for t in s.monomials), a + b)


def chart_unit(s: SupportPoly, v: Ray, w: Ray) -> Dict[int, int]:
    """``u(0, Y)`` of the chart of the cone ``(v, w)`` as ``{exponent: coeff}``."""
    (a, b), (c, d) = v, w
    n_v = divisor_mults(s, v).N
    n_w = divisor_mults(s, w).N
    out: Dict[int, int] = {}
    for t in s.monomials:
        if a * t.i + b * t.j == n_v:
            e = c * t.i + d * t.j - n_w
            out[e] = out.get(e, 0) + t.coeff
    return {e: c for e, c in out.items() if c}


# --- Circle bookkeeping -------------------------------------------------------------

def _circle_components(
    unit: Dict[int, int],
    n_v: int,
    n_w: int,
    puncture_at_zero: bool,
    puncture_at_infinity: bool,
) -> Tuple[int, List[Tuple[int, int, int]]]:
    """Split ``E_v`` (a real projective line) into components.

    The critical points on the circle, in increasing ``Y``, are the negative
    roots of ``u(0, Y)``, then 0, the positive roots, and ∞. The sign of
    ``Y^{N_w} u(0, Y)`` on each elementary interval follows from the leading
    coefficient and the number of roots to its right.

    Returns:
        (number of real roots, [(chi_c, alpha_plus, alpha_minus), ...])
    """
    poly = univariate(unit)
    neg, pos = count_real_roots_split(poly)
    lc = leading_sign(poly)
    n_roots = neg + pos
    size = n_roots + 2

    signs: List[int] = []
    for j in range(size):
        if j <= neg:
            roots_right, y_sign = n_roots - j, -1
        else:
            roots_right, y_sign = n_roots + 1 - j, 1
        signs.append(lc * (-1) ** roots_right * y_sign ** n_w)

    # separator[j]: the critical point right after interval j is a puncture
    separator = [True] * size
    separator[neg] = puncture_at_zero
    separator[size - 1] = puncture_at_infinity

    def alpha(arc_signs: List[int]) -> Tuple[int, int]:
        if n_v % 2:
            return 1, 1
        if len(set(arc_signs)) != 1:
            raise ApplicationError("sign of the chart unit is not constant along an arc")
        return (2, 0) if arc_signs[0] > 0 else (0, 2)

    if not any(separator):
        ap, am = alpha(signs)
        return n_roots, [(0, ap, am)]

    components: List[Tuple[int, int, int]] = []
    first = separator.index(True) + 1
    arc: List[int] = []
    for step in range(size):
        j = (first + step) % size
        arc.append(signs[j])
        if separator[j]:
            ap, am = alpha(arc)
            components.append((-1, ap, am))
            arc = []
    return n_roots, components


def _quadrant_alpha(n_v: int, n_w: int, unit_sign: int) -> Tuple[int, int]:
    plus = sum(
        1
        for sx in (1, -1)
        for sy in (1, -1)
        if sx ** n_v * sy ** n_w * unit_sign > 0
    )
    return plus, 4 - plus


# --- Builder ------------------------------------------------------------------------

def check_weighted_homogeneous(s: SupportPoly, w: WeightVector) -> int:
    """Return the weighted degree, or raise if the support is off the line."""
    degrees = {w.m * t.i + w.k * t.j for t in s.monomials}
    if len(degrees) != 1:
        raise NotWeightedHomogeneousError(
            f"support is not on one line {w.m}i + {w.k}j = const (degrees {sorted(degrees)})"
        )
    return degrees.pop()


def build_resolution(s: SupportPoly, w: WeightVector) -> ResolutionData:
    """Toric resolution data of ``s`` with weights ``w``.

    Divisors are the exceptional rays ``E1..En`` followed by the strict
    transforms ``S1, S2, ...``: the axis ``{x = 0}`` when ``x`` divides the
    polynomial, then one branch per real root of the weight face, then the
    axis ``{y = 0}`` when ``y`` divides it.

    Raises:
        NotWeightedHomogeneousError: If the support is not on one weighted line.
        DegenerateError: If the weight face has a repeated root.
    """
    check_weighted_homogeneous(s, w)
    rays = ray_vectors(w).rays
    last = len(rays) - 1
    mults = [divisor_mults(s, v) for v in rays]

    def zero_set(idx: int) -> bool:
        return 0 < idx < last or mults[idx].N > 0

    face = univariate(chart_unit(s, w.ray, rays[rays.index(w.ray) + 1]))
    if not is_squarefree(face):
        raise DegenerateError(f"weight face {face.as_expr()} has a repeated root")

    exc_ids = {idx: f"E{idx}" for idx in range(1, last)}
    circle: Dict[int, List[Tuple[int, int, int]]] = {}
    branch_counts: Dict[int, int] = {}
    for idx in range(1, last):
        unit = chart_unit(s, rays[idx], rays[idx + 1])
        n_roots, comps = _circle_components(
            unit,
            mults[idx].N,
            mults[idx + 1].N,
            puncture_at_zero=zero_set(idx + 1),
            puncture_at_infinity=zero_set(idx - 1),
        )
        circle[idx] = comps
        branch_counts[idx] = n_roots

    # --- strict transforms, numbered in ray order ---
    strict: List[Divisor] = []
    axis_ids: Dict[int, str] = {}
    branch_ids: Dict[int, List[str]] = {}

    def next_id() -> str:
        return f"S{len(strict) + 1}"

    if mults[0].N > 0:
        axis_ids[0] = next_id()
        strict.append(Divisor(axis_ids[0], mults[0].N, 1, False))
    for idx in range(1, last):
        branch_ids[idx] = []
        for _ in range(branch_counts[idx]):
            sid = next_id()
            branch_ids[idx].append(sid)
            strict.append(Divisor(sid, 1, 1, False))
    if mults[last].N > 0:
        axis_ids[last] = next_id()
        strict.append(Divisor(axis_ids[last], mults[last].N, 1, False))

    divisors = [Divisor(exc_ids[idx], mults[idx].N, mults[idx].nu, True) for idx in range(1, last)]
    divisors += strict

    def divisor_id(idx: int) -> str:
        return exc_ids.get(idx) or axis_ids[idx]

    # --- strata ---
    strata: List[Stratum] = []
    for idx in range(1, last):
        for chi, ap, am in circle[idx]:
            strata.append(Stratum((exc_ids[idx],), chi, ap, am))
    for idx in range(last):
        if not (zero_set(idx) and zero_set(idx + 1)):
            continue
        unit_sign = constant_sign(univariate(chart_unit(s, rays[idx], rays[idx + 1])))
        ap, am = _quadrant_alpha(mults[idx].N, mults[idx + 1].N, unit_sign)
        ids = (divisor_id(idx), divisor_id(idx + 1))
        if idx == 0:
            ids = (ids[1], ids[0])
        strata.append(Stratum(ids, 1, ap, am))
    for idx in range(1, last):
        for sid in branch_ids[idx]:
            strata.append(Stratum((exc_ids[idx], sid), 1, 2, 2))

    data = ResolutionData(tuple(divisors), tuple(strata))
    require_valid(data)
    logger.debug(
        "toric resolution for weights (%d, %d): %d divisors, %d strata",
        w.m, w.k, len(divisors), len(strata),
    )
    return data


# --- Brieskorn convenience ------------------------------------------------------------

def infer_brieskorn_weights(p: int, q: int) -> WeightVector:
    g = gcd(p, q)
    return WeightVector(q // g, p // g)


def brieskorn_support(g: BrieskornGerm) -> SupportPoly:
    if g.dimension != 2:
        raise ApplicationError(f"toric resolution needs two variables, {g} has {g.dimension}")
    (p, sp), (q, sq) = ((t.exp, t.sign) for t in g.terms)
    return SupportPoly((Monomial(p, 0, sp), Monomial(0, q, sq)))


def resolve_brieskorn(g: BrieskornGerm) -> ResolutionData:
    p, q = g.exponents
    return build_resolution(brieskorn_support(g), infer_brieskorn_weights(p, q))
