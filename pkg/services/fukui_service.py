# services/fukui_service.py
"""Fukui invariants A(f), A+(f), A-(f) as eventually periodic subsets of N ∪ {∞}.

N starts at 1 throughout: ``aN = {a, 2a, ...}`` and ``M + N = N≥M+1``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Any, Dict, Iterable, List, Mapping, Tuple

import numpy as np

from store.errors import ApplicationError
from services.resolution_service import ResolutionData, require_valid
from services.zeta_service import BrieskornGerm

logger = logging.getLogger(__name__)

INFINITY_LABEL = "∞"


# --- ArithSet -----------------------------------------------------------------------

def _divisors(n: int) -> List[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@dataclass(frozen=True)
class ArithSet:
    """An eventually periodic subset of N, plus an optional ∞.

    ``transient[n-1]`` is the membership of ``n`` for ``1 <= n <= L``; every
    ``n > L`` is a member iff ``residues[n % P]``. Instances are always stored in
    canonical form (minimal ``P``, then minimal ``L``), so ``==`` is set equality.
    """

    transient: Tuple[bool, ...]
    residues: Tuple[bool, ...]
    has_infinity: bool = False

    def __post_init__(self) -> None:
        transient = [bool(b) for b in self.transient]
        residues = [bool(b) for b in self.residues]
        if not residues:
            raise ApplicationError("an arithmetic set needs a period of at least 1")
        period = len(residues)
        for d in _divisors(period):
            if all(residues[r] == residues[(r + d) % period] for r in range(period)):
                residues = residues[:d]
                period = d
                break
        while transient and transient[-1] == residues[len(transient) % period]:
            transient.pop()
        object.__setattr__(self, "transient", tuple(transient))
        object.__setattr__(self, "residues", tuple(residues))
        object.__setattr__(self, "has_infinity", bool(self.has_infinity))

    # --- Shape --------------------------------------------------------------------

    @property
    def transient_max(self) -> int:
        return len(self.transient)

    @property
    def period(self) -> int:
        return len(self.residues)

    @property
    def horizon(self) -> int:
        """Finite membership is decided by the elements up to this bound."""
        return self.transient_max + self.period

    def is_empty(self) -> bool:
        return not (self.has_infinity or any(self.transient) or any(self.residues))

    # --- Membership ---------------------------------------------------------------

    def __contains__(self, n: object) -> bool:
        if n == INFINITY_LABEL or n == float("inf"):
            return self.has_infinity
        if not isinstance(n, (int, np.integer)) or n < 1:
            return False
        if n <= self.transient_max:
            return self.transient[n - 1]
        return self.residues[n % self.period]

    def window(self, h: int) -> np.ndarray:
        """Membership of ``0..h`` as a boolean array (index 0 is always False)."""
        out = np.zeros(h + 1, dtype=bool)
        n = np.arange(h + 1)
        out[1:] = np.asarray(self.residues, dtype=bool)[n[1:] % self.period]
        low = min(self.transient_max, h)
        if low:
            out[1:low + 1] = np.asarray(self.transient[:low], dtype=bool)
        return out

    def elements_upto(self, h: int) -> List[int]:
        return [int(n) for n in np.flatnonzero(self.window(h))]

    @classmethod
    def from_window(cls, bits: np.ndarray, transient_max: int, period: int, has_infinity: bool) -> "ArithSet":
        """Read a set back from a window covering at least ``transient_max + period``."""
        if len(bits) <= transient_max + period:
            raise ApplicationError("window too short for the requested shape")
        transient = tuple(bool(b) for b in bits[1:transient_max + 1])
        residues = [False] * period
        for n in range(transient_max + 1, transient_max + period + 1):
            residues[n % period] = bool(bits[n])
        return cls(transient, tuple(residues), has_infinity)

    # --- Operators ----------------------------------------------------------------

    def __or__(self, other: "ArithSet") -> "ArithSet":
        return arith_union(self, other)

    def __and__(self, other: "ArithSet") -> "ArithSet":
        return arith_intersect(self, other)

    def __add__(self, other: "ArithSet") -> "ArithSet":
        return arith_minkowski(self, other)

    # --- JSON ---------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {
            "transient_max": self.transient_max,
            "transient_bits": [int(b) for b in self.transient],
            "period": self.period,
            "residue_bits": [int(b) for b in self.residues],
            "infinity": self.has_infinity,
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "ArithSet":
        try:
            transient = [bool(b) for b in doc["transient_bits"]]
            residues = [bool(b) for b in doc["residue_bits"]]
            if len(transient) != int(doc["transient_max"]) or len(residues) != int(doc["period"]):
                raise ValueError("bit array lengths do not match transient_max/period")
            return cls(tuple(transient), tuple(residues), bool(doc["infinity"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed arithmetic set document: {e}") from e


# --- Constructors -------------------------------------------------------------------

EMPTY = ArithSet((), (False,), False)
INFINITY_ONLY = ArithSet((), (False,), True)


def progression(a: int, infinity: bool = False) -> ArithSet:
    """``aN = {a, 2a, 3a, ...}``."""
    if a < 1:
        raise ApplicationError(f"progression step must be >= 1, got {a}")
    return ArithSet((), tuple(r == 0 for r in range(a)), infinity)


def tail(t: int, infinity: bool = False) -> ArithSet:
    """``N≥t``."""
    if t < 1:
        raise ApplicationError(f"tail start must be >= 1, got {t}")
    return ArithSet((False,) * (t - 1), (True,), infinity)


def finite(elements: Iterable[int], infinity: bool = False) -> ArithSet:
    items = sorted(set(int(e) for e in elements))
    if items and items[0] < 1:
        raise ApplicationError(f"elements must be >= 1, got {items[0]}")
    top = items[-1] if items else 0
    bits = [False] * top
    for e in items:
        bits[e - 1] = True
    return ArithSet(tuple(bits), (False,), infinity)


def shifted_naturals(m: int | None) -> ArithSet:
    """``M + (N ∪ {∞})``; ``M = ∞`` (None) contributes only ``{∞}``."""
    if m is None:
        return INFINITY_ONLY
    return tail(m + 1, infinity=True)


# --- Set operations -----------------------------------------------------------------

def _binary(a: ArithSet, b: ArithSet, op) -> ArithSet:
    transient_max = max(a.transient_max, b.transient_max)
    period = lcm(a.period, b.period)
    h = transient_max + period
    bits = op(a.window(h), b.window(h))
    return ArithSet.from_window(bits, transient_max, period, op(a.has_infinity, b.has_infinity))


def arith_union(a: ArithSet, b: ArithSet) -> ArithSet:
    return _binary(a, b, lambda x, y: x | y)


def arith_intersect(a: ArithSet, b: ArithSet) -> ArithSet:
    return _binary(a, b, lambda x, y: x & y)


def arith_minkowski(a: ArithSet, b: ArithSet) -> ArithSet:
    """``A + B = {a + b}`` with ``a + ∞ = ∞``.

    The finite part is eventually periodic with period ``lcm(P_a, P_b)`` past
    ``L_a + L_b + 2 lcm``; the sum over that window is one convolution.
    """
    period = lcm(a.period, b.period)
    transient_max = a.transient_max + b.transient_max + 2 * period
    h = transient_max + period
    counts = np.convolve(a.window(h).astype(np.int64), b.window(h).astype(np.int64))[: h + 1]
    infinity = (a.has_infinity and not b.is_empty()) or (b.has_infinity and not a.is_empty())
    return ArithSet.from_window(counts > 0, transient_max, period, infinity)


def arith_min(a: ArithSet) -> int | None:
    """Least finite element; None stands for ∞ (no finite element)."""
    for n in range(1, a.horizon + 1):
        if n in a:
            return n
    return None


def arith_first_difference(a: ArithSet, b: ArithSet) -> int | str | None:
    """Least element of the symmetric difference; ``"∞"`` if only ∞ differs."""
    h = max(a.transient_max, b.transient_max) + lcm(a.period, b.period)
    diff = np.flatnonzero(a.window(h) ^ b.window(h))
    if len(diff):
        return int(diff[0])
    if a.has_infinity != b.has_infinity:
        return INFINITY_LABEL
    return None


# --- Fukui triples ------------------------------------------------------------------

@dataclass(frozen=True)
class FukuiTriple:
    total: ArithSet
    plus: ArithSet
    minus: ArithSet

    def __post_init__(self) -> None:
        if self.total != arith_union(self.plus, self.minus):
            raise ApplicationError("Fukui triple violates A = A+ ∪ A-")

    def component(self, name: str) -> ArithSet:
        return {"fukui_total": self.total, "fukui_plus": self.plus, "fukui_minus": self.minus}[name]

    def to_dict(self) -> Dict[str, Any]:
        return {"total": self.total.to_dict(), "plus": self.plus.to_dict(), "minus": self.minus.to_dict()}

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "FukuiTriple":
        try:
            return cls(
                ArithSet.from_dict(doc["total"]),
                ArithSet.from_dict(doc["plus"]),
                ArithSet.from_dict(doc["minus"]),
            )
        except KeyError as e:
            raise ApplicationError(f"malformed Fukui document: missing {e}") from e


def _triple(plus: ArithSet, minus: ArithSet) -> FukuiTriple:
    return FukuiTriple(arith_union(plus, minus), plus, minus)


def fukui_monomial(m: int, sign: int) -> FukuiTriple:
    """``A(±x^m) = mN ∪ {∞}``, split by the sign when ``m`` is even."""
    if m < 1:
        raise ApplicationError(f"monomial exponent must be >= 1, got {m}")
    full = progression(m, infinity=True)
    if m % 2:
        return FukuiTriple(full, full, full)
    return FukuiTriple(full, full, INFINITY_ONLY) if sign > 0 else FukuiTriple(full, INFINITY_ONLY, full)


def fukui_ts(f: FukuiTriple, g: FukuiTriple) -> FukuiTriple:
    """Fukui triple of ``f(x) + g(y)``.

    With ``M1 = min(A+(f) ∩ A-(g))`` and ``M2 = min(A-(f) ∩ A+(g))``, each of the
    three sets is the union of the two inputs' sets and ``(M1 + N) ∪ (M2 + N)``.
    """
    m1 = arith_min(f.plus & g.minus)
    m2 = arith_min(f.minus & g.plus)
    extra = shifted_naturals(m1) | shifted_naturals(m2)
    logger.debug("Thom-Sebastiani Fukui minima M1=%s M2=%s", m1, m2)
    return FukuiTriple(
        f.total | g.total | extra,
        f.plus | g.plus | extra,
        f.minus | g.minus | extra,
    )


def fukui_product(f: FukuiTriple, g: FukuiTriple) -> FukuiTriple:
    """Fukui triple of ``f(x) * g(y)``: Minkowski sums, signs multiply."""
    return FukuiTriple(
        f.total + g.total,
        (f.plus + g.plus) | (f.minus + g.minus),
        (f.plus + g.minus) | (f.minus + g.plus),
    )


def fukui_monomial_product(p: int, q: int, c_sign: int) -> FukuiTriple:
    """Fukui triple of ``c x^p y^q``."""
    return fukui_product(fukui_monomial(p, c_sign), fukui_monomial(q, 1))


def fukui_table_2var(g: BrieskornGerm) -> FukuiTriple:
    """Closed forms for ``±x^p ± y^q``, looked up by the parities of ``p`` and ``q``."""
    if g.dimension != 2:
        raise ApplicationError(f"the two-variable table needs two terms, {g} has {g.dimension}")
    (p, sp), (q, sq) = ((t.exp, t.sign) for t in g.terms)
    big = lcm(p, q)
    pn, qn = progression(p, True), progression(q, True)
    beyond = tail(big, True)
    both = pn | qn | beyond

    if p % 2 and q % 2:
        return FukuiTriple(both, both, both)
    if p % 2 or q % 2:
        # the even term decides which side sees its progression
        odd_n, even_sign = (pn, sq) if p % 2 else (qn, sp)
        short = odd_n | beyond
        return FukuiTriple(both, both, short) if even_sign > 0 else FukuiTriple(both, short, both)
    if sp != sq:
        side_p, side_q = pn | beyond, qn | beyond
        return FukuiTriple(both, side_p, side_q) if sp > 0 else FukuiTriple(both, side_q, side_p)
    same = pn | qn
    return FukuiTriple(same, same, INFINITY_ONLY) if sp > 0 else FukuiTriple(same, INFINITY_ONLY, same)


def fukui_ts_fold(g: BrieskornGerm) -> FukuiTriple:
    """Fold `fukui_ts` over the monomials of ``g``."""
    return reduce(fukui_ts, (fukui_monomial(t.exp, t.sign) for t in g.terms))


def fukui_brieskorn(g: BrieskornGerm) -> FukuiTriple:
    if g.dimension == 1:
        t = g.terms[0]
        return fukui_monomial(t.exp, t.sign)
    if g.dimension == 2:
        return fukui_table_2var(g)
    return fukui_ts_fold(g)


def fukui_from_resolution(r: ResolutionData) -> FukuiTriple:
    """Union of ``Ω_I = N_{i1}N + ... + N_{ip}N ∪ {∞}`` over the strata.

    A stratum counts toward A+ (A-) when it borders a positive (negative) chamber.
    """
    require_valid(r)
    plus = minus = INFINITY_ONLY
    for s in r.strata:
        omega = reduce(arith_minkowski, (progression(r.divisor(i).N) for i in s.divisor_ids))
        omega = omega | INFINITY_ONLY
        if s.alpha_plus > 0:
            plus = plus | omega
        if s.alpha_minus > 0:
            minus = minus | omega
    logger.debug("Fukui sets from %d strata", len(r.strata))
    return _triple(plus, minus)
