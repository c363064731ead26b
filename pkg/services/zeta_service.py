# services/zeta_service.py
"""Zeta triples (Z+, Z-) of real germs and the operations that combine them.

Closed forms cover monomials and normal crossings. Sums of germs in separate
variables go through either the coefficient formulas (`ts_combine`) or the
modified coefficients, where the combination is a termwise product
(`ts_combine_modified`). Both routes agree exactly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from store.errors import (
    ApplicationError,
    InconclusiveError,
    NonBinarySeriesError,
    OrderMismatchError,
    TruncationError,
)
from services.series_service import (
    GeometricFactor,
    RationalTerm,
    RationalZeta,
    TruncSeries,
    expand_rational,
    series_add,
    series_mul,
)
from utils.constants import VARIABLE_NAMES

logger = logging.getLogger(__name__)


# --- Germs ------------------------------------------------------------------------

@dataclass(frozen=True)
class BrieskornTerm:
    exp: int
    sign: int


@dataclass(frozen=True)
class BrieskornGerm:
    """A germ ``±x_1^{p_1} ± ... ± x_d^{p_d}``.

    Terms are stored sorted by exponent, with ``+`` ahead of ``-`` among equal
    exponents. Reordering terms is a permutation of variables, so two germs that
    differ only in term order compare equal.
    """

    terms: Tuple[BrieskornTerm, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise ApplicationError("a Brieskorn germ needs at least one term")
        for t in terms:
            if t.exp < 1:
                raise ApplicationError(f"exponents must be >= 1, got {t.exp}")
            if t.sign not in (1, -1):
                raise ApplicationError(f"signs must be +1 or -1, got {t.sign}")
        object.__setattr__(self, "terms", tuple(sorted(terms, key=lambda t: (t.exp, -t.sign))))

    @classmethod
    def of(cls, *pairs: Tuple[int, int]) -> "BrieskornGerm":
        """``BrieskornGerm.of((3, 1), (6, -1))`` is ``x^3 - y^6``."""
        return cls(tuple(BrieskornTerm(int(e), int(s)) for e, s in pairs))

    @property
    def dimension(self) -> int:
        return len(self.terms)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(t.exp for t in self.terms)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(t.sign for t in self.terms)

    def render(self) -> str:
        names = (
            VARIABLE_NAMES
            if self.dimension <= len(VARIABLE_NAMES)
            else [f"x{i}" for i in range(1, self.dimension + 1)]
        )
        out = ""
        for i, (t, name) in enumerate(zip(self.terms, names)):
            mono = name if t.exp == 1 else f"{name}^{t.exp}"
            if i == 0:
                out = mono if t.sign > 0 else f"-{mono}"
            else:
                out += f" {'+' if t.sign > 0 else '-'} {mono}"
        return out

    def __str__(self) -> str:
        return self.render()

    def to_dict(self) -> Dict[str, Any]:
        return {"terms": [{"exp": t.exp, "sign": t.sign} for t in self.terms]}

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "BrieskornGerm":
        try:
            return cls(tuple(BrieskornTerm(int(t["exp"]), int(t["sign"])) for t in doc["terms"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed germ document: {e}") from e


# --- Triples ----------------------------------------------------------------------

def _require_same_order(a_order: int, b_order: int, what: str) -> None:
    if a_order != b_order:
        raise OrderMismatchError(f"{what}: orders differ ({a_order} vs {b_order})")


@dataclass(frozen=True)
class ZetaTriple:
    """Positive and negative zeta functions; the total is their sum."""

    plus: TruncSeries
    minus: TruncSeries

    def __post_init__(self) -> None:
        _require_same_order(self.plus.order, self.minus.order, "zeta triple")

    @property
    def order(self) -> int:
        return self.plus.order

    def total(self) -> TruncSeries:
        return series_add(self.plus, self.minus)

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def truncate(self, order: int) -> "ZetaTriple":
        return ZetaTriple(self.plus.truncate(order), self.minus.truncate(order))

    @classmethod
    def zero(cls, order: int) -> "ZetaTriple":
        return cls(TruncSeries.zero(order), TruncSeries.zero(order))

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "plus": list(self.plus.coeffs), "minus": list(self.minus.coeffs)}

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "ZetaTriple":
        try:
            order = int(doc["order"])
            return cls(TruncSeries(order, tuple(doc["plus"])), TruncSeries(order, tuple(doc["minus"])))
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed zeta document: {e}") from e


@dataclass(frozen=True)
class ModifiedTriple:
    """Modified coefficients ``Ã±_n = A_n + a±_n``."""

    tplus: TruncSeries
    tminus: TruncSeries

    def __post_init__(self) -> None:
        _require_same_order(self.tplus.order, self.tminus.order, "modified triple")

    @property
    def order(self) -> int:
        return self.tplus.order

    @classmethod
    def ones(cls, order: int) -> "ModifiedTriple":
        """Modified image of the zero triple."""
        ones = TruncSeries(order, (1,) * order)
        return cls(ones, ones)

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "tplus": list(self.tplus.coeffs), "tminus": list(self.tminus.coeffs)}


def _halve(s: TruncSeries) -> TruncSeries:
    if any(c % 2 for c in s.coeffs):
        raise ApplicationError("cannot split a total zeta function with odd coefficients")
    return TruncSeries(s.order, tuple(c // 2 for c in s.coeffs))


# --- Closed forms -----------------------------------------------------------------

def zeta_monomial(m: int, sign: int, order: int) -> ZetaTriple:
    """Zeta triple of ``±x^m``.

    The total is ``2T^m - 2T^{2m} + 2T^{3m} - ...``. For odd ``m`` both signed
    functions are half of it; for even ``m`` it all sits on the side of ``sign``.

    Raises:
        TruncationError: If ``order < m``.
    """
    if m < 1:
        raise ApplicationError(f"monomial exponent must be >= 1, got {m}")
    if order < m:
        raise TruncationError(f"order {order} is below the monomial degree {m}")
    total = expand_rational(RationalZeta((RationalTerm(-2, (GeometricFactor(m, -1),)),)), order)
    if m % 2:
        half = _halve(total)
        return ZetaTriple(half, half)
    zero = TruncSeries.zero(order)
    return ZetaTriple(total, zero) if sign > 0 else ZetaTriple(zero, total)


def zeta_normal_crossing(exps: Sequence[int], unit_sign: int, order: int) -> ZetaTriple:
    """Zeta triple of ``u * x_1^{N_1} ... x_k^{N_k}`` with ``u(0)`` of sign ``unit_sign``."""
    if not exps:
        raise ApplicationError("normal crossing needs at least one exponent")
    k = len(exps)
    term = RationalTerm((-2) ** k, tuple(GeometricFactor(int(n), -1) for n in exps))
    total = expand_rational(RationalZeta((term,)), order)
    if any(n % 2 for n in exps):
        half = _halve(total)
        return ZetaTriple(half, half)
    zero = TruncSeries.zero(order)
    return ZetaTriple(total, zero) if unit_sign > 0 else ZetaTriple(zero, total)


def modified_monomial(m: int, sign: int, order: int) -> ModifiedTriple:
    """Closed form of the modified coefficients of ``±x^m``.

    Odd m: zero on mN, otherwise ``(-1)^{floor(n/m)}`` on both sides.
    Even m with sign +: ``Ã+_n = (-1)^{floor((n-1)/m)}``, ``Ã-_n = (-1)^{floor(n/m)}``;
    sign - swaps the two.
    """
    if m < 1:
        raise ApplicationError(f"monomial exponent must be >= 1, got {m}")
    if m % 2:
        coeffs = tuple(0 if n % m == 0 else (-1) ** (n // m) for n in range(1, order + 1))
        s = TruncSeries(order, coeffs)
        return ModifiedTriple(s, s)
    upper = TruncSeries(order, tuple((-1) ** ((n - 1) // m) for n in range(1, order + 1)))
    lower = TruncSeries(order, tuple((-1) ** (n // m) for n in range(1, order + 1)))
    return ModifiedTriple(upper, lower) if sign > 0 else ModifiedTriple(lower, upper)


def zeta_unit_multiple(z: ZetaTriple, unit_sign: int) -> ZetaTriple:
    """Zeta triple of ``f * u`` where ``u(0) != 0``: unchanged or with sides swapped."""
    return z if unit_sign > 0 else ZetaTriple(z.minus, z.plus)


# --- Thom-Sebastiani ----------------------------------------------------------------

def ts_combine(a: ZetaTriple, b: ZetaTriple) -> ZetaTriple:
    """Zeta triple of ``f(x) + g(y)`` from the triples of ``f`` and ``g``.

    Uses ``A_n = 1 - sum_{i<=n} a_i``, the same for ``B_n``, and the alternating
    cross sum ``S_n = sum_{i<=n} (-1)^{n-i} (a+_i b-_i + a-_i b+_i)``.
    """
    _require_same_order(a.order, b.order, "ts_combine")
    big_a, big_b, cross = 1, 1, 0
    plus: List[int] = []
    minus: List[int] = []
    for ap, am, bp, bm in zip(a.plus.coeffs, a.minus.coeffs, b.plus.coeffs, b.minus.coeffs):
        big_a -= ap + am
        big_b -= bp + bm
        cross = -cross + ap * bm + am * bp
        plus.append(ap * bp + ap * big_b + big_a * bp + cross)
        minus.append(am * bm + am * big_b + big_a * bm + cross)
    return ZetaTriple(TruncSeries(a.order, tuple(plus)), TruncSeries(a.order, tuple(minus)))


def partial_sums(z: ZetaTriple) -> List[int]:
    """``[A_0, A_1, ..., A_N]`` with ``A_0 = 1`` and ``A_n = 1 - sum_{i<=n} a_i``."""
    out = [1]
    for c in z.total().coeffs:
        out.append(out[-1] - c)
    return out


def to_modified(z: ZetaTriple) -> ModifiedTriple:
    big_a = partial_sums(z)[1:]
    tplus = tuple(a_n + c for a_n, c in zip(big_a, z.plus.coeffs))
    tminus = tuple(a_n + c for a_n, c in zip(big_a, z.minus.coeffs))
    return ModifiedTriple(TruncSeries(z.order, tplus), TruncSeries(z.order, tminus))


def from_modified(m: ModifiedTriple) -> ZetaTriple:
    """Exact inverse of `to_modified`.

    ``Ã+_n + Ã-_n = 2 A_n + a_n = 2 A_{n-1} - a_n`` gives ``a_n``, then
    ``A_n = A_{n-1} - a_n`` and ``a±_n = Ã±_n - A_n``.
    """
    big_a = 1
    plus: List[int] = []
    minus: List[int] = []
    for tp, tm in zip(m.tplus.coeffs, m.tminus.coeffs):
        a_n = 2 * big_a - (tp + tm)
        big_a -= a_n
        plus.append(tp - big_a)
        minus.append(tm - big_a)
    return ZetaTriple(TruncSeries(m.order, tuple(plus)), TruncSeries(m.order, tuple(minus)))


def modified_total(m: ModifiedTriple) -> TruncSeries:
    """Total modified zeta ``Ã+ + Ã-``; satisfies ``(1 - Z)/(1 - T) = (1 + Z~)/(1 + T)``."""
    return series_add(m.tplus, m.tminus)


def ts_combine_modified(a: ModifiedTriple, b: ModifiedTriple) -> ModifiedTriple:
    _require_same_order(a.order, b.order, "ts_combine_modified")
    tplus = tuple(x * y for x, y in zip(a.tplus.coeffs, b.tplus.coeffs))
    tminus = tuple(x * y for x, y in zip(a.tminus.coeffs, b.tminus.coeffs))
    return ModifiedTriple(TruncSeries(a.order, tplus), TruncSeries(a.order, tminus))


def zeta_product(a: ZetaTriple, b: ZetaTriple) -> ZetaTriple:
    """Zeta triple of ``f(x) * g(y)``.

    ``Z- = Z_{a,+} Z_{b,-} + Z_{a,-} Z_{b,+}`` (symmetric form).
    """
    _require_same_order(a.order, b.order, "zeta_product")
    plus = series_add(series_mul(a.plus, b.plus), series_mul(a.minus, b.minus))
    minus = series_add(series_mul(a.plus, b.minus), series_mul(a.minus, b.plus))
    return ZetaTriple(plus, minus)


def modified_brieskorn(g: BrieskornGerm, order: int) -> ModifiedTriple:
    """Termwise product of the modified monomials of ``g``."""
    parts = [to_modified(zeta_monomial(t.exp, t.sign, order)) for t in g.terms]
    return reduce(ts_combine_modified, parts)


@lru_cache(maxsize=2048)
def zeta_brieskorn(g: BrieskornGerm, order: int) -> ZetaTriple:
    """Zeta triple of a Brieskorn germ of any dimension.

    Raises:
        TruncationError: If ``order`` is below the largest exponent.
    """
    if order < max(g.exponents):
        raise TruncationError(f"order {order} is below the largest exponent of {g}")
    z = from_modified(modified_brieskorn(g, order))
    logger.debug("zeta of %s computed to order %d", g, order)
    return z


def is_mod2_symmetric(z: ZetaTriple) -> bool:
    return all((p - m) % 2 == 0 for p, m in zip(z.plus.coeffs, z.minus.coeffs))


# --- Inversion ----------------------------------------------------------------------

def unsuspend_even(m: int, msign: int, c: ModifiedTriple) -> ModifiedTriple:
    """Strip the summand ``±x^m`` (``m`` even) from a modified triple.

    ``Ã±_n`` of an even monomial is always ±1, so the quotient
    ``B~±_n = C~±_n / Ã±_n`` is a multiplication by the same ±1.
    """
    if m % 2:
        raise ApplicationError(f"unsuspension needs an even exponent, got {m}")
    if c.order < m:
        raise TruncationError(f"order {c.order} is below the exponent {m}")
    a = modified_monomial(m, msign, c.order)
    tplus = tuple(x * y for x, y in zip(c.tplus.coeffs, a.tplus.coeffs))
    tminus = tuple(x * y for x, y in zip(c.tminus.coeffs, a.tminus.coeffs))
    return ModifiedTriple(TruncSeries(c.order, tplus), TruncSeries(c.order, tminus))


@dataclass(frozen=True)
class PowerFactor:
    """Recovered summand ``sign * y^r``; ``sign`` is None when it cannot be read off."""

    r: int
    sign: int | None


def recover_power_factor(
    f: BrieskornGerm,
    c: ModifiedTriple,
    r_max: int | None = None,
) -> PowerFactor:
    """Recover ``±y^r`` from the modified triple of ``f(x) + (±y^r)``.

    Coefficients of the unknown summand are read off wherever ``f``'s modified
    coefficients are nonzero. The first index where ``B~+`` vanishes gives an
    odd ``r``; the first index where ``B~+`` and ``B~-`` split gives an even ``r``
    and its sign. Otherwise ``r`` is a multiple of an odd exponent of ``f`` and
    every such candidate up to ``r_max`` is matched against the recovered values.
    A candidate only counts if one of the recovered values actually departs
    from 1, so an order too short to show any sign change is reported, not
    guessed.

    Args:
        f: The known summand.
        c: Modified triple of the sum.
        r_max: Largest exponent tried in the candidate search; defaults to
            ``order - 1``.

    Returns:
        PowerFactor: ``sign`` is +1 for odd ``r`` (the sign is immaterial) and
        None when ``r`` is even and a multiple of an odd exponent of ``f``.

    Raises:
        InconclusiveError: If no candidate, or more than one exponent, fits.
    """
    order = c.order
    a = modified_brieskorn(f, order)
    cap = r_max if r_max else order - 1

    # --- recover the unknown summand where the division is exact ---
    known: Dict[int, Tuple[int, int]] = {}
    for n in range(1, order + 1):
        ap, am = a.tplus[n], a.tminus[n]
        if ap == 0 or am == 0:
            continue
        cp, cm = c.tplus[n], c.tminus[n]
        if cp % ap or cm % am:
            raise ApplicationError(f"modified triple is not a sum with {f}: T^{n} does not divide")
        known[n] = (cp // ap, cm // am)

    for n in sorted(known):
        bp, bm = known[n]
        if bp == 0:
            logger.debug("odd exponent %d recovered directly", n)
            return PowerFactor(n, 1)
        if bp != bm:
            logger.debug("even exponent %d recovered directly", n)
            return PowerFactor(n, 1 if bp > bm else -1)

    # --- candidate search over exponents the division cannot see ---
    fits: List[Tuple[int, int]] = []
    if any(value != (1, 1) for value in known.values()):
        for r in range(2, cap + 1):
            if r in known:
                continue
            for sign in ((1,) if r % 2 else (1, -1)):
                b = modified_monomial(r, sign, order)
                if all(b.tplus[n] == bp and b.tminus[n] == bm for n, (bp, bm) in known.items()):
                    fits.append((r, sign))
    exponents = sorted({r for r, _ in fits})
    if len(exponents) != 1:
        raise InconclusiveError(
            f"power factor not determined at order {order} (candidates: {exponents or 'none'})",
            order=order,
            suggested_order=2 * order,
        )
    r = exponents[0]
    signs = {s for rr, s in fits if rr == r}
    return PowerFactor(r, signs.pop() if len(signs) == 1 else None)


# --- Mod 2 --------------------------------------------------------------------------

def ts_mod2(a_plus_mod2: TruncSeries, b_plus_mod2: TruncSeries) -> TruncSeries:
    """Mod-2 Thom-Sebastiani: ``1 + c_n = (1 + a_n)(1 + b_n)`` over GF(2)."""
    _require_same_order(a_plus_mod2.order, b_plus_mod2.order, "ts_mod2")
    for s in (a_plus_mod2, b_plus_mod2):
        if any(x not in (0, 1) for x in s.coeffs):
            raise NonBinarySeriesError("ts_mod2 expects coefficients in {0, 1}")
    coeffs = tuple((x + y + x * y) % 2 for x, y in zip(a_plus_mod2.coeffs, b_plus_mod2.coeffs))
    return TruncSeries(a_plus_mod2.order, coeffs)


def brieskorn_lcm(*germs: BrieskornGerm) -> int:
    exps = [e for g in germs for e in g.exponents]
    return reduce(lambda x, y: x * y // gcd(x, y), exps, 1)
