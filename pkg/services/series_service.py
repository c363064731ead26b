# services/series_service.py
"""Exact integer arithmetic on truncated power series.

Series carry no constant term: coefficient ``c_n`` is stored for ``1 <= n <= order``.
Binary operations truncate to the smaller operand order, so a result never claims
more coefficients than both inputs can vouch for.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple

from store.errors import ApplicationError, TruncationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncSeries:
    """Integer series ``c_1 T + ... + c_N T^N`` truncated at ``order = N``."""

    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ApplicationError(f"series order must be positive, got {self.order}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ApplicationError(
                f"series of order {self.order} needs {self.order} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # --- Constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order, (0,) * order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int) -> "TruncSeries":
        """Build a series from a sparse ``{exponent: coefficient}`` mapping.

        Exponents above ``order`` are dropped; exponent 0 is rejected.
        """
        coeffs = [0] * order
        for n, c in terms.items():
            if n < 1:
                raise ApplicationError(f"exponent {n} is not allowed (no constant term)")
            if n <= order:
                coeffs[n - 1] += int(c)
        return cls(order, tuple(coeffs))

    # --- Access -----------------------------------------------------------------

    def __getitem__(self, n: int) -> int:
        if n == 0:
            return 0
        if n < 0 or n > self.order:
            raise TruncationError(f"coefficient T^{n} requested from a series of order {self.order}")
        return self.coeffs[n - 1]

    def nonzero(self) -> List[Tuple[int, int]]:
        return [(n, c) for n, c in enumerate(self.coeffs, start=1) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(order, self.coeffs[:order])

    # --- Operators --------------------------------------------------------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return series_add(self, series_scale(-1, other))

    def __neg__(self) -> "TruncSeries":
        return series_scale(-1, self)

    def __mul__(self, other: "TruncSeries | int") -> "TruncSeries":
        if isinstance(other, int):
            return series_scale(other, self)
        return series_mul(self, other)

    __rmul__ = __mul__

    # --- JSON -------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "TruncSeries":
        try:
            return cls(int(doc["order"]), tuple(int(c) for c in doc["coeffs"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed series document: {e}") from e


@dataclass(frozen=True)
class GeometricFactor:
    """The factor ``eps * T^exp / (1 - eps * T^exp)``."""

    exp: int
    eps: int

    def __post_init__(self) -> None:
        if self.exp < 1:
            raise ApplicationError(f"factor exponent must be positive, got {self.exp}")
        if self.eps not in (1, -1):
            raise ApplicationError(f"factor sign must be +1 or -1, got {self.eps}")

    def expand(self, order: int) -> TruncSeries:
        coeffs = [0] * order
        value = 1
        for n in range(self.exp, order + 1, self.exp):
            value *= self.eps
            coeffs[n - 1] = value
        return TruncSeries(order, tuple(coeffs))


@dataclass(frozen=True)
class RationalTerm:
    coeff: int
    factors: Tuple[GeometricFactor, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ApplicationError("a rational zeta term needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))


@dataclass(frozen=True)
class RationalZeta:
    """Exact closed form: a sum of integer multiples of products of geometric factors."""

    terms: Tuple[RationalTerm, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))

    def __add__(self, other: "RationalZeta") -> "RationalZeta":
        return RationalZeta(self.terms + other.terms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "terms": [
                {"coeff": t.coeff, "factors": [{"exp": f.exp, "eps": f.eps} for f in t.factors]}
                for t in self.terms
            ]
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "RationalZeta":
        try:
            terms = [
                RationalTerm(
                    int(t["coeff"]),
                    tuple(GeometricFactor(int(f["exp"]), int(f["eps"])) for f in t["factors"]),
                )
                for t in doc["terms"]
            ]
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed rational zeta document: {e}") from e
        return cls(tuple(terms))


# --- Operations -------------------------------------------------------------------

def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    order = min(a.order, b.order)
    return TruncSeries(order, tuple(x + y for x, y in zip(a.coeffs[:order], b.coeffs[:order])))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the smaller order.

    Both operands have no constant term, so the product starts at ``T^2``.
    Zero coefficients are skipped, which keeps products of sparse geometric
    expansions cheap.
    """
    order = min(a.order, b.order)
    out = [0] * order
    b_terms = [(j, c) for j, c in b.nonzero() if j < order]
    for i, ca in a.nonzero():
        if i >= order:
            break
        for j, cb in b_terms:
            n = i + j
            if n > order:
                break
            out[n - 1] += ca * cb
    return TruncSeries(order, tuple(out))


def series_scale(k: int, a: TruncSeries) -> TruncSeries:
    return TruncSeries(a.order, tuple(k * c for c in a.coeffs))


def expand_rational(r: RationalZeta, order: int) -> TruncSeries:
    """Expand a closed form to an integer series of the given order.

    Args:
        r: Sum of terms ``coeff * prod(eps T^N / (1 - eps T^N))``.
        order: Truncation order, at least 1.

    Returns:
        TruncSeries: The expansion; terms with coefficient 0 contribute nothing.
    """
    if order < 1:
        raise ApplicationError(f"expansion order must be positive, got {order}")
    cache: Dict[GeometricFactor, TruncSeries] = {}

    def factor_series(f: GeometricFactor) -> TruncSeries:
        if f not in cache:
            cache[f] = f.expand(order)
        return cache[f]

    total = TruncSeries.zero(order)
    for term in r.terms:
        if term.coeff == 0:
            continue
        product = factor_series(term.factors[0])
        for f in term.factors[1:]:
            product = series_mul(product, factor_series(f))
        total = series_add(total, series_scale(term.coeff, product))
    logger.debug("expanded %d rational terms to order %d", len(r.terms), order)
    return total


def series_mod2(a: TruncSeries) -> TruncSeries:
    return TruncSeries(a.order, tuple(c % 2 for c in a.coeffs))


def series_eq(a: TruncSeries, b: TruncSeries, upto: int) -> bool:
    """True iff coefficients ``1..upto`` agree.

    Raises:
        TruncationError: If ``upto`` exceeds either order.
    """
    if upto > a.order or upto > b.order:
        raise TruncationError(
            f"cannot compare up to T^{upto}: orders are {a.order} and {b.order}"
        )
    return a.coeffs[:upto] == b.coeffs[:upto]


def first_difference(a: TruncSeries, b: TruncSeries) -> int | None:
    """Least index where two series differ, within the shared order."""
    for n, (x, y) in enumerate(zip(a.coeffs, b.coeffs), start=1):
        if x != y:
            return n
    return None
