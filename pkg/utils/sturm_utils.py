# utils/sturm_utils.py
"""Exact real-root counting for univariate integer polynomials.

Signs are read off Sturm sequences at 0 and at ±infinity; nothing is evaluated
in floating point.
"""
from typing import Iterable, List, Mapping, Tuple

from sympy import Poly, Symbol, sign, sturm

Y = Symbol("Y")


def univariate(coeffs: Mapping[int, int]) -> Poly:
    """Integer polynomial in ``Y`` from an ``{exponent: coefficient}`` mapping."""
    return Poly(sum(c * Y**e for e, c in coeffs.items()), Y, domain="ZZ")


def _sign(value) -> int:
    return int(sign(value))


def sign_variations(values: Iterable) -> int:
    """Number of sign changes in a sequence, zeros skipped."""
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _at_plus_infinity(chain: List[Poly]) -> List[int]:
    return [_sign(p.LC()) for p in chain]


def _at_minus_infinity(chain: List[Poly]) -> List[int]:
    return [_sign(p.LC()) * (-1) ** p.degree() for p in chain]


def _at_zero(chain: List[Poly]) -> List[int]:
    return [_sign(p.eval(0)) for p in chain]


def count_real_roots_split(poly: Poly) -> Tuple[int, int]:
    """Count distinct negative and positive real roots of ``poly``.

    Args:
        poly: Nonconstant or constant polynomial with ``poly(0) != 0``.

    Returns:
        (negative count, positive count).
    """
    if poly.eval(0) == 0:
        raise ValueError("root counting around 0 needs poly(0) != 0")
    if poly.degree() < 1:
        return 0, 0
    chain = sturm(poly)
    v_minus = sign_variations(_at_minus_infinity(chain))
    v_zero = sign_variations(_at_zero(chain))
    v_plus = sign_variations(_at_plus_infinity(chain))
    return v_minus - v_zero, v_zero - v_plus


def leading_sign(poly: Poly) -> int:
    return _sign(poly.LC())


def constant_sign(poly: Poly) -> int:
    return _sign(poly.eval(0))


def is_squarefree(poly: Poly) -> bool:
    return poly.degree() < 1 or poly.is_sqf
