from typing import Dict, Tuple

import pytest

from services.fukui_service import ArithSet
from services.series_service import GeometricFactor, RationalTerm, RationalZeta
from services.toric_service import SupportPoly, WeightVector

# Fingerprint (Ã+_{kp+1}, Ã-_{kp+1}, Ã±_{kp+2}, kp+1 in A+, kp+1 in A-) per row shape.
FINGERPRINT_EXPECTED: Dict[str, Tuple[int, int, int, str, str]] = {
    "±y^{kp} ± z^{kp}":        (-1, -1, -1, "yes", "yes"),
    "±y^{kp} + z^{kp+1}":      (1, -1, -1, "yes", "yes"),
    "±y^{kp} - z^{kp+1}":      (-1, 1, -1, "yes", "yes"),
    "±y^{kp} ± z^{kp+2}":      (1, 1, 0, "yes", "yes"),
    "±y^{kp} ± z^r, r>kp+2":   (1, 1, 1, "yes", "yes"),
    "y^{kp+1} + z^{kp+1}":     (-1, -1, -1, "yes", "no"),
    "y^{kp+1} - z^{kp+1}":     (1, 1, -1, "yes", "yes"),
    "-y^{kp+1} - z^{kp+1}":    (-1, -1, -1, "no", "yes"),
    "y^{kp+1} ± z^{kp+2}":     (-1, 1, 0, "yes", "no"),
    "-y^{kp+1} ± z^{kp+2}":    (1, -1, 0, "no", "yes"),
    "y^{kp+1} ± z^r, r>kp+2":  (-1, 1, 1, "yes", "no"),
    "-y^{kp+1} ± z^r, r>kp+2": (1, -1, 1, "no", "yes"),
}


@pytest.fixture
def fingerprint_expected():
    return FINGERPRINT_EXPECTED


@pytest.fixture
def cusp_support() -> SupportPoly:
    """``x^3 + x y^5``, weighted homogeneous for (5, 2)."""
    return SupportPoly.from_terms({(3, 0): 1, (1, 5): 1})


@pytest.fixture
def cusp_weights() -> WeightVector:
    return WeightVector(5, 2)


@pytest.fixture
def cusp_zeta_closed_form() -> RationalZeta:
    """Total zeta function of ``x^3 + x y^5`` as nine geometric terms."""

    def term(coeff, *factors):
        return RationalTerm(coeff, tuple(GeometricFactor(n, eps) for n, eps in factors))

    return RationalZeta(
        (
            term(4, (8, 1)),
            term(6, (15, -1)),
            term(4, (6, -1)),
            term(2, (3, 1)),
            term(4, (8, 1), (15, -1)),
            term(4, (15, -1), (6, -1)),
            term(4, (6, -1), (3, 1)),
            term(4, (8, 1), (1, -1)),
            term(4, (15, -1), (1, -1)),
        )
    )


@pytest.fixture
def elements():
    """Finite elements of an ArithSet up to a bound, as a Python set."""

    def _elements(a: ArithSet, h: int = 1000) -> set:
        return set(a.elements_upto(h))

    return _elements
