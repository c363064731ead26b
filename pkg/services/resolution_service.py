# services/resolution_service.py
"""Resolution data and the Denef-Loeser evaluators.

The evaluators never look at where the data came from: toric builds and
hand-authored JSON go through the same validation and the same formulas.
"""
from __future__ import annotations

import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Tuple

from store.errors import ApplicationError, ResolutionValidationError
from services.series_service import (
    GeometricFactor,
    RationalTerm,
    RationalZeta,
    expand_rational,
)
from services.zeta_service import ZetaTriple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Divisor:
    id: str
    N: int
    nu: int
    exceptional: bool

    @property
    def factor(self) -> GeometricFactor:
        """``(-1)^nu T^N / (1 - (-1)^nu T^N)``."""
        return GeometricFactor(self.N, -1 if self.nu % 2 else 1)


@dataclass(frozen=True)
class Stratum:
    """One connected component of ``E_I ∩ σ⁻¹(0)`` with its chamber sign counts."""

    divisor_ids: Tuple[str, ...]
    chi_c: int
    alpha_plus: int
    alpha_minus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "divisor_ids", tuple(self.divisor_ids))


@dataclass(frozen=True)
class ResolutionData:
    divisors: Tuple[Divisor, ...]
    strata: Tuple[Stratum, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "divisors", tuple(self.divisors))
        object.__setattr__(self, "strata", tuple(self.strata))

    def divisor(self, divisor_id: str) -> Divisor:
        for d in self.divisors:
            if d.id == divisor_id:
                return d
        raise ApplicationError(f"unknown divisor id {divisor_id!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "divisors": [
                {"id": d.id, "N": d.N, "nu": d.nu, "exceptional": d.exceptional}
                for d in self.divisors
            ],
            "strata": [
                {
                    "divisors": list(s.divisor_ids),
                    "chi_c": s.chi_c,
                    "alpha_plus": s.alpha_plus,
                    "alpha_minus": s.alpha_minus,
                }
                for s in self.strata
            ],
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "ResolutionData":
        try:
            divisors = tuple(
                Divisor(str(d["id"]), int(d["N"]), int(d["nu"]), bool(d["exceptional"]))
                for d in doc["divisors"]
            )
            strata = tuple(
                Stratum(
                    tuple(str(i) for i in s["divisors"]),
                    int(s["chi_c"]),
                    int(s["alpha_plus"]),
                    int(s["alpha_minus"]),
                )
                for s in doc["strata"]
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ApplicationError(f"malformed resolution document: {e}") from e
        return cls(divisors, strata)


@dataclass(frozen=True)
class Violation:
    code: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class SignedRationalZeta:
    plus: RationalZeta
    minus: RationalZeta


# --- Validation ---------------------------------------------------------------------

def validate_resolution(r: ResolutionData) -> List[Violation]:
    """Return every violated invariant; an empty list means the data is valid."""
    out: List[Violation] = []
    by_id: Dict[str, Divisor] = {}
    for d in r.divisors:
        if d.id in by_id:
            out.append(Violation("duplicate-id", d.id, "divisor id used twice"))
        by_id[d.id] = d
        if d.N < 1:
            out.append(Violation("multiplicity", d.id, f"N must be >= 1, got {d.N}"))
        if d.nu < 1:
            out.append(Violation("multiplicity", d.id, f"nu must be >= 1, got {d.nu}"))

    for k, s in enumerate(r.strata):
        subject = f"stratum {k} {list(s.divisor_ids)}"
        if not s.divisor_ids:
            out.append(Violation("empty-stratum", subject, "a stratum needs at least one divisor"))
            continue
        if len(set(s.divisor_ids)) != len(s.divisor_ids):
            out.append(Violation("duplicate-id", subject, "divisor listed twice"))
        unknown = [i for i in s.divisor_ids if i not in by_id]
        for i in unknown:
            out.append(Violation("unknown-divisor", subject, f"references unknown divisor {i!r}"))
        if not unknown and not any(by_id[i].exceptional for i in s.divisor_ids):
            out.append(Violation("no-exceptional", subject, "no exceptional divisor in the stratum"))
        if s.alpha_plus < 0 or s.alpha_minus < 0:
            out.append(Violation("alpha-sign", subject, "chamber counts must be nonnegative"))
        expected = 2 ** len(s.divisor_ids)
        if s.alpha_plus + s.alpha_minus != expected:
            out.append(
                Violation(
                    "alpha-sum",
                    subject,
                    f"alpha_plus + alpha_minus = {s.alpha_plus + s.alpha_minus}, expected {expected}",
                )
            )
    return out


def require_valid(r: ResolutionData) -> None:
    violations = validate_resolution(r)
    if violations:
        raise ResolutionValidationError(violations)


# --- Denef-Loeser --------------------------------------------------------------------

def _aggregate(r: ResolutionData, weight) -> RationalZeta:
    """Sum ``weight(stratum)`` over strata with the same divisor set."""
    position = {d.id: k for k, d in enumerate(r.divisors)}
    grouped: "OrderedDict[Tuple[str, ...], int]" = OrderedDict()
    for s in r.strata:
        key = tuple(sorted(s.divisor_ids, key=position.__getitem__))
        grouped[key] = grouped.get(key, 0) + weight(s)
    terms = [
        RationalTerm(coeff, tuple(r.divisor(i).factor for i in key))
        for key, coeff in grouped.items()
        if coeff
    ]
    return RationalZeta(tuple(terms))


def dl_total(r: ResolutionData) -> RationalZeta:
    """Total zeta function: ``sum_I (-2)^{|I|} chi_c(E_I) prod factor_i``."""
    require_valid(r)
    return _aggregate(r, lambda s: (-2) ** len(s.divisor_ids) * s.chi_c)


def dl_signed(r: ResolutionData) -> SignedRationalZeta:
    """Signed zeta functions: ``sum (-1)^{|I|} alpha± chi_c prod factor_i``."""
    require_valid(r)
    plus = _aggregate(r, lambda s: (-1) ** len(s.divisor_ids) * s.alpha_plus * s.chi_c)
    minus = _aggregate(r, lambda s: (-1) ** len(s.divisor_ids) * s.alpha_minus * s.chi_c)
    return SignedRationalZeta(plus, minus)


def expand_signed(r: ResolutionData, order: int) -> ZetaTriple:
    signed = dl_signed(r)
    z = ZetaTriple(expand_rational(signed.plus, order), expand_rational(signed.minus, order))
    logger.debug("resolution with %d strata expanded to order %d", len(r.strata), order)
    return z
