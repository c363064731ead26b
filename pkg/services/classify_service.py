# services/classify_service.py
"""Blow-analytic classification of Brieskorn germs in two and three variables.

Pairs are compared through their Fukui triples first and their zeta triples
second. Two-variable classes are the Klein orbits, except that ``x^p + y^{kp}``
and ``x^p - y^{kp}`` (``p`` odd, ``k`` even) merge. In three variables the
family ``±(x^p + y^{kp} + z^{kp})`` with ``p`` even has coinciding invariants
for every ``k``; pairs from it with different ``k`` are reported as unresolved.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from store.errors import (
    AmbiguousZetaError,
    ApplicationError,
    DimensionMismatchError,
    InconclusiveError,
    RegularGermError,
    UnsupportedGermError,
)
from services.fukui_service import (
    ArithSet,
    FukuiTriple,
    arith_first_difference,
    arith_min,
    fukui_brieskorn,
)
from services.series_service import first_difference
from services.zeta_service import (
    BrieskornGerm,
    BrieskornTerm,
    ZetaTriple,
    brieskorn_lcm,
    from_modified,
    modified_brieskorn,
    recover_power_factor,
    to_modified,
    unsuspend_even,
    zeta_brieskorn,
)
from utils import settings
from utils.constants import (
    EQUIVALENCE_REASONS,
    FUKUI_INVARIANTS,
    ZETA_INVARIANTS,
    InvariantName,
    VerdictKind,
)

logger = logging.getLogger(__name__)


# --- Types --------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """The named invariant of the two germs first differs at ``at``."""

    invariant: InvariantName
    at: int | str

    def to_dict(self) -> Dict[str, Any]:
        return {"invariant": self.invariant, "at": self.at}


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: str | None = None
    witness: Witness | None = None
    family: str | None = None
    order: int | None = None

    def to_dict(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {"kind": self.kind.value}
        if self.reason is not None:
            doc["reason"] = self.reason
        if self.witness is not None:
            doc["witness"] = self.witness.to_dict()
        if self.family is not None:
            doc["family"] = self.family
        if self.order is not None:
            doc["order"] = self.order
        return doc

    def describe(self) -> str:
        if self.kind is VerdictKind.EQUIVALENT:
            return f"Equivalent ({EQUIVALENCE_REASONS.get(self.reason or '', self.reason)})"
        if self.kind is VerdictKind.NOT_EQUIVALENT and self.witness is not None:
            where = "element" if self.witness.invariant.startswith("fukui") else "index"
            return f"NotEquivalent ({self.witness.invariant} differs at {where} {self.witness.at})"
        return f"Unresolved (open family {self.family})"


@dataclass(frozen=True)
class Fingerprint3:
    a_plus_kp1: int
    a_minus_kp1: int
    a_kp2: int
    in_Aplus: bool
    in_Aminus: bool

    def as_row(self) -> Tuple[int, int, int, str, str]:
        return (
            self.a_plus_kp1,
            self.a_minus_kp1,
            self.a_kp2,
            "yes" if self.in_Aplus else "no",
            "yes" if self.in_Aminus else "no",
        )


# --- Normal forms -------------------------------------------------------------------

def normalize_brieskorn(g: BrieskornGerm) -> BrieskornGerm:
    """Odd-exponent signs become +; terms are re-sorted with + ahead of -."""
    return BrieskornGerm(
        tuple(BrieskornTerm(t.exp, 1 if t.exp % 2 else t.sign) for t in g.terms)
    )


def normalize_klein(g: BrieskornGerm) -> BrieskornGerm:
    """Representative of the orbit of ``g`` under ``(x, y) -> (±x, ±y)`` and the swap."""
    if g.dimension != 2:
        raise UnsupportedGermError(f"Klein normalization is defined for two variables, got {g}")
    return normalize_brieskorn(g)


def sign_immaterial(f: BrieskornGerm, g: BrieskornGerm) -> bool:
    """True iff ``f`` and ``g`` differ only in signs that cannot be recovered.

    Exponents must agree and every differing sign must sit on an even exponent
    that is a multiple of an odd exponent (>= 3) of the germ.
    """
    f, g = normalize_brieskorn(f), normalize_brieskorn(g)
    if f.exponents != g.exponents or f == g:
        return False
    odd = [e for e in f.exponents if e % 2 and e > 1]
    for e, sf, sg in zip(f.exponents, f.signs, g.signs):
        if sf != sg and not (e % 2 == 0 and any(e % o == 0 for o in odd)):
            return False
    return True


def comparison_order(f: BrieskornGerm, g: BrieskornGerm) -> int:
    """Truncation order used when comparing the invariants of ``f`` and ``g``."""
    return 2 * brieskorn_lcm(f, g) + max(f.exponents + g.exponents) + 2


def case_i_family(g: BrieskornGerm) -> Tuple[int, int, int] | None:
    """``(p, k, sign)`` when ``g = ±(x^p + y^{kp} + z^{kp})`` with ``p`` even."""
    if g.dimension != 3:
        return None
    p, q, r = g.exponents
    signs = set(g.signs)
    if p % 2 or q != r or q % p or len(signs) != 1:
        return None
    return p, q // p, signs.pop()


# --- Witnesses ----------------------------------------------------------------------

def _zeta_component(z: ZetaTriple, name: str):
    return {"zeta_plus": z.plus, "zeta_minus": z.minus, "zeta_total": z.total()}[name]


def find_witness(f: BrieskornGerm, g: BrieskornGerm, order: int) -> Witness | None:
    """First invariant (Fukui sets, then zeta functions) telling ``f`` and ``g`` apart."""
    ff, fg = fukui_brieskorn(f), fukui_brieskorn(g)
    for name in FUKUI_INVARIANTS:
        at = arith_first_difference(ff.component(name), fg.component(name))
        if at is not None:
            logger.debug("%s and %s differ in %s at %s", f, g, name, at)
            return Witness(name, at)
    zf, zg = zeta_brieskorn(f, order), zeta_brieskorn(g, order)
    lead = _shared_even_lead(f, g)
    if lead is not None:
        return _unsuspended_witness(zf, zg, lead)
    for name in ZETA_INVARIANTS:
        at = first_difference(_zeta_component(zf, name), _zeta_component(zg, name))
        if at is not None:
            logger.debug("%s and %s differ in %s at T^%d", f, g, name, at)
            return Witness(name, at)
    return None


def _shared_even_lead(f: BrieskornGerm, g: BrieskornGerm) -> Tuple[int, int] | None:
    """``(p, sign)`` when two-variable ``f`` and ``g`` share the leading term ``±x^p``, ``p`` even."""
    if f.dimension != 2 or g.dimension != 2:
        return None
    lead = f.terms[0]
    if lead != g.terms[0] or lead.exp % 2:
        return None
    return lead.exp, lead.sign


def _unsuspended_witness(zf: ZetaTriple, zg: ZetaTriple, lead: Tuple[int, int]) -> Witness | None:
    """Compare the ``±y^q`` tails left after stripping the shared ``±x^p``.

    Unsuspension and the modified transform are both triangular, so the tails
    first differ where the full triples do; the witness names a full component.
    """
    tf, tg = (from_modified(unsuspend_even(*lead, to_modified(z))) for z in (zf, zg))
    hits = [first_difference(tf.plus, tg.plus), first_difference(tf.minus, tg.minus)]
    hits = [n for n in hits if n is not None]
    if not hits:
        return None
    at = min(hits)
    name = next(
        n for n in ZETA_INVARIANTS
        if first_difference(_zeta_component(zf, n), _zeta_component(zg, n)) == at
    )
    logger.debug("tails after x^%d differ in %s at T^%d", lead[0], name, at)
    return Witness(name, at)


def verify_witness(f: BrieskornGerm, g: BrieskornGerm, w: Witness, order: int) -> bool:
    """Recompute the named invariant and check it differs exactly at ``w.at``."""
    if w.invariant in FUKUI_INVARIANTS:
        a = fukui_brieskorn(f).component(w.invariant)
        b = fukui_brieskorn(g).component(w.invariant)
        return arith_first_difference(a, b) == w.at
    zf, zg = zeta_brieskorn(f, order), zeta_brieskorn(g, order)
    return first_difference(_zeta_component(zf, w.invariant), _zeta_component(zg, w.invariant)) == w.at


# --- Pair classification ------------------------------------------------------------

def _check_pair(f: BrieskornGerm, g: BrieskornGerm) -> None:
    if f.dimension != g.dimension:
        raise DimensionMismatchError(f"cannot compare {f} ({f.dimension} variables) with {g} ({g.dimension})")
    for h in (f, g):
        if min(h.exponents) < 2:
            raise RegularGermError(f"{h} has an exponent below 2 and is regular")


def classify_pair_2var(f: BrieskornGerm, g: BrieskornGerm, order: int | None = None) -> Verdict:
    """Two-variable classification.

    Raises:
        RegularGermError: If an exponent is 1.
        InconclusiveError: If no invariant separates a pair the merge rule does not cover.
    """
    _check_pair(f, g)
    nf, ng = normalize_klein(f), normalize_klein(g)
    order = order or comparison_order(nf, ng)
    if nf == ng:
        return Verdict(VerdictKind.EQUIVALENT, reason="identical", order=order)
    if sign_immaterial(nf, ng):
        return Verdict(VerdictKind.EQUIVALENT, reason="exceptional-rule", order=order)
    witness = find_witness(nf, ng, order)
    if witness is not None:
        return Verdict(VerdictKind.NOT_EQUIVALENT, witness=witness, order=order)
    raise InconclusiveError(
        f"invariants of {nf} and {ng} agree up to order {order}",
        order=order,
        suggested_order=2 * order,
    )


def classify_pair_3var(f: BrieskornGerm, g: BrieskornGerm, order: int | None = None) -> Verdict:
    """Three-variable classification.

    Identical invariants give Unresolved inside the open family and Equivalent
    everywhere else. Below the policy order identical invariants prove nothing,
    so a lowered ``order`` raises instead of answering Equivalent.

    Raises:
        InconclusiveError: If ``order`` is below `comparison_order` and no invariant differs.
    """
    _check_pair(f, g)
    nf, ng = normalize_brieskorn(f), normalize_brieskorn(g)
    policy = comparison_order(nf, ng)
    order = order or policy
    if nf == ng:
        return Verdict(VerdictKind.EQUIVALENT, reason="identical", order=order)
    witness = find_witness(nf, ng, order)
    if witness is not None:
        return Verdict(VerdictKind.NOT_EQUIVALENT, witness=witness, order=order)
    if order < policy:
        raise InconclusiveError(
            f"invariants of {nf} and {ng} agree up to order {order}",
            order=order,
            suggested_order=policy,
        )
    fam_f, fam_g = case_i_family(nf), case_i_family(ng)
    if fam_f and fam_g and fam_f[0] == fam_g[0] and fam_f[1] != fam_g[1]:
        p = fam_f[0]
        family = f"±(x^{p} + y^{{{p}k}} + z^{{{p}k}})"
        return Verdict(VerdictKind.UNRESOLVED, family=family, order=order)
    if sign_immaterial(nf, ng):
        return Verdict(VerdictKind.EQUIVALENT, reason="exceptional-rule", order=order)
    return Verdict(VerdictKind.EQUIVALENT, reason="same-invariants", order=order)


def classify_pair(f: BrieskornGerm, g: BrieskornGerm, order: int | None = None) -> Verdict:
    _check_pair(f, g)
    if f.dimension == 2:
        verdict = classify_pair_2var(f, g, order)
    elif f.dimension == 3:
        verdict = classify_pair_3var(f, g, order)
    else:
        raise UnsupportedGermError(f"classification covers two and three variables, got {f.dimension}")
    logger.debug("classified %s vs %s: %s", f, g, verdict.kind.value)
    return verdict


# --- Recovery -----------------------------------------------------------------------

def _read_power(b_plus, b_minus, order: int) -> Tuple[int, int]:
    """Read ``±y^q`` back from its modified coefficients."""
    for n in range(1, order + 1):
        bp, bm = b_plus[n], b_minus[n]
        if bp == 0:
            return n, 1
        if bp != bm:
            return n, 1 if bp > bm else -1
    raise InconclusiveError(
        f"second exponent exceeds order {order}", order=order, suggested_order=2 * order
    )


def recover_exponents_2var(
    z: ZetaTriple,
    fukui: FukuiTriple | None = None,
    r_max: int | None = None,
) -> List[BrieskornGerm]:
    """Normalized germs ``±x^p ± y^q`` whose zeta triple is ``z``.

    Returns one germ, or both ``x^p ± y^q`` when the sign of ``y^q`` is not
    recoverable from ``z``.

    Raises:
        AmbiguousZetaError: If ``z`` vanishes and no Fukui triple is given.
        InconclusiveError: If ``z`` is too short to pin down the exponents.
    """
    if z.is_zero():
        if fukui is None:
            raise AmbiguousZetaError(
                "zeta functions vanish: the germ is ±(x^p + y^p) with p even; "
                "pass the Fukui invariants to decide p and the sign"
            )
        p = arith_min(fukui.total)
        if p is None:
            raise ApplicationError("Fukui total set has no finite element")
        sign = 1 if arith_min(fukui.minus) is None else -1
        return [BrieskornGerm.of((p, sign), (p, sign))]

    order = z.order
    p = next(n for n in range(1, order + 1) if z.plus[n] or z.minus[n])
    c = to_modified(z)
    if p % 2 == 0:
        s1 = 1 if z.plus[p] else -1
        b = unsuspend_even(p, s1, c)
        q, sq = _read_power(b.tplus, b.tminus, order)
        found = [BrieskornGerm.of((p, s1), (q, sq))]
    else:
        factor = recover_power_factor(BrieskornGerm.of((p, 1)), c, r_max=r_max or settings.RECOVERY_RMAX or None)
        signs = (1, -1) if factor.sign is None else (factor.sign,)
        found = [BrieskornGerm.of((p, 1), (factor.r, s)) for s in signs]
    out = sorted({normalize_klein(g) for g in found}, key=lambda g: (g.exponents, [-s for s in g.signs]))
    logger.debug("recovered %s from zeta of order %d", [str(g) for g in out], order)
    return out


def second_exponent_from_fukui(a: ArithSet, p: int) -> Tuple[int, ...]:
    """Second exponent of ``x^p + y^q + ...`` from ``A(f)``, ``p`` odd and minimal.

    ``n`` is the least element not divisible by ``p``. With ``kp + 1 < n < (k+1)p``
    the exponent is ``n``; with ``n = kp + 1`` it is ``n - 1`` or ``n``.

    Raises:
        ApplicationError: If ``p`` is even or not the least element of ``A(f)``,
            or if every finite element is a multiple of ``p``.
    """
    if p % 2 == 0:
        raise ApplicationError(f"the leading exponent must be odd, got {p}")
    if arith_min(a) != p:
        raise ApplicationError(f"{p} is not the least element of A(f) (found {arith_min(a)})")
    bound = a.transient_max + a.period * p
    for n in range(1, bound + 1):
        if n in a and n % p:
            return (n - 1, n) if n % p == 1 else (n,)
    raise ApplicationError(f"every finite element of A(f) is a multiple of {p}")


def fingerprint_3var(p: int, k: int, g2: BrieskornGerm) -> Fingerprint3:
    """Modified coefficients at ``kp+1`` and ``kp+2`` and Fukui membership of ``kp+1``
    for ``x^p + g2(y, z)``."""
    if g2.dimension != 2:
        raise UnsupportedGermError(f"tail must have two variables, got {g2}")
    if p % 2 == 0 or k % 2 == 0:
        raise ApplicationError(f"fingerprints need odd p and k, got p={p}, k={k}")
    kp = k * p
    f = BrieskornGerm(((BrieskornTerm(p, 1),) + g2.terms))
    order = max(kp + 2, max(f.exponents))
    m = modified_brieskorn(f, order)
    if m.tplus[kp + 2] != m.tminus[kp + 2]:
        raise ApplicationError(f"modified coefficients of {f} split at T^{kp + 2}")
    fk = fukui_brieskorn(f)
    return Fingerprint3(
        m.tplus[kp + 1],
        m.tminus[kp + 1],
        m.tplus[kp + 2],
        (kp + 1) in fk.plus,
        (kp + 1) in fk.minus,
    )

