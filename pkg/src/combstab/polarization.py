"""Polarized slopes and fixed-polarization verdicts, in exact arithmetic."""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import Destabilizer
from .curve import CombCurve
from .errors import ValidationError
from .sheaves import GeneratedPairData, MultiSheaf, syzygy_multisheaf


@dataclass(frozen=True)
class Polarization:
    """Rational weights ``w_i`` in the open interval (0, 1) summing to 1."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        try:
            ws = tuple(Fraction(w) for w in self.weights)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"weights must be rational: {exc}", "weights") from None
        if len(ws) < 2:
            raise ValidationError("need at least two weights", "weights")
        for i, w in enumerate(ws, start=1):
            if not 0 < w < 1:
                raise ValidationError(f"w_{i} = {w} is not in (0, 1)", "weights")
        if sum(ws) != 1:
            raise ValidationError(f"weights sum to {sum(ws)}, not 1", "weights")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def uniform(cls, n):
        return cls((Fraction(1, n),) * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __str__(self):
        return "(" + ", ".join(str(w) for w in self.weights) + ")"


def weighted_rank(sheaf: MultiSheaf, w: Polarization) -> Fraction:
    if sheaf.n != w.n:
        raise ValidationError(f"sheaf has {sheaf.n} components, polarization {w.n}")
    return sum((wi * ri for wi, ri in zip(w.weights, sheaf.multirank)), Fraction(0))


def slope(sheaf: MultiSheaf, w: Polarization) -> Fraction:
    rho = weighted_rank(sheaf, w)
    if rho == 0:
        raise ValidationError("malformed sheaf: zero multirank", "multirank")
    return Fraction(sheaf.chi) / rho


class Relation(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


@dataclass(frozen=True)
class SlopeComparison:
    left: MultiSheaf
    right: MultiSheaf
    relation: Relation
    cross_product_gap: Fraction


def compare_slopes(a: MultiSheaf, b: MultiSheaf, w: Polarization) -> SlopeComparison:
    """Compare ``mu_w(a)`` with ``mu_w(b)`` without dividing.

    Both weighted ranks are positive, so the sign of
    ``chi(a) * rho(b) - chi(b) * rho(a)`` decides the order.
    """
    rho_a = weighted_rank(a, w)
    rho_b = weighted_rank(b, w)
    if rho_a == 0 or rho_b == 0:
        raise ValidationError("malformed sheaf: zero multirank", "multirank")
    gap = a.chi * rho_b - b.chi * rho_a
    if gap > 0:
        rel = Relation.GREATER
    elif gap < 0:
        rel = Relation.LESS
    else:
        rel = Relation.EQUAL
    return SlopeComparison(a, b, rel, gap)


class VerdictKind(enum.Enum):
    UNSTABLE_AT = "UnstableAt"
    CATALOG_SEMISTABLE_AT = "CatalogSemistableAt"
    CATALOG_STABLE_AT = "CatalogStableAt"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Optional[Destabilizer] = None

    @property
    def unstable(self) -> bool:
        return self.kind is VerdictKind.UNSTABLE_AT


def verdict_at(w: Polarization, curve: CombCurve, pair: GeneratedPairData,
               catalog: Sequence[Destabilizer]) -> Verdict:
    """Catalog-relative (semi)stability of ``M_{E,V}`` at ``w``.

    Only the catalog subsheaves are tested, so a non-destabilized verdict is a
    necessary condition for semistability, not a proof of it.  The witness is
    the first catalog entry whose slope strictly exceeds that of ``M``.
    """
    m = syzygy_multisheaf(curve, pair)
    saw_equal = False
    for entry in catalog:
        rel = compare_slopes(entry.sheaf, m, w).relation
        if rel is Relation.GREATER:
            return Verdict(VerdictKind.UNSTABLE_AT, entry)
        saw_equal = saw_equal or rel is Relation.EQUAL
    if saw_equal:
        return Verdict(VerdictKind.CATALOG_SEMISTABLE_AT)
    return Verdict(VerdictKind.CATALOG_STABLE_AT)
