"""Does any polarization make ``M_{E,V}`` semistable against the catalog?

Each catalog entry ``F`` turns ``mu_w(F) <= mu_w(M)`` into one linear
inequality on the weights.  Together with ``w_i > 0`` and ``sum(w) = 1`` this
is a small rational feasibility problem, decided exactly by Fourier-Motzkin
elimination.  Every derived row remembers the non-negative multipliers of the
original constraints that produced it, so an infeasible verdict comes with a
Farkas-style certificate that can be re-checked by plain arithmetic.
"""

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .catalog import Destabilizer, build_catalog
from .curve import CombCurve
from .errors import TheoremViolation
from .polarization import Polarization, verdict_at
from .sheaves import GeneratedPairData, syzygy_multisheaf


@dataclass(frozen=True)
class LinearConstraint:
    """``sum(coefficients[i] * w_i) <= bound`` (``<`` when ``strict``)."""

    coefficients: tuple[Fraction, ...]
    bound: Fraction
    strict: bool
    provenance: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        object.__setattr__(self, "bound", Fraction(self.bound))
        object.__setattr__(self, "provenance", frozenset(self.provenance))

    @property
    def tag(self) -> str:
        return "+".join(sorted(self.provenance))

    def lhs(self, point) -> Fraction:
        return sum((c * Fraction(x) for c, x in zip(self.coefficients, point)), Fraction(0))

    def holds(self, point) -> bool:
        value = self.lhs(point)
        return value < self.bound if self.strict else value <= self.bound

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"w{i}" if mag == 1 else f"{mag}*w{i}"
            terms.append((sign, body))
        if not terms:
            text = "0"
        else:
            first_sign, first = terms[0]
            text = ("-" if first_sign == "-" else "") + first
            for sign, body in terms[1:]:
                text += f" {sign} {body}"
        op = "<" if self.strict else "<="
        return f"{text} {op} {self.bound}"


def positivity_constraints(n: int) -> list[LinearConstraint]:
    return [
        LinearConstraint(tuple(-1 if j == i else 0 for j in range(n)), 0, True,
                         {f"w{i + 1}>0"})
        for i in range(n)
    ]


def catalog_constraint(curve: CombCurve, pair: GeneratedPairData,
                       entry: Destabilizer) -> LinearConstraint:
    """Semistability against one catalog entry, as a linear inequality.

    On the simplex the weighted rank of ``M`` is the constant ``l - r``, so
    ``mu_w(F) <= mu_w(M)`` cross-multiplies to
    ``-chi(M) * sum(r_i(F) w_i) <= -chi(F) (l - r)``.  The common factor of
    the multirank (the kernel rank) is divided out.
    """
    m = syzygy_multisheaf(curve, pair)
    ranks = entry.sheaf.multirank
    content = math.gcd(*ranks)
    coeffs = tuple(Fraction(-m.chi * x, content) for x in ranks)
    bound = Fraction(-entry.sheaf.chi * pair.syzygy_rank, content)
    return LinearConstraint(coeffs, bound, False, {entry.tag})


def build_constraint_system(curve: CombCurve, pair: GeneratedPairData,
                            catalog: Sequence[Destabilizer]) -> list[LinearConstraint]:
    """Catalog constraints in catalog order, then ``w_i > 0`` for every ``i``.

    The simplex equation ``sum(w) = 1`` is implicit in every system.
    """
    rows = [catalog_constraint(curve, pair, entry) for entry in catalog]
    return rows + positivity_constraints(curve.n)


@dataclass(frozen=True)
class CertificateTerm:
    constraint: LinearConstraint
    multiplier: Fraction

    @property
    def provenance(self) -> frozenset:
        return self.constraint.provenance


@dataclass(frozen=True)
class Certificate:
    """Non-negative multipliers whose combination contradicts ``sum(w) = 1``.

    The weighted sum of the listed constraints has every coefficient equal to
    the same ``c``; on the simplex it reads ``c <= B`` (or ``c < B``), which is
    false.
    """

    terms: tuple[CertificateTerm, ...]

    def combined(self):
        """Return ``(coefficients, bound, strict)`` of the weighted sum."""
        n = len(self.terms[0].constraint.coefficients)
        coeffs = [Fraction(0)] * n
        bound = Fraction(0)
        strict = False
        for term in self.terms:
            lam = term.multiplier
            for i, c in enumerate(term.constraint.coefficients):
                coeffs[i] += lam * c
            bound += lam * term.constraint.bound
            strict = strict or (lam > 0 and term.constraint.strict)
        return tuple(coeffs), bound, strict

    def summary(self) -> str:
        coeffs, bound, strict = self.combined()
        parts = " + ".join(f"{t.multiplier}*{t.constraint.tag}" for t in self.terms)
        op = "<" if strict else "<="
        return f"{parts} => {coeffs[0]} {op} {bound}"


def verify_certificate(certificate: Certificate,
                       system: Optional[Sequence[LinearConstraint]] = None) -> bool:
    """Re-check a certificate by arithmetic alone.

    When ``system`` is given, every term must cite one of its constraints.
    """
    if not certificate.terms:
        return False
    n = len(certificate.terms[0].constraint.coefficients)
    if any(len(t.constraint.coefficients) != n for t in certificate.terms):
        return False
    if any(t.multiplier < 0 for t in certificate.terms):
        return False
    if not any(t.multiplier > 0 for t in certificate.terms):
        return False
    if system is not None:
        known = set(system)
        if any(t.constraint not in known for t in certificate.terms):
            return False
    coeffs, bound, strict = certificate.combined()
    if any(c != coeffs[0] for c in coeffs):
        return False
    c = coeffs[0]
    return c > bound or (c == bound and strict)


class Status(enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class FeasibilityResult:
    status: Status
    witness: Optional[Polarization] = None
    certificate: Optional[Certificate] = None

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


class _Row:
    """A constraint over the first ``n - 1`` weights after substituting ``w_n``.

    ``mult`` maps indices of original constraints to the multipliers that
    reproduce this row from them.
    """

    __slots__ = ("coeffs", "bound", "strict", "mult")

    def __init__(self, coeffs, bound, strict, mult):
        self.coeffs = coeffs
        self.bound = bound
        self.strict = strict
        self.mult = mult

    def normalized(self):
        g = math.gcd(*self.coeffs)
        if g > 1:
            self.coeffs = tuple(c // g for c in self.coeffs)
            self.bound /= g
            self.mult = {j: m / g for j, m in self.mult.items()}
        return self

    def is_constant(self):
        return not any(self.coeffs)

    def contradicts(self):
        return self.is_constant() and (self.bound < 0 or (self.bound == 0 and self.strict))

    def support(self):
        return tuple(sorted(self.mult))


def _reduce(index, constraint):
    a = constraint.coefficients
    last = a[-1]
    reduced = [c - last for c in a[:-1]]
    bound = constraint.bound - last
    scale = math.lcm(*(x.denominator for x in reduced), bound.denominator)
    coeffs = tuple(int(c * scale) for c in reduced)
    return _Row(coeffs, bound * scale, constraint.strict, {index: Fraction(scale)}).normalized()


def _combine(pos, neg, k):
    p = pos.coeffs[k]
    q = -neg.coeffs[k]
    g = math.gcd(p, q)
    a, b = q // g, p // g
    coeffs = tuple(a * x + b * y for x, y in zip(pos.coeffs, neg.coeffs))
    mult = {j: a * m for j, m in pos.mult.items()}
    for j, m in neg.mult.items():
        mult[j] = mult.get(j, 0) + b * m
    return _Row(coeffs, a * pos.bound + b * neg.bound, pos.strict or neg.strict, mult).normalized()


def _prune(rows, eliminated):
    """Drop rows that cannot matter.

    Chernikov's rule: after ``eliminated`` steps a row built from more than
    ``eliminated + 1`` originals is implied by the others.  Exact duplicates
    are also dropped, keeping the one with the smallest history.
    """
    seen = {}
    for row in rows:
        if len(row.mult) > eliminated + 1:
            continue
        if row.is_constant() and not row.contradicts():
            continue
        key = (row.coeffs, row.bound, row.strict)
        best = seen.get(key)
        if best is None or (len(row.mult), row.support()) < (len(best.mult), best.support()):
            seen[key] = row
    return list(seen.values())


def _certificate(row, system):
    lcm = math.lcm(*(m.denominator for m in row.mult.values()))
    ints = {j: int(m * lcm) for j, m in row.mult.items() if m != 0}
    g = math.gcd(*ints.values())
    terms = tuple(CertificateTerm(system[j], Fraction(v, g)) for j, v in sorted(ints.items()))
    return Certificate(terms)


def _pick(lo, lo_strict, hi, hi_strict):
    if lo is not None and hi is not None:
        if lo == hi:
            assert not (lo_strict or hi_strict)
            return lo
        return (lo + hi) / 2
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi - 1
    return Fraction(0)


def decide(system: Sequence[LinearConstraint], n: Optional[int] = None) -> FeasibilityResult:
    """Decide whether the system has a point in the open simplex.

    Variables are eliminated from ``w_{n-1}`` down to ``w_1`` after
    ``w_n = 1 - sum(others)`` is substituted.  A feasible system gets a witness
    built by back-substitution, taking the midpoint of each variable's
    admissible interval.
    """
    system = list(system)
    if n is None:
        if not system:
            raise ValueError("cannot infer dimension from an empty system")
        n = len(system[0].coefficients)
    if n < 2:
        raise ValueError("need at least two weights")
    if any(len(c.coefficients) != n for c in system):
        raise ValueError("constraint dimension mismatch")

    rows = [_reduce(j, c) for j, c in enumerate(system)]
    levels = []
    eliminated = 0
    while True:
        bad = [row for row in rows if row.contradicts()]
        if bad:
            best = min(bad, key=lambda row: (len(row.mult), row.support()))
            return FeasibilityResult(Status.INFEASIBLE, certificate=_certificate(best, system))
        if eliminated == n - 1:
            break
        k = n - 2 - eliminated
        levels.append((k, rows))
        pos = [row for row in rows if row.coeffs[k] > 0]
        neg = [row for row in rows if row.coeffs[k] < 0]
        rest = [row for row in rows if row.coeffs[k] == 0]
        combined = [_combine(p, q, k) for p, q in itertools.product(pos, neg)]
        eliminated += 1
        rows = _prune(rest + combined, eliminated)

    values = [Fraction(0)] * (n - 1)
    for k, level_rows in reversed(levels):
        lo = hi = None
        lo_strict = hi_strict = False
        for row in level_rows:
            c = row.coeffs[k]
            if c == 0:
                continue
            rhs = row.bound - sum(row.coeffs[i] * values[i] for i in range(k))
            limit = rhs / c
            if c > 0:
                if hi is None or limit < hi or (limit == hi and row.strict):
                    hi, hi_strict = limit, row.strict
            else:
                if lo is None or limit > lo or (limit == lo and row.strict):
                    lo, lo_strict = limit, row.strict
        values[k] = _pick(lo, lo_strict, hi, hi_strict)

    point = tuple(values) + (1 - sum(values),)
    failed = [c for c in system if not c.holds(point)]
    if failed:
        raise RuntimeError(f"back-substituted point {point} violates {failed[0]}")
    return FeasibilityResult(Status.FEASIBLE, witness=Polarization(point))


@lru_cache(maxsize=512)
def _compositions(total, parts):
    """All ``parts``-tuples of positive integers summing to ``total``, in lex order.

    Stars and bars: lex order on the cut points is lex order on the parts.
    """
    cuts = np.array(list(itertools.combinations(range(1, total), parts - 1)),
                    dtype=np.int64).reshape(-1, parts - 1)
    edges = np.hstack([np.zeros((cuts.shape[0], 1), np.int64), cuts,
                       np.full((cuts.shape[0], 1), total, np.int64)])
    out = np.diff(edges, axis=1)
    out.flags.writeable = False
    return out


def _grid_chunks(n, denominator, max_rows=1 << 18):
    """Yield lex-ordered blocks of grid numerators, keeping each block small."""
    if n <= 2 or math.comb(denominator - 1, n - 1) <= max_rows:
        yield _compositions(denominator, n)
        return
    for first in range(1, denominator - n + 2):
        for block in _grid_chunks(n - 1, denominator - first, max_rows):
            yield np.hstack([np.full((block.shape[0], 1), first, dtype=np.int64), block])


def grid_oracle(curve: CombCurve, pair: GeneratedPairData,
                catalog: Sequence[Destabilizer], denominator: int) -> Optional[Polarization]:
    """First grid polarization ``a / D`` (lex order) not destabilized by the catalog.

    This works from the slope definition directly: at ``w = a / D`` the
    weighted rank of a sheaf is ``(a . r) / D``, so ``F`` destabilizes ``M``
    iff ``chi(F) * (a . r(M)) > chi(M) * (a . r(F))`` in integers.  It never
    consults the linear constraint system.
    """
    n = curve.n
    if denominator < n:
        raise ValueError(f"denominator {denominator} < n = {n} leaves no interior grid point")
    m = syzygy_multisheaf(curve, pair)
    m_ranks = np.array(m.multirank, dtype=np.int64)
    entries = [(e.sheaf.chi, np.array(e.sheaf.multirank, dtype=np.int64)) for e in catalog]
    for block in _grid_chunks(n, denominator):
        rho_m = block @ m_ranks
        unstable = np.zeros(block.shape[0], dtype=bool)
        for chi_f, ranks_f in entries:
            rho_f = block @ ranks_f
            unstable |= chi_f * rho_m > m.chi * rho_f
        ok = np.flatnonzero(~unstable)
        if ok.size:
            row = block[ok[0]]
            return Polarization(tuple(Fraction(int(a), denominator) for a in row))
    return None


def grid_oracle_scan(curve, pair, catalog, denominator):
    """Point-by-point version of :func:`grid_oracle` through ``verdict_at``."""
    n = curve.n
    if denominator < n:
        raise ValueError(f"denominator {denominator} < n = {n} leaves no interior grid point")
    for row in _compositions(denominator, n):
        w = Polarization(tuple(Fraction(int(a), denominator) for a in row))
        if not verdict_at(w, curve, pair, catalog).unstable:
            return w
    return None


@dataclass(frozen=True)
class TheoremHypotheses:
    ratio: Fraction
    threshold: int
    kernels_nonzero: bool

    @property
    def ratio_exceeds_threshold(self) -> bool:
        return self.ratio > self.threshold

    @property
    def hold(self) -> bool:
        return self.kernels_nonzero and self.ratio_exceeds_threshold


@dataclass(frozen=True)
class StabilityReport:
    strongly_unstable: bool
    hypotheses: TheoremHypotheses
    catalog: tuple
    system: tuple
    result: FeasibilityResult

    @property
    def verdict(self) -> str:
        return "StronglyUnstable" if self.strongly_unstable else "NotDisprovedByCatalog"

    @property
    def certificate(self) -> Optional[Certificate]:
        return self.result.certificate

    @property
    def witness(self) -> Optional[Polarization]:
        return self.result.witness


def theorem_hypotheses(curve: CombCurve, pair: GeneratedPairData) -> TheoremHypotheses:
    return TheoremHypotheses(
        ratio=Fraction(pair.total_degree, pair.syzygy_rank),
        threshold=curve.n - 1,
        kernels_nonzero=all(t > 0 for t in pair.kernel_ranks),
    )


def strong_instability_report(curve: CombCurve, pair: GeneratedPairData) -> StabilityReport:
    """Decide strong instability relative to the catalog.

    When every restriction kernel is nonzero and ``d / (l - r) > n - 1`` the
    system must be infeasible; anything else raises :class:`TheoremViolation`.
    """
    catalog = build_catalog(curve, pair)
    system = build_constraint_system(curve, pair, catalog)
    result = decide(system, curve.n)
    hyp = theorem_hypotheses(curve, pair)
    if hyp.hold and result.feasible:
        raise TheoremViolation(
            f"hypotheses hold (d/(l-r) = {hyp.ratio} > {hyp.threshold}) but "
            f"{result.witness} is catalog-semistable")
    return StabilityReport(not result.feasible, hyp, tuple(catalog), tuple(system), result)
