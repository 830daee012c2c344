"""Numerical invariants of generated pairs and pure one-dimensional sheaves.

Nothing here computes cohomology.  Section counts and kernel ranks are user
data; the functions below check them for mutual consistency and derive the
Euler characteristic and multirank of the syzygy bundle.
"""

from dataclasses import dataclass

from .curve import CombCurve, arithmetic_genus, chi_structure_sheaf
from .errors import ValidationError


def _int_tuple(values, field):
    out = tuple(values)
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"expected integers, got {v!r}", field)
    return out


@dataclass(frozen=True)
class GeneratedPairData:
    """Numerical type ``(r, d_i, l, l_i)`` of a generated pair ``(E, V)``.

    ``section_dims[i]`` is the dimension of the image of ``V`` under
    restriction to component ``i + 1``.
    """

    r: int
    degrees: tuple[int, ...]
    l: int
    section_dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", _int_tuple(self.degrees, "degrees"))
        object.__setattr__(self, "section_dims", _int_tuple(self.section_dims, "section_dims"))
        _int_tuple((self.r,), "rank")
        _int_tuple((self.l,), "l")
        if self.r < 1:
            raise ValidationError(f"rank r >= 1 required, got {self.r}", "rank")
        if self.l <= self.r:
            raise ValidationError(f"l > r required (l={self.l}, r={self.r})", "l")
        if len(self.degrees) != len(self.section_dims):
            raise ValidationError(
                f"length mismatch: {len(self.degrees)} degrees vs "
                f"{len(self.section_dims)} section dimensions", "section_dims")
        for i, d in enumerate(self.degrees, start=1):
            if d < 0:
                raise ValidationError(f"d_{i} = {d} is negative", "degrees")
        for i, li in enumerate(self.section_dims, start=1):
            if not self.r <= li <= self.l:
                raise ValidationError(
                    f"r <= l_{i} <= l required, got l_{i} = {li} (r={self.r}, l={self.l})",
                    "section_dims")

    @classmethod
    def from_kernel_ranks(cls, r, degrees, l, kernel_ranks):
        ts = _int_tuple(kernel_ranks, "kernel_ranks")
        for i, t in enumerate(ts, start=1):
            if not 0 <= t <= l - r:
                raise ValidationError(
                    f"0 <= t_{i} <= l - r required, got t_{i} = {t}", "kernel_ranks")
        return cls(r, tuple(degrees), l, tuple(l - t for t in ts))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def syzygy_rank(self) -> int:
        return self.l - self.r

    @property
    def kernel_ranks(self) -> tuple[int, ...]:
        return tuple(self.l - li for li in self.section_dims)


@dataclass(frozen=True)
class MultiSheaf:
    """A pure sheaf of dimension one, seen through its multirank and ``chi``."""

    multirank: tuple[int, ...]
    chi: int
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "multirank", _int_tuple(self.multirank, "multirank"))
        _int_tuple((self.chi,), "chi")
        if any(x < 0 for x in self.multirank):
            raise ValidationError("multirank entries must be non-negative", "multirank")
        if not any(self.multirank):
            raise ValidationError("zero multirank: a pure sheaf of dimension one is nonzero",
                                  "multirank")

    @classmethod
    def from_multidegree(cls, curve, multirank, multidegree, label=""):
        """Build a vector bundle of constant rank from its multidegree.

        Only full-support sheaves of constant rank are accepted, where
        ``chi = sum(d_i + r(1 - g_i)) - r(n - 1)``.  Partial supports would need
        torsion corrections at the nodes and are refused.
        """
        multirank = tuple(multirank)
        multidegree = tuple(multidegree)
        if len(multirank) != curve.n or len(multidegree) != curve.n:
            raise ValidationError(f"expected {curve.n} entries", "multirank")
        rank = multirank[0]
        if rank <= 0 or any(x != rank for x in multirank):
            raise ValidationError(
                "multidegree input is only supported for constant positive multirank",
                "multirank")
        chi = sum(d + rank * (1 - g) for d, g in zip(multidegree, curve.genera))
        return cls(multirank, chi - rank * (curve.n - 1), label)

    @property
    def n(self) -> int:
        return len(self.multirank)


def _check_dims(curve, pair):
    if curve.n != pair.n:
        raise ValidationError(
            f"curve has {curve.n} components but pair has {pair.n} restrictions", "degrees")


def chi_bundle(curve: CombCurve, pair: GeneratedPairData) -> int:
    """Euler characteristic of ``E``, computed globally and component-wise.

    The two forms must agree; a mismatch is an internal error.
    """
    _check_dims(curve, pair)
    r = pair.r
    global_form = pair.total_degree + r * chi_structure_sheaf(curve)
    per_component = sum(d + r * (1 - g) for d, g in zip(pair.degrees, curve.genera))
    local_form = per_component - r * (curve.n - 1)
    assert global_form == local_form, (global_form, local_form)
    return global_form


def syzygy_multisheaf(curve: CombCurve, pair: GeneratedPairData) -> MultiSheaf:
    """Multirank and ``chi`` of the syzygy bundle ``M_{E,V}``.

    ``chi(M) = (l - r)(1 - p_a) - d``.  It is usually negative but not always;
    see :func:`chi_nonnegative`.
    """
    _check_dims(curve, pair)
    k = pair.syzygy_rank
    chi = k * (1 - arithmetic_genus(curve)) - pair.total_degree
    return MultiSheaf((k,) * curve.n, chi, "M")


def chi_nonnegative(curve: CombCurve, pair: GeneratedPairData) -> bool:
    """Flag for instances where ``chi(M_{E,V}) >= 0``.

    Happens only for ``p_a = 0`` with ``d <= l - r``, or ``p_a = 1`` with ``d = 0``.
    """
    return syzygy_multisheaf(curve, pair).chi >= 0


def kernel_rank(pair: GeneratedPairData, i: int) -> int:
    """Rank of the kernel of restricting ``V`` to component ``i`` (1-based)."""
    if not 1 <= i <= pair.n:
        raise IndexError(f"component index {i} out of range 1..{pair.n}")
    return pair.l - pair.section_dims[i - 1]


def base_kernel_from_intersections(intersection_dims, l=None, base_section_dim=None) -> int:
    """Kernel rank of restriction to the base from the node intersections.

    ``intersection_dims[i]`` is ``dim(V ∩ H^0(E_i(-p_i)))``.  The kernel on
    the base is their direct sum.  If ``l`` and ``base_section_dim`` are both
    given, the result must equal ``l - base_section_dim``.
    """
    ks = _int_tuple(intersection_dims, "intersection_dims")
    if any(k < 0 for k in ks):
        raise ValidationError("intersection dimensions must be non-negative",
                              "intersection_dims")
    t_base = sum(ks)
    if l is not None and base_section_dim is not None and t_base != l - base_section_dim:
        raise ValidationError(
            f"base kernel rank {t_base} from intersections disagrees with "
            f"l - l_n = {l - base_section_dim}", "intersection_dims")
    return t_base


def check_intersections(pair: GeneratedPairData, intersection_dims) -> None:
    """Validate intersection data against the pair's kernel ranks.

    The base kernel rank must equal the sum of the intersections.  For a
    non-base component ``i`` the kernel contains the intersections at every
    other node, so ``t_i`` is bounded below by their sum.
    """
    ks = tuple(intersection_dims)
    if len(ks) != pair.n - 1:
        raise ValidationError(f"expected {pair.n - 1} entries, got {len(ks)}",
                              "intersection_dims")
    base_kernel_from_intersections(ks, pair.l, pair.section_dims[-1])
    ts = pair.kernel_ranks
    total = sum(ks)
    for i in range(pair.n - 1):
        lower = total - ks[i]
        if ts[i] < lower:
            raise ValidationError(
                f"t_{i + 1} = {ts[i]} is below {lower}, the sum of the other "
                "node intersections", "intersection_dims")


def lemma_kernels_nonzero(intersection_dims, n=None) -> bool:
    """True when two distinct nodes carry nonzero intersections.

    Under that hypothesis every restriction kernel, base included, is nonzero.
    With a single node (``n = 2``) the hypothesis can never hold.
    """
    ks = _int_tuple(intersection_dims, "intersection_dims")
    if not ks or (n is not None and len(ks) != n - 1):
        raise ValidationError(f"expected one entry per node, got {len(ks)}",
                              "intersection_dims")
    if any(k < 0 for k in ks):
        raise ValidationError("intersection dimensions must be non-negative",
                              "intersection_dims")
    return sum(1 for k in ks if k > 0) >= 2
