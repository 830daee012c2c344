"""The fixed list of candidate destabilizing subsheaves of ``M_{E,V}``.

For a non-base component ``C_i`` the kernel of restriction, tensored with
``O_{C_i}(-p_i)``, sits inside ``M_{E,V}``; for the base the twist is by all
``n - 1`` nodes.  Each entry's ``chi`` comes from Riemann-Roch on the
component: ``chi(O_{C_i}(-D)) = -deg D + 1 - g_i``, scaled by the kernel rank.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .curve import CombCurve
from .sheaves import GeneratedPairData, MultiSheaf, kernel_rank


class DestabilizerKind(enum.Enum):
    KERNEL_TWIST_NON_BASE = "KernelTwistNonBase"
    KERNEL_TWIST_BASE = "KernelTwistBase"
    RESTRICTION_KERNEL = "RestrictionKernel"


@dataclass(frozen=True)
class Destabilizer:
    sheaf: MultiSheaf
    kind: DestabilizerKind
    source_component: int

    @property
    def tag(self) -> str:
        return f"C{self.source_component}"

    @property
    def kernel_rank(self) -> int:
        return self.sheaf.multirank[self.source_component - 1]


def _twisted_kernel_chi(t, genus, twist_degree):
    return t * (-twist_degree + 1 - genus)


def _unit(n, i, t):
    return tuple(t if j == i else 0 for j in range(1, n + 1))


def build_catalog(curve: CombCurve, pair: GeneratedPairData) -> list[Destabilizer]:
    """Catalog entries in ascending component order; zero-rank kernels are skipped."""
    out = []
    n = curve.n
    for i in range(1, n + 1):
        t = kernel_rank(pair, i)
        if t == 0:
            continue
        g = curve.genus(i)
        if i < n:
            kind = DestabilizerKind.KERNEL_TWIST_NON_BASE
            label = f"ker(rho_{i}) (x) O_C{i}(-p_{i})"
        else:
            kind = DestabilizerKind.KERNEL_TWIST_BASE
            label = f"ker(rho_{n}) (x) O_C{n}(-p_1-...-p_{n - 1})"
        chi = _twisted_kernel_chi(t, g, curve.nodes_on(i))
        out.append(Destabilizer(MultiSheaf(_unit(n, i, t), chi, label), kind, i))
    return out


def restriction_kernel(curve: CombCurve, pair: GeneratedPairData, i: int) -> Destabilizer:
    """The trivial subbundle ``ker(rho_i) (x) O_{C_i}`` of ``M|_{C_i}``."""
    t = kernel_rank(pair, i)
    if t == 0:
        raise ValueError(f"restriction to component {i} is injective on V")
    sheaf = MultiSheaf(_unit(curve.n, i, t), _twisted_kernel_chi(t, curve.genus(i), 0),
                       f"ker(rho_{i}) (x) O_C{i}")
    return Destabilizer(sheaf, DestabilizerKind.RESTRICTION_KERNEL, i)


class RestrictionVerdict(enum.Enum):
    UNSTABLE = "Unstable"
    INCONCLUSIVE = "Inconclusive"


def restriction_slope_check(curve: CombCurve, pair: GeneratedPairData,
                            i: int) -> RestrictionVerdict:
    """Classical slope test of ``M|_{C_i}`` against its trivial kernel subbundle.

    The subbundle has degree 0, and ``M|_{C_i}`` has slope ``-d_i / (l - r)``.
    """
    t = kernel_rank(pair, i)
    if t == 0:
        return RestrictionVerdict.INCONCLUSIVE
    restricted_slope = Fraction(-pair.degrees[i - 1], pair.syzygy_rank)
    if Fraction(0) > restricted_slope:
        return RestrictionVerdict.UNSTABLE
    return RestrictionVerdict.INCONCLUSIVE
