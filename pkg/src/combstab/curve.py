"""Comb-like curves of compact type.

A comb-like curve has ``n >= 2`` smooth components.  The last component
(the base) meets every other component in exactly one node ``p_i`` and the
non-base components are pairwise disjoint, so the dual graph is a star.
"""

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class CombCurve:
    genera: tuple[int, ...]

    def __post_init__(self):
        genera = tuple(self.genera)
        object.__setattr__(self, "genera", genera)
        if len(genera) < 2:
            raise ValidationError("a comb-like curve needs n >= 2 components", "genera")
        for i, g in enumerate(genera, start=1):
            if isinstance(g, bool) or not isinstance(g, int):
                raise ValidationError(f"genus g_{i} must be an integer, got {g!r}", "genera")
            if g < 0:
                raise ValidationError(f"genus g_{i} = {g} is negative", "genera")

    @property
    def n(self) -> int:
        return len(self.genera)

    @property
    def base_index(self) -> int:
        return self.n

    @property
    def nodes(self) -> tuple[tuple[int, int], ...]:
        """Node incidences ``(i, n)``: node ``p_i`` joins ``C_i`` to the base."""
        return tuple((i, self.n) for i in range(1, self.n))

    def genus(self, i: int) -> int:
        """Genus of component ``i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"component index {i} out of range 1..{self.n}")
        return self.genera[i - 1]

    def nodes_on(self, i: int) -> int:
        """Number of nodes lying on component ``i``."""
        self.genus(i)
        return self.n - 1 if i == self.n else 1


def arithmetic_genus(curve: CombCurve) -> int:
    return sum(curve.genera)


def chi_structure_sheaf(curve: CombCurve) -> int:
    # sum of chi(O_{C_i}) minus one for each node in the skyscraper cokernel
    return 1 - arithmetic_genus(curve)
