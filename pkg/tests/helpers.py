import random
from fractions import Fraction

from hypothesis import strategies as st

from combstab import CombCurve, GeneratedPairData, Polarization


def make(genera, r, l, degrees, kernel_ranks):
    return CombCurve(tuple(genera)), GeneratedPairData.from_kernel_ranks(
        r, tuple(degrees), l, tuple(kernel_ranks))


def split_degree(rng, total, n):
    cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def random_instance(rng, n_range=(2, 6), genus_max=5, theorem=False, min_kernel=0,
                    degree_slack=20):
    """Random instance; with ``theorem=True`` every kernel is nonzero and
    ``d > (n - 1)(l - r)``."""
    n = rng.randint(*n_range)
    genera = [rng.randint(0, genus_max) for _ in range(n)]
    r = rng.randint(1, 3)
    k = rng.randint(1, 5)
    low_t = 1 if theorem else min_kernel
    ts = [rng.randint(low_t, k) for _ in range(n)]
    low_d = (n - 1) * k + 1 if theorem else 0
    d = rng.randint(low_d, low_d + degree_slack)
    return make(genera, r, r + k, split_degree(rng, d, n), ts)


def random_polarization(rng, n, scale=1000):
    parts = [rng.randint(1, scale) for _ in range(n)]
    total = sum(parts)
    return Polarization(tuple(Fraction(a, total) for a in parts))


@st.composite
def instances(draw, n_min=2, n_max=6, min_kernel=0):
    n = draw(st.integers(n_min, n_max))
    genera = draw(st.lists(st.integers(0, 5), min_size=n, max_size=n))
    r = draw(st.integers(1, 3))
    k = draw(st.integers(1, 5))
    ts = draw(st.lists(st.integers(min_kernel, k), min_size=n, max_size=n))
    degrees = draw(st.lists(st.integers(0, 12), min_size=n, max_size=n))
    return make(genera, r, r + k, degrees, ts)


@st.composite
def polarizations(draw, n):
    parts = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n))
    total = sum(parts)
    return Polarization(tuple(Fraction(a, total) for a in parts))
