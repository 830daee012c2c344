from fractions import Fraction

import pytest
from hypothesis import given

from combstab import (DestabilizerKind, RestrictionVerdict, build_catalog, restriction_kernel,
                      restriction_slope_check, slope)

from helpers import instances, make, polarizations


def riemann_roch_twist(t, genus, points):
    # chi(O_C(-D)) on a smooth curve, times the kernel rank
    return t * (-points + 1 - genus)


@pytest.mark.parametrize("genera, ts, expected", [
    ((1, 1), (1, 1), [((1, 0), -1), ((0, 1), -1)]),
    ((1, 1, 2), (1, 0, 2), [((1, 0, 0), -1), ((0, 0, 2), -6)]),
    ((0, 0), (1, 1), [((1, 0), 0), ((0, 1), 0)]),
])
def test_build_catalog(genera, ts, expected):
    curve, pair = make(genera, 1, 1 + max(ts), (1,) * len(genera), ts)
    catalog = build_catalog(curve, pair)
    assert [(e.sheaf.multirank, e.sheaf.chi) for e in catalog] == expected
    n = len(genera)
    for e in catalog:
        i = e.source_component
        points = n - 1 if i == n else 1
        assert e.sheaf.chi == riemann_roch_twist(ts[i - 1], genera[i - 1], points)


def test_catalog_kinds_and_order():
    curve, pair = make((1, 2, 3), 1, 4, (1, 1, 1), (2, 3, 1))
    catalog = build_catalog(curve, pair)
    assert [e.source_component for e in catalog] == [1, 2, 3]
    assert [e.kind for e in catalog] == [DestabilizerKind.KERNEL_TWIST_NON_BASE] * 2 + [
        DestabilizerKind.KERNEL_TWIST_BASE]
    assert [e.tag for e in catalog] == ["C1", "C2", "C3"]


@pytest.mark.parametrize("t, d, k, expected", [
    (1, 3, 2, RestrictionVerdict.UNSTABLE),
    (0, 3, 2, RestrictionVerdict.INCONCLUSIVE),
    (2, 0, 2, RestrictionVerdict.INCONCLUSIVE),
])
def test_restriction_slope_check(t, d, k, expected):
    curve, pair = make((1, 1), 1, 1 + k, (d, 0), (t, 0))
    assert restriction_slope_check(curve, pair, 1) is expected


def test_restriction_kernel():
    curve, pair = make((2, 1), 1, 3, (1, 1), (2, 0))
    e = restriction_kernel(curve, pair, 1)
    assert e.kind is DestabilizerKind.RESTRICTION_KERNEL
    assert e.sheaf.multirank == (2, 0) and e.sheaf.chi == 2 * (1 - 2)
    with pytest.raises(ValueError):
        restriction_kernel(curve, pair, 2)


@given(instances())
def test_catalog_properties(inst):
    curve, pair = inst
    catalog = build_catalog(curve, pair)
    assert (not catalog) == all(t == 0 for t in pair.kernel_ranks)
    for e in catalog:
        assert 0 < e.kernel_rank <= pair.syzygy_rank
        assert sum(e.sheaf.multirank) == e.kernel_rank


@given(instances(n_max=5, min_kernel=1).flatmap(
    lambda inst: polarizations(inst[0].n).map(lambda w: (inst, w))))
def test_catalog_slopes(arg):
    (curve, pair), w = arg
    n = curve.n
    for e in build_catalog(curve, pair):
        i = e.source_component
        g = curve.genus(i)
        wi = w.weights[i - 1]
        if i < n:
            assert slope(e.sheaf, w) == Fraction(-g) / wi
        else:
            assert slope(e.sheaf, w) == Fraction(2 - n - g) / wi
