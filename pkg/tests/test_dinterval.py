from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balmat.dinterval import (DInterval, DIntervalFamilies, coverable,
                              im_premise_check, intersects, rainbow_matching)


def di(*pairs):
    return DInterval([(Fraction(a), Fraction(b)) for a, b in pairs])


def test_dinterval_validation():
    with pytest.raises(ValueError):
        di(("1/2", "1/2"), (0, 1))
    with pytest.raises(ValueError):
        di((0, "3/2"), (0, 1))


def test_intersects_open_endpoints():
    a = di((0, "1/2"), (0, "1/4"))
    b = di(("1/2", 1), ("1/4", "1/2"))
    # closed endpoints touch but open intervals do not overlap
    assert not intersects(a, b)
    c = di(("1/4", "3/4"), ("3/4", 1))
    assert intersects(a, c)


def test_coverable_trivial_cases():
    iv = di((0, "1/2"), ("1/2", 1))
    assert coverable([iv], (0, 0)) is None
    cover = coverable([iv], (1, 0))
    assert cover is not None
    assert any(iv.contains(0, x) for x in cover[0])
    assert coverable([], (0, 0)) == [[], []]


def test_coverable_two_disjoint():
    a = di((0, "1/4"), (0, "1/4"))
    b = di(("1/2", 1), ("1/2", 1))
    cover = coverable([a, b], (1, 1))
    assert cover is not None
    for iv in (a, b):
        assert any(iv.contains(t, x) for t in range(2) for x in cover[t])


def test_cover_points_actually_pierce():
    family = [di((0, "1/3"), ("1/3", "2/3")),
              di(("1/4", "3/4"), (0, "1/5")),
              di(("2/3", 1), ("4/5", 1))]
    cover = coverable(family, (2, 1))
    assert cover is not None
    for iv in family:
        assert any(iv.contains(t, x) for t in range(2) for x in cover[t])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 10), st.integers(1, 4),
                          st.integers(0, 10), st.integers(1, 4)),
                min_size=1, max_size=4))
def test_cover_decision_stable_under_finer_grid(raw):
    """Midpoint candidates decide the same as a finer probe grid."""
    family = []
    for a, la, b, lb in raw:
        lo1 = Fraction(a, 12)
        lo2 = Fraction(b, 12)
        family.append(DInterval([(lo1, min(Fraction(1), lo1 + Fraction(la, 12))),
                                 (lo2, min(Fraction(1), lo2 + Fraction(lb, 12)))]))
    decided = coverable(family, (1, 1))
    # probe: any single point per line from a fine uniform grid
    grid = [Fraction(i, 48) for i in range(1, 48)]
    brute = any(
        all(iv.contains(0, x) or iv.contains(1, y) for iv in family)
        for x in grid for y in grid)
    assert (decided is not None) == brute


def test_rainbow_matching_singletons():
    fams = DIntervalFamilies(2, [
        [di((0, "1/4"), (0, "1/4"))],
        [di(("1/4", "1/2"), ("1/4", "1/2"))],
        [di(("1/2", "3/4"), ("1/2", "3/4"))],
    ])
    found = rainbow_matching(fams, 3)
    assert found is not None and len(found) == 3


def test_rainbow_matching_identical_interval():
    iv = di((0, "1/2"), (0, "1/2"))
    fams = DIntervalFamilies(2, [[iv], [iv]])
    assert rainbow_matching(fams, 2) is None
    assert rainbow_matching(fams, 1) is not None


def test_rainbow_matching_skips_families():
    iv = di((0, 1), (0, 1))
    a = di((0, "1/2"), (0, "1/2"))
    b = di(("1/2", 1), ("1/2", 1))
    fams = DIntervalFamilies(2, [[iv], [a], [b]])
    # the blocking family can be skipped: target 2 uses families 2 and 3
    assert rainbow_matching(fams, 2) is not None
    assert rainbow_matching(fams, 3) is None


def test_im_premise_check():
    assert im_premise_check(DIntervalFamilies(2, []), (1, 1))
    easy = DIntervalFamilies(2, [[di((0, "1/2"), (0, "1/2"))]])
    assert not im_premise_check(easy, (2, 2))  # coverable with 1 point
    hard = DIntervalFamilies(2, [[di((0, "1/2"), (0, "1/2")),
                                  di(("1/2", 1), ("1/2", 1))]])
    assert im_premise_check(hard, (1, 1))  # budgets (0,0) cover nothing
