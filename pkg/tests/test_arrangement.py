import pytest
from hypothesis import given, settings

from subarr import (Arrangement, ArrangementError, SubspaceFamily, ambient_space, arrangement,
                    contains, delete, equivalence_classes, family, intersect, is_separator,
                    join_of, restrict, restrict_tilde, pivot_separates_joins,
                    subspace_from_equations, subspace_from_span)
from subarr.fixtures import boolean_arrangement, coordinate_subspace
from helpers import arrangements, multi_arrangements


def e(l, k, scale=1):
    return [scale if j == k else 0 for j in range(l)]


def test_subspace_from_equations():
    assert subspace_from_equations([e(5, 0), e(5, 4)], 5).codim == 2
    assert subspace_from_equations([], 3).codim == 0
    assert subspace_from_equations([e(3, 0), e(3, 0, 2)], 3).codim == 1


def test_equations_and_span_agree():
    a = subspace_from_equations([[1, -1, 0]], 3)
    b = subspace_from_span([[1, 1, 0], [0, 0, 1]], 3)
    assert a == b
    assert subspace_from_span([], 3).codim == 3


def test_intersect(ex1):
    h0, h1, h2 = ex1.members
    assert intersect(h1, h2).codim == 5
    assert intersect(h0, h1).codim == 4
    assert intersect(h0, ambient_space(5)) == h0


def test_contains(ex1):
    origin = subspace_from_equations([e(3, k) for k in range(3)], 3)
    line = subspace_from_equations([e(3, 1), e(3, 2)], 3)
    assert contains(ambient_space(3), line)
    assert contains(line, origin)
    assert not contains(origin, line)
    assert not contains(ex1.members[1], ex1.members[2])


def test_mismatched_ambient_refused():
    with pytest.raises(ArrangementError):
        intersect(ambient_space(2), ambient_space(3))


def test_join_of(ex1):
    assert join_of(ex1, []) == ex1.ambient
    assert join_of(ex1, [0, 1, 2]).codim == 5
    assert join_of(ex1, [1]) == ex1.members[1]


def test_arrangement_validation():
    h = coordinate_subspace(3, [0])
    line = coordinate_subspace(3, [0, 1])
    with pytest.raises(ArrangementError):
        arrangement([h, line])
    with pytest.raises(ArrangementError):
        arrangement([h, h.renamed("again")])
    with pytest.raises(ArrangementError):
        arrangement([ambient_space(3)])
    fam = family([h, line])
    assert isinstance(fam, SubspaceFamily) and not isinstance(fam, Arrangement)


def test_delete(ex1, ex2):
    assert delete(ex1, 0).names == ["h1", "h2"]
    assert delete(ex2, 0).names == ["h1", "h2"]
    single = arrangement([coordinate_subspace(2, [0], "x")])
    assert len(delete(single, 0)) == 0
    with pytest.raises(IndexError):
        delete(ex1, 3)


def test_restrict_tilde(ex1, ex2):
    r1 = restrict_tilde(ex1, 0)
    assert len(r1) == 2 and r1.ambient_codim_offset == 2
    r2 = restrict_tilde(ex2, 0)
    assert len(r2) == 1 and r2.ambient_codim_offset == 2
    assert r2.members[0].codim == 3
    lines = arrangement([subspace_from_equations([[1, 0]], 2),
                         subspace_from_equations([[1, 1]], 2)])
    assert [m.codim for m in restrict_tilde(lines, 0).members] == [2]


def test_restrict(ex1, ex2):
    assert len(restrict(ex1, 0)) == 2
    assert len(restrict(ex2, 0)) == 1
    x0 = coordinate_subspace(3, [0], "x0")
    # two distinct lines in the plane x0: both kept
    arr = arrangement([x0, coordinate_subspace(3, [1], "y1"), coordinate_subspace(3, [2], "y2")])
    assert len(restrict(arr, 0)) == 2
    # x0 & y1 is the origin, strictly inside the line x0 & y2
    y1 = coordinate_subspace(3, [1, 2], "y1")
    y2 = subspace_from_equations([[1, 0, 1]], 3, "y2")
    arr = arrangement([x0, y1, y2])
    assert len(restrict_tilde(arr, 0)) == 2
    res = restrict(arr, 0)
    assert res.members == (intersect(x0, y2),)


def test_equivalence_classes(ex1, ex2):
    assert equivalence_classes(ex2, 0).blocks == ((1, 2),)
    assert equivalence_classes(ex1, 0).blocks == ((1,), (2,))
    order = equivalence_classes(boolean_arrangement(4), 2)
    assert order.permutation == (2, 0, 1, 3)
    assert order.arrangement.members[0] == boolean_arrangement(4).members[2]


def test_equivalence_blocks_are_contiguous():
    # y0 and y2 meet x0 in the same line, y1 elsewhere
    x0 = coordinate_subspace(3, [0], "x0")
    y0 = coordinate_subspace(3, [1], "y0")
    y1 = coordinate_subspace(3, [2], "y1")
    y2 = subspace_from_equations([[1, 1, 0]], 3, "y2")
    order = equivalence_classes(arrangement([x0, y0, y1, y2]), 0)
    assert order.blocks == ((1, 3), (2,))
    assert order.permutation == (0, 1, 3, 2)


def test_is_separator(ex1, ex2):
    assert is_separator(ex1, 1) and is_separator(ex1, 2)
    assert not is_separator(ex1, 0)
    assert not is_separator(ex2, 0)
    with pytest.raises(ArrangementError):
        is_separator(arrangement([coordinate_subspace(2, [0])]), 0)


def test_pivot_separates_joins_boolean():
    arr = boolean_arrangement(3)
    assert all(pivot_separates_joins(arr, i) for i in range(3))


@settings(max_examples=60, deadline=None)
@given(arrangements())
def test_join_codim_monotone(arr):
    n = len(arr)
    for mask in range(1 << n):
        for j in range(n):
            assert arr.join_codims[mask | 1 << j] >= arr.join_codims[mask]
            assert contains(arr.joins[mask], arr.joins[mask | 1 << j])


@settings(max_examples=60, deadline=None)
@given(multi_arrangements())
def test_restriction_lives_in_pivot(arr):
    for i in range(len(arr)):
        x0 = arr.members[i]
        tilde, res = restrict_tilde(arr, i), restrict(arr, i)
        assert tilde.ambient == x0
        assert set(res.members) <= set(tilde.members)
        for m in tilde.members:
            assert contains(x0, m) and m != x0
            # every member of the tilde family sits inside a kept one
            assert any(contains(r, m) for r in res.members)
