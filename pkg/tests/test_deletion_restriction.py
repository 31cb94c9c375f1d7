import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from subarr import (Arrangement, PoincarePoly, Triple, ambient_space, betti,
                    betti_sum_relations, build_complex, delete, hyperplane_separator_check,
                    induced_map, is_separator, k_map, les_report, phi, phi_bar, pp_check,
                    rank, subcomplex_inclusion, subspace_from_equations, theta)
from subarr.deletion_restriction import (PreconditionError, connecting_homomorphism,
                                         theta_total_iso, verify_quasi_iso)
from subarr.fixtures import boolean_arrangement, coordinate_subspace
from subarr.linalg import QMatrix
from subarr.model import mask_of
from helpers import multi_arrangements

P = PoincarePoly.parse


def lines_in_plane(k):
    """``k`` distinct lines through the origin of C^2."""
    return Arrangement(tuple(subspace_from_equations([[1, j]], 2, f"L{j}") for j in range(k)),
                       ambient_space(2))


def test_phi_example1(ex1):
    f = phi(ex1, 0)
    t = Triple(ex1, 0)
    images = {m: t._phi_image(m) for m in range(8)}
    assert images[mask_of([0, 1])] == [(-1, mask_of([0]))]
    assert images[mask_of([1, 2])] == []
    assert images[mask_of([0])] == [(1, 0)]
    assert f.shift == -3 and f.commutes_with_d()


def test_phi_kills_equivalent_pairs(ex2):
    t = Triple(ex2, 0)
    assert t._phi_image(mask_of([0, 1, 2])) == []
    assert t._phi_image(mask_of([0, 1])) == [(-1, 1)]


def test_phi_bar_quasi_iso_example1(ex1):
    t = Triple(ex1, 0)
    assert verify_quasi_iso(t.phi_bar)
    shifted = {q - 3: b for q, b in betti(t.quotient).items()}
    assert shifted == betti(t.D_tilde)


def test_phi_bar_injective_without_equivalences(ex1):
    # no two members meet h0 in the same subspace, so phi_bar is an isomorphism of complexes
    f = phi_bar(ex1, 0)
    assert f.is_generator_bijection()


def test_quotient_total_dim_example2(ex2):
    t = Triple(ex2, 0)
    assert sum(betti(t.quotient).values()) == 2
    assert betti(t.quotient) == {3: 1, 4: 1}


def test_k_map(ex1):
    with pytest.raises(PreconditionError):
        k_map(ex1, 0)
    full, deleted = build_complex(ex1), build_complex(delete(ex1, 1))
    k = k_map(ex1, 1, full, deleted)
    j = subcomplex_inclusion(ex1, 1, full, deleted)
    kj = k.compose(j)
    assert deleted.total_dim() == 4
    assert all(kj.graded_block(q) == QMatrix.identity(deleted.dim(q)) for q in deleted.degrees())
    assert k.commutes_with_d()


def test_theta_boolean():
    tm = theta(boolean_arrangement(3), 0)
    assert tm.map.source.total_dim() == 4
    assert tm.map.is_generator_bijection()
    assert set(tm.degree_drops.values()) == {0}
    assert tm.degree_drops[0] == 0
    assert theta_total_iso(tm)


def test_theta_two_lines():
    # two coordinate axes of C^3 spanning a plane: theta lowers degrees by 2
    arr = Arrangement((coordinate_subspace(3, [1, 2], "L0"), coordinate_subspace(3, [0, 2], "L1")),
                      ambient_space(3))
    tm = theta(arr, 0)
    assert tm.degree_drops == {0: 0, 1: 2}
    assert tm.map.commutes_with_d() and theta_total_iso(tm)


def test_theta_refusals(ex1):
    with pytest.raises(PreconditionError):
        theta(lines_in_plane(3), 0)
    with pytest.raises(PreconditionError):
        theta(ex1, 1)   # separator, but the lattice is not geometric


def test_les_example1(ex1):
    r0 = les_report(ex1, 0)
    assert r0.les_exact and r0.quasi_isomorphisms
    assert r0.connecting_ranks == {4: 1}
    assert r0.deficit == P("t^7 + t^8")
    r1 = les_report(ex1, 1)
    assert r1.les_exact and r1.connecting_ranks == {} and r1.pp_holds


def test_les_example2(ex2):
    rep = les_report(ex2, 0)
    assert rep.les_exact and rep.connecting_ranks == {}
    assert rep.pp_holds and not rep.separator


def test_report_to_dict(ex1):
    d = les_report(ex1, 0).to_dict()
    assert d["poincare_A"] == "1 + t^3 + 2t^5 + 2t^6"
    assert d["separator"] is False


def test_connecting_map_independent_of_lift(ex1):
    t = Triple(ex1, 0)
    rng = random.Random(5)
    for q in t.quotient.degrees():
        base = connecting_homomorphism(t, q)
        n = t.D_deleted.dim(q)
        k = base.ncols
        corr = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)]
        assert connecting_homomorphism(t, q, corr) == base


def test_pp_check(ex1, ex2):
    assert not pp_check(ex1, 0)
    assert pp_check(ex1, 1) and pp_check(ex1, 2)
    assert pp_check(ex2, 0)


def test_betti_sums_boolean():
    rep = betti_sum_relations(boolean_arrangement(3), 0)
    assert rep.all_hold
    assert rep.poincare_deleted == rep.poincare_restricted == P("1 + 2t + t^2")


def test_betti_sums_two_members():
    arr = Arrangement((coordinate_subspace(4, [0, 1], "P0"), coordinate_subspace(4, [2, 3], "P1")),
                      ambient_space(4))
    rep = betti_sum_relations(arr, 0)
    assert rep.all_hold
    assert rep.poincare_deleted.total() == rep.poincare_restricted.total() == 2


def test_hyperplane_separator():
    two = boolean_arrangement(2)
    assert hyperplane_separator_check(two, 0)
    assert les_report(two, 0).poincare_A == P("1 + 2t + t^2")
    assert les_report(two, 0).poincare_Ares == P("1 + t")
    three = boolean_arrangement(3)
    assert all(hyperplane_separator_check(three, i) for i in range(3))
    with pytest.raises(PreconditionError):
        hyperplane_separator_check(lines_in_plane(3), 0)


def test_hyperplane_recursion_lines():
    arr = lines_in_plane(4)
    assert not is_separator(arr, 0)
    rep = les_report(arr, 0)
    assert rep.poincare_A == P("1 + 4t + 3t^2")
    assert rep.pp_holds


@settings(max_examples=25, deadline=None)
@given(multi_arrangements(n_max=5, l_max=5))
def test_les_random(arr):
    for i in range(len(arr)):
        rep = les_report(arr, i)
        assert rep.les_exact and rep.quasi_isomorphisms, rep.failures
        if rep.separator:
            assert rep.pp_holds
            t = Triple(arr, i)
            assert all(rank(m) == m.ncols for m in induced_map(t.inclusion).values())
