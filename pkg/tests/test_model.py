from fractions import Fraction

import pytest
from hypothesis import given, settings

from subarr import (Arrangement, ambient_space, build_complex, differential_of, multiply,
                    product, quotient_complex, subcomplex_inclusion)
from subarr.cochains import CochainVector
from subarr.fixtures import boolean_arrangement, coordinate_subspace
from subarr.model import ComplexTooLarge, degree_of, mask_of, members_of
from helpers import arrangements


def test_degrees_example1(ex1):
    assert degree_of(ex1, [0, 1, 2]) == 7
    assert degree_of(ex1, []) == 0
    assert degree_of(ex1, [1, 2]) == 8


def test_differential_example1(ex1):
    assert differential_of(ex1, [0, 1, 2]).terms == {mask_of([1, 2]): -1}
    assert differential_of(ex1, [0, 1]).terms == {}
    for k in range(3):
        assert differential_of(ex1, [k]).terms == {}


def test_differential_example2(ex2):
    d = differential_of(ex2, [0, 1, 2]).terms
    assert d == {mask_of([1, 2]): -1, mask_of([0, 2]): 1, mask_of([0, 1]): -1}


def test_complex_example2(ex2):
    C = build_complex(ex2)
    assert {q: C.dim(q) for q in C.degrees()} == {0: 1, 3: 4, 4: 3}
    assert C.degree(mask_of([0, 1, 2])) == 3


def test_empty_complex():
    C = build_complex(Arrangement((), ambient_space(2)))
    assert C.degrees() == [0] and C.dim(0) == 1
    assert C.d_squared_is_zero()


def test_product_examples(ex1):
    arr = boolean_arrangement(2)
    assert product(arr, [0], [1]) == (1, mask_of([0, 1]))
    assert product(arr, [1], [0]) == (-1, mask_of([0, 1]))
    assert product(arr, [0], [0]) is None
    assert product(ex1, [1], [2]) is None


def test_product_unit(ex1):
    for m in range(8):
        assert product(ex1, [], m) == (1, m)
        assert product(ex1, m, []) == (1, m)


def test_too_large():
    arr = boolean_arrangement(5)
    with pytest.raises(ComplexTooLarge):
        build_complex(arr, max_size=4)


def test_inclusion_example1(ex1):
    j = subcomplex_inclusion(ex1, 0)
    assert j.source.total_dim() == 4
    assert j.is_generator_bijection() is False
    for q in j.source.degrees():
        m = j.graded_block(q)
        assert sum(1 for row in m.rows for c in row if c) == j.source.dim(q)
    assert j.commutes_with_d()


def test_inclusion_of_singleton():
    arr = Arrangement((coordinate_subspace(2, [0], "x"),), ambient_space(2))
    j = subcomplex_inclusion(arr, 0)
    assert j.source.total_dim() == 1
    assert j.graded_block(0).rows == [[1]]


def test_quotient_example1(ex1):
    Q, p = quotient_complex(ex1, 0)
    gens = {(Q.degree(m), tuple(members_of(m))) for q in Q.degrees() for m in Q.generators(q)}
    assert gens == {(3, (0,)), (6, (0, 1)), (6, (0, 2)), (7, (0, 1, 2))}
    assert Q.d(7).is_zero()
    assert p.commutes_with_d()


def test_quotient_singleton():
    arr = Arrangement((coordinate_subspace(2, [0, 1], "o"),), ambient_space(2))
    Q, _ = quotient_complex(arr, 0)
    assert Q.total_dim() == 1 and Q.degrees() == [3]


def _dv(fam, v):
    out = {}
    for g, c in v.terms.items():
        for h, e in differential_of(fam, g).terms.items():
            out[h] = out.get(h, 0) + c * e
    return CochainVector(v.degree + 1, {k: x for k, x in out.items() if x})


def _gen(fam, m):
    return CochainVector(degree_of(fam, m), {m: Fraction(1)})


@settings(max_examples=60, deadline=None)
@given(arrangements())
def test_d_squared_and_degree(arr):
    C = build_complex(arr)
    assert C.d_squared_is_zero()
    for m in range(1 << len(arr)):
        dm = differential_of(arr, m)
        assert all(degree_of(arr, g) == degree_of(arr, m) + 1 for g in dm.terms)
        assert _dv(arr, dm).is_zero()


@settings(max_examples=40, deadline=None)
@given(arrangements(n_max=4, l_max=5))
def test_graded_commutative(arr):
    n = len(arr)
    for s in range(1 << n):
        for t in range(1 << n):
            a, b = product(arr, s, t), product(arr, t, s)
            assert (a is None) == (b is None)
            if a is not None:
                sign = (-1) ** (degree_of(arr, s) * degree_of(arr, t))
                assert a == (sign * b[0], b[1])


@settings(max_examples=40, deadline=None)
@given(arrangements(n_max=4, l_max=5))
def test_leibniz(arr):
    n = len(arr)
    for s in range(1 << n):
        for t in range(1 << n):
            u, v = _gen(arr, s), _gen(arr, t)
            lhs = _dv(arr, multiply(arr, u, v))
            first = multiply(arr, _dv(arr, u), v)
            second = multiply(arr, u, _dv(arr, v))
            sign = (-1) ** u.degree
            terms = dict(first.terms)
            for k, c in second.terms.items():
                terms[k] = terms.get(k, 0) + sign * c
            assert lhs.terms == {k: c for k, c in terms.items() if c}


@settings(max_examples=40, deadline=None)
@given(arrangements(n_max=4, l_max=5))
def test_product_associative(arr):
    n = len(arr)
    for s in range(1 << n):
        for t in range(1 << n):
            for r in range(1 << n):
                uv = multiply(arr, multiply(arr, _gen(arr, s), _gen(arr, t)), _gen(arr, r))
                vw = multiply(arr, _gen(arr, s), multiply(arr, _gen(arr, t), _gen(arr, r)))
                assert uv.terms == vw.terms
