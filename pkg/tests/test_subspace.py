import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quasicyclic.errors import FieldMismatch, NotASubspace, TooLarge, ZeroScalar
from quasicyclic.gf import field_new
from quasicyclic.numtheory import gaussian
from quasicyclic.subspace import (characteristic_vector, distance, elements, from_elements, frobenius_shift,
                                  grassmannian, intersect_dim, intersect_dim_by_vectors, scalar_shift,
                                  shift_by_exponent, span, subfield_subspace, whole_space, zero_subspace)

from conftest import EXAMPLE_GENERATORS


def closure(field, gens):
    """Brute-force span: close {0} under adding multiples of generators."""
    seen = {0}
    for g in gens:
        seen = {field.add(x, field.mul(c, g)) for x in seen for c in range(field.q)}
    return seen


def test_span_basics(f256):
    assert span(f256, []).dim == 0
    g = f256.gamma(1)
    assert span(f256, [g, f256.mul(g, 1)]).dim == 1
    F = field_new(3, 1, 3)
    assert span(F, [F.gamma(4), F.mul(F.gamma(4), 2)]).dim == 1
    assert elements(zero_subspace(f256)) == [0]
    assert sorted(elements(span(f256, [g]))) == [0, g]


def test_span_field_mismatch(f256, f16):
    with pytest.raises(FieldMismatch):
        span(f256, [f16.element(3)])


@pytest.mark.parametrize("exps", EXAMPLE_GENERATORS)
def test_example_generators_are_subspaces(f256, exps):
    V = from_elements(f256, [f256.gamma(i) for i in exps])
    assert V.dim == 3
    assert V.nonzero_exponents() == sorted(exps)
    assert characteristic_vector(V).popcount() == 7


def test_from_elements_rejects_non_subspace(f256):
    with pytest.raises(NotASubspace):
        from_elements(f256, [f256.gamma(i) for i in (0, 1, 2)])
    assert from_elements(f256, [f256.gamma(i) for i in (0, 1, 2)], strict=False).dim == 3


def test_element_cap(f256):
    with pytest.raises(TooLarge):
        elements(whole_space(f256), cap=100)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 80), max_size=5))
def test_elements_match_closure_gf81(exps):
    F = field_new(3, 1, 4)
    gens = [F.gamma(i) for i in exps]
    V = span(F, gens)
    els = elements(V)
    assert len(els) == 3**V.dim
    assert set(els) == closure(F, gens)
    assert characteristic_vector(V).popcount() == 3**V.dim - 1


@settings(max_examples=60)
@given(st.lists(st.integers(0, 254), max_size=5), st.lists(st.integers(0, 254), max_size=5))
def test_intersection_two_ways(a, b):
    F = field_new(2, 1, 8, [1, 0, 1, 1, 1, 0, 0, 0, 1])
    U, V = span(F, [F.gamma(i) for i in a]), span(F, [F.gamma(i) for i in b])
    d = intersect_dim(U, V)
    assert d == intersect_dim_by_vectors(U, V)
    common = closure(F, [F.gamma(i) for i in a]) & closure(F, [F.gamma(i) for i in b])
    assert len(common) == 2**d
    assert distance(U, V) == distance(V, U) >= 0
    assert (distance(U, V) == 0) == (U == V)


@settings(max_examples=40)
@given(st.lists(st.integers(0, 62), min_size=1, max_size=4), st.integers(0, 62), st.integers(0, 5))
def test_shifts_preserve_dimension(exps, i, j):
    F = field_new(2, 1, 6)
    V = span(F, [F.gamma(e) for e in exps])
    W = shift_by_exponent(V, i)
    assert W == scalar_shift(V, F.gamma(i))
    assert W.dim == V.dim
    assert characteristic_vector(W) == characteristic_vector(V).rotate(i)
    S = frobenius_shift(V, j)
    assert S.dim == V.dim
    assert set(elements(S)) == {F.frobenius(x, j) for x in elements(V)}


def test_triangle_inequality(f16):
    subs = grassmannian(f16, 1) + grassmannian(f16, 2)
    sample = subs[::4]
    for U, V, W in itertools.product(sample, repeat=3):
        assert distance(U, W) <= distance(U, V) + distance(V, W)


def test_zero_shift_rejected(f16):
    with pytest.raises(ZeroScalar):
        scalar_shift(whole_space(f16), 0)


@pytest.mark.parametrize("q,n", [(2, 4), (2, 5), (3, 3), (2, 6)])
def test_grassmannian_counts(q, n):
    F = field_new(q, 1, n)
    for k in range(n + 1):
        G = grassmannian(F, k)
        assert len(G) == len(set(G)) == gaussian(n, k, q)
        assert all(V.dim == k for V in G)


def test_grassmannian_brute_force_f16(f16):
    # every 2-dim subspace as a set of 4 elements closed under +
    found = set()
    for a, b in itertools.combinations(range(1, 16), 2):
        found.add(frozenset({0, a, b, a ^ b}))
    assert len(found) == 35
    assert {frozenset(elements(V)) for V in grassmannian(f16, 2)} == found


def test_subfield_subspace(f256):
    V = subfield_subspace(f256, 4)
    assert V.dim == 4
    assert V.nonzero_exponents() == list(range(0, 255, 17))
