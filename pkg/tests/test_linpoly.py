import pytest
from hypothesis import given, settings, strategies as st

from quasicyclic.errors import CapExceeded, ZeroScalar
from quasicyclic.gf import embedding, field_new
from quasicyclic.linpoly import (LinearizedPoly, divides_xqn_minus_x, frobenius_conjugate, kernel,
                                 frobenius_power_identity, linearized_from_expansion, product_expansion,
                                 scale_conjugate, search_trinomials, splitting_field_degree, subspace_poly,
                                 trinomial)
from quasicyclic.audit import frobenius_identity_audit
from quasicyclic.subspace import elements, frobenius_shift, shift_by_exponent, span, zero_subspace
from quasicyclic.textio import parse_linpoly

EXAMPLE_POLYS = [
    ("lin q-coeffs: 74 z 103 0", 3),
    ("lin q-coeffs: 51 z 238 z 0", 4),
    ("lin q-coeffs: 207 182 8 251 0", 4),
]


def count_roots(L, big):
    """Roots of L in ``big`` by evaluating at every element after embedding the coefficients."""
    lifted = L.lift(embedding(L.field, big), big)
    return sum(1 for x in range(big.order) if lifted(x) == 0)


def test_x_is_zero_subspace_poly(f256):
    assert subspace_poly(zero_subspace(f256)) == LinearizedPoly.x(f256)


@settings(max_examples=40)
@given(st.sampled_from([(2, 4), (2, 6), (3, 3), (3, 4)]), st.lists(st.integers(0, 500), max_size=3))
def test_recursion_matches_product(qn, exps):
    F = field_new(qn[0], 1, qn[1])
    V = span(F, [F.gamma(e) for e in exps])
    L = subspace_poly(V)
    assert L == linearized_from_expansion(F, product_expansion(V))
    assert L.is_monic() and L.qdegree == V.dim
    assert all(L(v) == 0 for v in elements(V))
    assert kernel(L) == V


@pytest.mark.parametrize("text,dim", EXAMPLE_POLYS)
def test_example_polynomials_split(f256, text, dim):
    L = parse_linpoly(f256, text)
    assert L.qdegree == dim
    assert divides_xqn_minus_x(L, 8)
    V = kernel(L)
    assert V.dim == dim
    assert subspace_poly(V) == L
    assert splitting_field_degree(L) == 8


def test_divides_false_case_by_root_count():
    F2 = field_new(2, 1, 1)
    L = trinomial(F2, 3, 2)  # x^8 + x^4 + x
    assert not divides_xqn_minus_x(L, 5)
    assert count_roots(L, field_new(2, 1, 5)) < 8
    assert divides_xqn_minus_x(L, 7)
    assert count_roots(L, field_new(2, 1, 7)) == 8
    assert splitting_field_degree(L) == 7


def test_power_coefficients_split_at_six():
    F8, F64 = field_new(2, 1, 3), field_new(2, 1, 6)
    L = LinearizedPoly(F8, [F8.gamma(1), F8.gamma(2), 1])
    assert splitting_field_degree(L) == 6
    assert count_roots(L, F64) == 4
    assert count_roots(L, F8) < 4


def test_splitting_cap():
    F2 = field_new(2, 1, 1)
    with pytest.raises(CapExceeded):
        splitting_field_degree(trinomial(F2, 3, 2), cap=6)


@settings(max_examples=60)
@given(st.sampled_from([(2, 4), (2, 6), (3, 3), (3, 4)]), st.lists(st.integers(0, 500), min_size=1, max_size=3),
       st.integers(1, 500), st.integers(1, 20), st.integers(0, 5))
def test_conjugation_identities(qn, exps, a, m, s):
    F = field_new(qn[0], 1, qn[1])
    V = span(F, [F.gamma(e) for e in exps])
    L = subspace_poly(V)
    assert scale_conjugate(L, F.gamma(a), m) == subspace_poly(shift_by_exponent(V, a * m))
    assert frobenius_conjugate(L, s) == subspace_poly(frobenius_shift(V, s))


def test_scale_by_zero(f16):
    with pytest.raises(ZeroScalar):
        scale_conjugate(LinearizedPoly.x(f16), 0)


def test_trinomial_rows_contain_known_table():
    rows = {(r.k, r.s, r.N) for r in search_trinomials(2, 7, 127)}
    known = {(3, 2, 7), (3, 2, 21), (4, 3, 15), (4, 3, 30), (5, 3, 31), (6, 5, 63),
             (7, 3, 127), (7, 4, 127), (7, 6, 127)}
    assert known <= rows
    # further irreducible pairs beyond the table above
    assert {(2, 1, 3), (3, 1, 7), (4, 1, 15), (5, 2, 31), (6, 1, 63), (7, 1, 127)} <= rows


def test_frobenius_identity_exhaustive_small():
    audit = frobenius_identity_audit(2, 6)
    assert audit.trinomial_subspaces > 0 and audit.coincidences > 0
    assert audit.failures == []


def test_frobenius_identity_trivial_shift(f16):
    # i = 0 is always a coincidence and the identity holds
    assert frobenius_power_identity(f16, f16.gamma(3), f16.gamma(7), 3, 1, 0)
