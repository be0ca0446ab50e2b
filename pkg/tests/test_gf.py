import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quasicyclic import fqx
from quasicyclic.errors import (DegreeMismatch, FieldMismatch, NotADivisor, NotIrreducible,
                                NotPrimitive, TooLarge, ZeroArgument, ZeroInverse)
from quasicyclic.gf import (_BINARY_PRIMITIVE, _is_primitive_coeffs, base_field, embedding,
                            field_new, GF)
from quasicyclic.linalg import rank


def root_order(fq, f):
    """Multiplicative order of x in F_q[x]/(f) by repeated multiplication."""
    h, i = [0, 1], 1
    while h != [1]:
        h = fqx.pmod(fq, fqx.pmul(fq, h, [0, 1]), f)
        i += 1
    return i


def test_example_field_accepted(f256):
    assert f256.nonzero == 255
    assert len(set(f256.exp_table)) == 255
    assert f256.gamma(0) == 1 and f256.gamma(1) == 2


def test_reducible_modulus_rejected():
    with pytest.raises(NotIrreducible):
        field_new(2, 1, 2, [1, 0, 1])


def test_non_primitive_modulus_rejected():
    f = [1, 1, 1, 1, 1]
    assert root_order(base_field(2), f) == 5
    with pytest.raises(NotPrimitive):
        field_new(2, 1, 4, f)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        GF(2, 1, 3, [1, 1, 0, 0, 1])


def test_table_cap():
    with pytest.raises(TooLarge):
        GF(2, 1, 10, [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1], cap_bits=8)


@pytest.mark.parametrize("n", sorted(_BINARY_PRIMITIVE))
def test_binary_table_is_primitive(n):
    f = [0] * (n + 1)
    for i in _BINARY_PRIMITIVE[n]:
        f[i] = 1
    fq = base_field(2)
    assert fqx.is_irreducible_coeffs(fq, f)
    assert _is_primitive_coeffs(fq, f)


def test_log_antilog_inverse(f256, f81):
    for F in (f256, f81):
        assert all(F.exp_table[F.log_table[x]] == x for x in range(1, F.order))
        assert F.exp_table[0] == 1


def test_dlog_examples(f256):
    assert f256.dlog(1) == 0
    assert f256.dlog(f256.gamma(1)) == 1
    assert f256.dlog(f256.mul(f256.gamma(7), f256.gamma(250))) == (7 + 250) % 255 == 2
    with pytest.raises(ZeroArgument):
        f256.dlog(0)


def test_basic_ops(f256):
    assert f256.inv(1) == 1
    assert all(f256.add(x, x) == 0 for x in range(256))
    with pytest.raises(ZeroInverse):
        f256.inv(0)


def test_field_element_wrapper(f256, f16):
    g = f256.element(f256.gamma())
    assert (g**7 * g**250).exp == 2
    assert (g + g).code == 0 and (g + g).exp is None
    assert g.inverse() * g == f256.element(1)
    assert g.coords == (0, 1, 0, 0, 0, 0, 0, 0)
    with pytest.raises(FieldMismatch):
        g + f16.element(1)


def test_exhaustive_axioms_f16(f16):
    F = f16
    els = range(F.order)
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


def test_exhaustive_distributivity_f256(f256):
    F = f256
    for a in range(0, 256, 7):
        for b in range(256):
            for c in range(0, 256, 5):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@settings(max_examples=200)
@given(st.integers(1, 80), st.integers(1, 80), st.integers(0, 80))
def test_axioms_gf81(a, b, c):
    F = field_new(3, 1, 4)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    assert F.mul(F.div(a, b), b) == a
    assert (F.dlog(F.mul(a, b)) - F.dlog(a) - F.dlog(b)) % F.nonzero == 0


def test_frobenius_properties(f256, f81):
    for F in (f256, f81):
        for x in range(F.order):
            assert F.frobenius(x, 0) == x
            assert F.frobenius(x, 1) == F.pow(x, F.q)
        for c in range(F.q):
            assert all(F.frobenius(c, j) == c for j in range(F.n))
        for i, j in itertools.product(range(F.n), repeat=2):
            x = F.gamma(37)
            assert F.frobenius(F.frobenius(x, i), j) == F.frobenius(x, (i + j) % F.n)


@pytest.mark.parametrize("j", range(8))
def test_frobenius_is_linear_bijection(f256, j):
    F = f256
    images = [F.frobenius(2**i, j) for i in range(8)]
    assert rank(F.fq, 8, images) == 8
    for x, y in itertools.product(range(0, 256, 3), range(0, 256, 11)):
        assert F.frobenius(F.add(x, y), j) == F.add(F.frobenius(x, j), F.frobenius(y, j))
        assert F.frobenius(F.mul(x, y), j) == F.mul(F.frobenius(x, j), F.frobenius(y, j))


def test_subfields(f16, f256):
    assert f16.subfield(4) == frozenset(range(16))
    sub2 = f16.subfield(2)
    powers = {f16.pow(f16.gamma(5), i) for i in range(3)}
    assert sub2 == frozenset({0} | powers)
    assert {f16.dlog(x) for x in sub2 if x} == {0, 5, 10}
    assert f256.subfield(1) == frozenset({0, 1})
    for t in (1, 2, 4, 8):
        S = f256.subfield(t)
        assert len(S) == 2**t
        assert all(f256.add(a, b) in S and f256.mul(a, b) in S for a in S for b in S)
        assert all(f256.inv(a) in S for a in S if a)
    with pytest.raises(NotADivisor):
        f256.subfield(3)


def test_mth_power_subgroup(f16):
    cubes = {f16.pow(x, 3) for x in range(1, 16)}
    assert len(cubes) == 5
    assert f16.mth_power_subgroup(3) == (3, 5)
    assert cubes == {f16.gamma(3 * i) for i in range(5)}
    assert f16.mth_power_subgroup(1) == (1, 15)
    assert f16.mth_power_subgroup(15) == (15, 1)
    with pytest.raises(NotADivisor):
        f16.mth_power_subgroup(4)


def test_extension_of_nonprime_base():
    F = field_new(2, 2, 3)  # F_{4^3}
    assert F.q == 4 and F.nonzero == 63
    assert F.subfield(1) == frozenset(range(4))
    for a in range(1, 64):
        for b in range(64):
            assert F.sub(F.add(a, b), b) == a


def test_embedding_is_homomorphism():
    small, big = field_new(2, 1, 3), field_new(2, 1, 6)
    emb = embedding(small, big)
    assert len(set(emb)) == 8
    assert set(emb) == big.subfield(3)
    for a in range(8):
        for b in range(8):
            assert emb[small.add(a, b)] == big.add(emb[a], emb[b])
            assert emb[small.mul(a, b)] == big.mul(emb[a], emb[b])
