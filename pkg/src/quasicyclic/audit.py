"""Exhaustive and randomized sweeps of the subspace-polynomial and orbit statements."""

import random
from dataclasses import dataclass, field as dc_field

from .codes import coefficient_condition, intersection_sweep
from .gf import field_new
from .linpoly import frobenius_conjugate, frobenius_power_identity, scale_conjugate, subspace_poly
from .numtheory import divisors, is_prime
from .orbits import claimed_class_count, closed_form_length, mod_t_classes, quasi_orbit
from .subspace import (frobenius_shift, grassmannian, scalar_shift, shift_by_exponent, span,
                       subfield_subspace)


@dataclass
class SubfieldOrbitRow:
    q: int
    n: int
    t: int
    m: int
    length: int
    closed_form: int
    consistent: bool  # length fits (1/m)(q^n-1)/(q^t'-1) for some t' | n
    t_fit: object

    def as_tuple(self):
        return (self.q, self.n, self.t, self.m, self.length, self.closed_form, self.consistent, self.t_fit)


SUBFIELD_ORBIT_HEADER = ("q", "n", "t", "m", "length", "closed_form", "lemma9_consistent", "t_fit")


def subfield_orbit_audit(q, n_max, n_min=1):
    """Quasi-orbit lengths of every subfield copy F_{q^t} under every <gamma^m>."""
    rows = []
    for n in range(n_min, n_max + 1):
        field = field_new(q, 1, n)
        for t in divisors(n):
            V = subfield_subspace(field, t)
            for m in divisors(field.nonzero):
                rep = quasi_orbit(V, m)
                rows.append(SubfieldOrbitRow(q, n, t, m, rep.length, closed_form_length(field, m, t),
                                      rep.lemma9_consistent, rep.fit_t))
    return rows


def _random_subspace(field, rng, k):
    while True:
        V = span(field, [rng.randrange(1, field.order) for _ in range(k)])
        if V.dim == k:
            return V


@dataclass
class ConjugationSweep:
    samples: int = 0
    scale_failures: list = dc_field(default_factory=list)
    frobenius_failures: list = dc_field(default_factory=list)

    @property
    def failures(self):
        return len(self.scale_failures) + len(self.frobenius_failures)


def conjugation_sweep(configs, samples, seed=0):
    """Compare the coefficient formulas for alpha^m V and sigma_s(V) with fresh subspace polynomials.

    ``configs`` is a list of (q, n); samples are spread round-robin over them.
    """
    rng = random.Random(seed)
    out = ConjugationSweep()
    for i in range(samples):
        q, n = configs[i % len(configs)]
        field = field_new(q, 1, n)
        V = _random_subspace(field, rng, rng.randrange(1, n))
        alpha = rng.randrange(1, field.order)
        m = rng.choice(divisors(field.nonzero))
        s = rng.randrange(n)
        L = subspace_poly(V)
        if scale_conjugate(L, alpha, m) != subspace_poly(scalar_shift(V, field.pow(alpha, m))):
            out.scale_failures.append((q, n, V, alpha, m))
        if frobenius_conjugate(L, s) != subspace_poly(frobenius_shift(V, s)):
            out.frobenius_failures.append((q, n, V, s))
        out.samples += 1
    return out


@dataclass
class FrobeniusIdentityAudit:
    trinomial_subspaces: int = 0
    coincidences: int = 0
    failures: list = dc_field(default_factory=list)


def frobenius_identity_audit(q, n_max, n_min=3):
    """For every V with trinomial L_V and every i, beta with sigma_i(V) = beta V,
    test the power identity on a_0, a_s."""
    out = FrobeniusIdentityAudit()
    for n in range(n_min, n_max + 1):
        field = field_new(q, 1, n)
        for k in range(2, n):
            for V in grassmannian(field, k):
                L = subspace_poly(V)
                inner = L.interior_indices()
                if len(inner) != 1:
                    continue
                s = inner[0]
                out.trinomial_subspaces += 1
                orbit = {}
                W = V
                for e in range(field.nonzero):
                    if W in orbit:
                        break
                    orbit[W] = e
                    W = shift_by_exponent(W, 1)
                for i in range(n):
                    if frobenius_shift(V, i) in orbit:
                        out.coincidences += 1
                        if not frobenius_power_identity(field, L.coeffs[0], L.coeffs[s], k, s, i):
                            out.failures.append((n, V, i))
    return out


def coefficient_condition_audit(qs=(2, 3), n_max=7, pairs=None):
    """coefficient_condition for a_0 = g^m, a_s = g^(m q^s) over prime n and all m | q^n - 1.

    Returns rows (q, n, m, k, s, holds).
    """
    rows = []
    for q in qs:
        for n in range(2, n_max + 1):
            if not is_prime(n):
                continue
            field = field_new(q, 1, n)
            ks = pairs or [(k, s) for k in range(2, n + 1) for s in range(1, k)]
            for m in divisors(field.nonzero):
                for k, s in ks:
                    a0 = field.gamma(m)
                    a_s = field.gamma(m * q**s)
                    rows.append((q, n, m, k, s, coefficient_condition(field, a0, a_s, k, s)))
    return rows


def class_count_audit(q, n, ms=None):
    """Rows (m, t, classes, class_sizes, claimed_count) for the ~_t partition."""
    field = field_new(q, 1, n)
    rows = []
    for m in ms or divisors(field.nonzero):
        for t in divisors(n):
            classes = mod_t_classes(field, m, t)
            sizes = sorted({len(c) for c in classes})
            rows.append((m, t, len(classes), sizes, claimed_class_count(field, m, t)))
    return rows


def intersection_audit(q, n, dims):
    return intersection_sweep(field_new(q, 1, n), dims)
