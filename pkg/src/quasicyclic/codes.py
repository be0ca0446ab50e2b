"""Subspace codes: assembly, exact parameters, bounds and the two constructions."""

import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import (BadArguments, ConditionFailed, DivisibilityViolated, EqualSubspaces,
                     GcdViolated, NotADivisor, NotPrime, TooFewWords, TrinomialReducible)
from .gf import DEFAULT_TABLE_BITS, embedding, field_new
from .linpoly import (DEFAULT_N_CAP, is_irreducible, kernel, scale_conjugate, splitting_field_degree,
                      subspace_poly, trinomial, trinomial_companion, trinomial_ratio_exponent)
from .numtheory import divisors, gaussian, int_log, is_prime
from .orbits import ORBIT_CAP, quasi_orbit
from .subspace import (distance, elements, frobenius_shift, intersect_dim, scalar_shift,
                       shift_by_exponent)

INCIDENCE_LIMIT = 2**12


class Code:
    """A finite set of subspaces of one field, kept in insertion order."""

    def __init__(self, field, words, m=1, provenance=None, claimed=None):
        self.field = field
        self.m = m
        seen = {}
        for w in words:
            seen.setdefault(w, None)
        self.words = list(seen)
        self._set = frozenset(self.words)
        self.provenance = dict(provenance or {})
        self.claimed = tuple(claimed) if claimed else None

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, V):
        return V in self._set

    @property
    def size(self):
        return len(self.words)

    @property
    def dims(self):
        return sorted({w.dim for w in self.words})

    @property
    def k(self):
        dims = self.dims
        return dims[0] if len(dims) == 1 else None

    def union(self, other):
        return Code(self.field, self.words + other.words, self.m, self.provenance, self.claimed)

    @classmethod
    def from_generators(cls, field, generators, m=1, cap=ORBIT_CAP, **kw):
        words = []
        for V in generators:
            words.extend(quasi_orbit(V, m, cap).representatives)
        return cls(field, words, m, **kw)


# -- distances ----------------------------------------------------------

def _incidence_counts(words):
    """Common nonzero element counts for every pair sharing at least one element."""
    log = words[0].field.log_table
    by_elem = {}
    for idx, w in enumerate(words):
        for x in elements(w):
            if x:
                by_elem.setdefault(log[x], []).append(idx)
    common = Counter()
    for members in by_elem.values():
        for a in range(len(members)):
            ia = members[a]
            for b in range(a + 1, len(members)):
                common[ia, members[b]] += 1
    return common


def _use_incidence(C, method):
    if method == "auto":
        return len(C.dims) == 1 and C.field.q ** C.dims[0] <= INCIDENCE_LIMIT
    return method == "incidence"


def pair_distances(C, method="auto"):
    """Counter of subspace distances over all unordered pairs of distinct words."""
    words = C.words
    q = C.field.q
    out = Counter()
    if _use_incidence(C, method):
        if len(C.dims) != 1:
            raise BadArguments("incidence method needs a constant-dimension code")
        k = C.dims[0]
        common = _incidence_counts(words)
        for c in common.values():
            out[2 * k - 2 * int_log(c + 1, q)] += 1
        rest = len(words) * (len(words) - 1) // 2 - len(common)
        if rest:
            out[2 * k] += rest
        return out
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            out[distance(words[a], words[b])] += 1
    return out


def min_distance(C, method="auto"):
    """Exact minimum subspace distance over all pairs of distinct words.

    ``method`` is "pairwise" (rank of stacked bases for every pair),
    "incidence" (pairs are grouped by shared nonzero elements; pairs with
    nothing in common intersect trivially) or "auto".
    """
    if len(C) < 2:
        raise TooFewWords("minimum distance needs at least two words")
    if _use_incidence(C, method):
        return min(pair_distances(C, "incidence"))
    words = C.words
    best = None
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            d = distance(words[a], words[b])
            if best is None or d < best:
                best = d
    return best


def verify_quasi_cyclic(C, m=None):
    """True iff gamma^m V is a word for every word V."""
    m = C.m if m is None else m
    if m < 1 or C.field.nonzero % m:
        raise NotADivisor(f"m={m} does not divide {C.field.nonzero}")
    return all(shift_by_exponent(V, m) in C for V in C.words)


def ev_bound(n, k, delta, q):
    """floor([n k]_q / [n-k+delta delta]_q), upper bound on A_q(n, 2 delta + 2, k)."""
    if not (0 <= delta <= k <= n):
        raise BadArguments(f"need 0 <= delta <= k <= n, got n={n} k={k} delta={delta}")
    return gaussian(n, k, q) // gaussian(n - k + delta, delta, q)


# -- intersection bounds from the coefficient support ------------------------

def _ordered_pair(U, V):
    """Return (small, large) ordered by dimension."""
    return (V, U) if V.dim <= U.dim else (U, V)


def intersection_bound(V, U):
    """(dimension bound, distance bound or None) for dim V <= dim U."""
    k, l = V.dim, U.dim
    t = subspace_poly(V).top_interior()
    s = subspace_poly(U).top_interior()
    dim_bound = max(s, t + l - k)
    dist_bound = 2 * min(k - t, k - s) if k == l else None
    return dim_bound, dist_bound


def lemma42_bound_check(U, V, alpha=1, m=1):
    """Check dim(a^m V & a^m U) <= max(s, t+l-k) and, for equal dims, the distance bound."""
    if U == V:
        raise EqualSubspaces("the bound concerns two distinct subspaces")
    small, large = _ordered_pair(U, V)
    dim_bound, dist_bound = intersection_bound(small, large)
    a = U.field.pow(alpha, m)
    sV, sU = scalar_shift(small, a), scalar_shift(large, a)
    inter = intersect_dim(sV, sU)
    ok = inter <= dim_bound
    if dist_bound is not None:
        ok = ok and distance(sV, sU) >= dist_bound
    return ok


@dataclass
class IntersectionSweep:
    subspaces: int
    pairs: int
    shifts: int
    checks: int
    violations: list = dc_field(default_factory=list)
    support_invariant: bool = True

    def to_dict(self):
        return {
            "subspaces": self.subspaces,
            "pairs": self.pairs,
            "shifts": self.shifts,
            "checks": self.checks,
            "violations": len(self.violations),
            "support_invariant": self.support_invariant,
        }


def intersection_sweep(field, dims):
    """Exhaustive check over all pairs of distinct subspaces of the given dimensions
    and every shift a^m (all m | q^n-1 and all a, i.e. every distinct value a^m).

    Intersection dimensions come from characteristic-vector inner products and
    shifted pairs are looked up through the permutation gamma^i induces on the
    Grassmannian, so each (pair, shift) is evaluated exactly.
    """
    from .subspace import characteristic_vector, grassmannian

    subs = [V for k in dims for V in grassmannian(field, k)]
    index = {V: i for i, V in enumerate(subs)}
    M = field.nonzero
    X = np.array([characteristic_vector(V).to_list() for V in subs], dtype=np.int32)
    common = X @ X.T
    inter = np.rint(np.log(common + 1) / np.log(field.q)).astype(np.int16)
    d = np.array([V.dim for V in subs], dtype=np.int16)
    polys = [subspace_poly(V) for V in subs]
    t = np.array([L.top_interior() for L in polys], dtype=np.int16)

    # scaling keeps the coefficient support, so t is shift-invariant; verify it.
    support_ok = all(
        scale_conjugate(L, field.gamma(i)).support() == L.support()
        for L in polys for i in range(1, M)
    )

    k = np.minimum(d[:, None], d[None, :])
    l = np.maximum(d[:, None], d[None, :])
    small_is_row = d[:, None] <= d[None, :]
    t_small = np.where(small_is_row, t[:, None], t[None, :])
    t_large = np.where(small_is_row, t[None, :], t[:, None])
    dim_bound = np.maximum(t_large, t_small + l - k)
    equal = d[:, None] == d[None, :]
    dist_bound = 2 * np.minimum(k - t_small, k - t_large)
    off_diag = ~np.eye(len(subs), dtype=bool)

    perm1 = np.array([index[shift_by_exponent(V, 1)] for V in subs])
    betas = sorted({(m * i) % M for m in divisors(M) for i in range(M)})
    perm_by_exp = {0: np.arange(len(subs))}
    for e in range(1, M):
        perm_by_exp[e] = perm1[perm_by_exp[e - 1]]

    violations = []
    for e in betas:
        p = perm_by_exp[e]
        shifted = inter[np.ix_(p, p)]
        bad = off_diag & ((shifted > dim_bound) | (equal & (2 * k - 2 * shifted < dist_bound)))
        for a, b in zip(*np.nonzero(bad)):
            violations.append((e, int(a), int(b)))
    npairs = len(subs) * (len(subs) - 1) // 2
    return IntersectionSweep(len(subs), npairs, len(betas), npairs * len(betas), violations, support_ok)


# -- constructions -------------------------------------------------------

def coefficient_condition(field, a_0, a_s, k, s):
    """a_s^((q^k-1)/(q^s-1)) and a_0^((q^k-q^s)/(q^s-1)) are NOT ~_1 equivalent.

    Their ratio must avoid F_q^*. When the exponents are not integral the
    ratio is replaced by its (q^s-1)-th power.
    """
    if a_0 == 0 or a_s == 0:
        from .errors import ZeroArgument
        raise ZeroArgument("coefficients must be nonzero")
    z, _ = trinomial_ratio_exponent(field, a_0, a_s, k, s)
    return z % (field.nonzero // (field.q - 1)) != 0


def _check_m(M, m):
    if m < 1 or M % m:
        raise NotADivisor(f"m={m} does not divide {M}")


def construct_single_orbit(q, n, k, s, m=1, p=None, e=1, cap_bits=DEFAULT_TABLE_BITS, cap_orbit=ORBIT_CAP):
    """Single quasi-orbit code generated by the kernel of x^[k] + x^[s] + x in F_{q^n}."""
    p = p or q
    if not 1 <= s < k:
        raise BadArguments("need 1 <= s < k")
    if n % (q**k - 1):
        raise DivisibilityViolated(f"q^k - 1 = {q**k - 1} does not divide n = {n}")
    _check_m(q**n - 1, m)
    field = field_new(p, e, n, cap_bits=cap_bits)
    if not is_irreducible(trinomial_companion(field.fq, k, s)):
        raise TrinomialReducible(f"x^{q**k - 1} + x^{q**s - 1} + 1 is reducible over F_{q}")
    L = trinomial(field, k, s)
    V = kernel(L)
    if V.dim != k:  # pragma: no cover - excluded by the irreducibility + divisibility hypotheses
        raise AssertionError(f"kernel has dimension {V.dim}, expected {k}")
    orbit = quasi_orbit(V, m, cap_orbit)
    code = Code(field, orbit.representatives, m, provenance={
        "construction": "c4", "q": q, "n": n, "k": k, "s": s, "m": m, "generators": [V],
    })
    g = math.gcd(n, s)
    size_bound = math.ceil(Fraction(q**n - 1, m * (q**g - 1)))
    d = min_distance(code) if len(code) > 1 else None
    code.provenance["checks"] = {
        "dimension": V.dim == k,
        "size": len(code),
        "size_lower_bound": size_bound,
        "size_ok": len(code) >= size_bound,
        "min_distance": d,
        "distance_lower_bound": 2 * (k - s),
        "distance_ok": d is None or d >= 2 * (k - s),
        "full_length": orbit.full_length,
        "full_length_guaranteed": g == 1 and m == 1,
        "quasi_cyclic": verify_quasi_cyclic(code, m),
    }
    return code


@dataclass
class MultiOrbitReport:
    n: int
    N: int
    k: int
    s: int
    m: int
    a_0_exp: int
    a_s_exp: int
    orbit_lengths: list
    disjoint: bool
    size: int
    claimed_size: Fraction
    claimed_orbit_length: Fraction
    min_distance: int
    claimed_distance: int
    quasi_cyclic: bool

    @property
    def size_matches_claim(self):
        return self.claimed_size == self.size

    def to_dict(self):
        return {
            "n": self.n, "N": self.N, "k": self.k, "s": self.s, "m": self.m,
            "a_0": f"g^{self.a_0_exp}", "a_s": f"g^{self.a_s_exp}",
            "orbit_lengths": self.orbit_lengths, "disjoint": self.disjoint,
            "size": self.size, "claimed_size": str(self.claimed_size),
            "claimed_orbit_length": str(self.claimed_orbit_length),
            "size_matches_claim": self.size_matches_claim,
            "min_distance": self.min_distance, "claimed_distance": self.claimed_distance,
            "quasi_cyclic": self.quasi_cyclic,
        }


def construct_multi_orbit(q, n, k, s, m=1, N_cap=DEFAULT_N_CAP, coeff_exponent=None, a_0=None, a_s=None,
                          p=None, e=1, cap_bits=DEFAULT_TABLE_BITS, cap_orbit=ORBIT_CAP):
    """Union of the n Frobenius-conjugate m-quasi orbits of V = ker(x^[k] + a_s x^[s] + a_0 x).

    By default a_0 = g^r and a_s = g^(r q^s) with r = m, g primitive in F_{q^n};
    ``coeff_exponent`` overrides r, and explicit ``a_0``/``a_s`` (codes in
    F_{q^n}) override both. V lives in the splitting field F_{q^N}.
    """
    p = p or q
    if not is_prime(n):
        raise NotPrime(f"n={n} is not prime")
    if not 1 <= s < k:
        raise BadArguments("need 1 <= s < k")
    _check_m(q**n - 1, m)
    small = field_new(p, e, n, cap_bits=cap_bits)
    r = m if coeff_exponent is None else coeff_exponent
    a0 = small.gamma(r) if a_0 is None else a_0
    As = small.gamma(r * q**s) if a_s is None else a_s
    if not coefficient_condition(small, a0, As, k, s):
        raise ConditionFailed(f"a_0=g^{small.dlog(a0)}, a_s=g^{small.dlog(As)} are ~_1 equivalent")
    L = trinomial(small, k, s, As, a0)
    N = splitting_field_degree(L, N_cap)
    big = field_new(p, e, N, cap_bits=cap_bits)
    V = kernel(L.lift(embedding(small, big), big))
    if V.dim != k:  # pragma: no cover
        raise AssertionError(f"kernel has dimension {V.dim} in F_{q}^{N}")
    gens = [frobenius_shift(V, i) for i in range(n)]
    orbits = [quasi_orbit(G, m, cap_orbit) for G in gens]
    sets = [set(o.representatives) for o in orbits]
    disjoint = all(not (sets[i] & sets[j]) for i in range(n) for j in range(i + 1, n))
    code = Code(big, [w for o in orbits for w in o.representatives], m, provenance={
        "construction": "t4", "q": q, "n": n, "N": N, "k": k, "s": s, "m": m, "generators": gens,
    })
    report = MultiOrbitReport(
        n=n, N=N, k=k, s=s, m=m,
        a_0_exp=small.dlog(a0), a_s_exp=small.dlog(As),
        orbit_lengths=[o.length for o in orbits],
        disjoint=disjoint,
        size=len(code),
        claimed_size=Fraction(n * (q**N - 1), m * (q - 1)),
        claimed_orbit_length=Fraction(q**N - 1, m * (q - 1)),
        min_distance=min_distance(code),
        claimed_distance=2 * (k - s),
        quasi_cyclic=verify_quasi_cyclic(code, m),
    )
    code.provenance["report"] = report
    return code


# -- decomposition and audits ----------------------------------------------

def orbit_partition(C, m):
    """Split the words of C into <gamma^m>-orbits (requires closure)."""
    seen = set()
    parts = []
    for V in C.words:
        if V in seen:
            continue
        reps = quasi_orbit(V, m).representatives
        seen.update(reps)
        parts.append(reps)
    return parts


@dataclass
class Refinement:
    m: int
    cyclic_lengths: list
    quasi_orbits: list = dc_field(repr=False)
    disjoint: bool = True
    covers: bool = True
    parameters: tuple = ()

    @property
    def count(self):
        return len(self.quasi_orbits)

    @property
    def lengths(self):
        return [len(o) for o in self.quasi_orbits]


def refine_to_quasi(C, m):
    """Re-read a cyclic code as a union of m-quasi orbits, m | gcd of its orbit lengths."""
    if not verify_quasi_cyclic(C, 1):
        raise BadArguments("code is not cyclic")
    cyclic = orbit_partition(C, 1)
    lams = [len(o) for o in cyclic]
    g = math.gcd(*lams)
    if m < 1 or g % m:
        raise GcdViolated(f"m={m} does not divide gcd of orbit lengths {g}")
    quasi = orbit_partition(C, m)
    union = [w for o in quasi for w in o]
    disjoint = len(union) == len(set(union))
    covers = set(union) == set(C.words)
    d = min_distance(C) if len(C) > 1 else None
    return Refinement(m, lams, quasi, disjoint, covers, (C.field.n, C.k, len(C), d))


@dataclass
class AuditReport:
    n: int
    k: object
    size: int
    d: object
    q: int
    m: int
    quasi_cyclic: bool
    claimed: object = None
    mismatches: list = dc_field(default_factory=list)
    bound: object = None
    sandwich: str = ""
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return not self.mismatches and self.quasi_cyclic

    def to_dict(self):
        return {
            "n": self.n, "k": self.k, "size": self.size, "d": self.d, "q": self.q, "m": self.m,
            "quasi_cyclic": self.quasi_cyclic,
            "claimed": list(self.claimed) if self.claimed else None,
            "mismatches": self.mismatches, "bound": self.bound, "sandwich": self.sandwich,
            "notes": self.notes, "passed": self.passed,
        }


def audit_code(C):
    """Recompute [n, k, |C|, d] and compare with the claimed tuple (n, k, size, d)."""
    field = C.field
    k = C.k
    d = min_distance(C) if len(C) > 1 else None
    report = AuditReport(field.n, k, len(C), d, field.q, C.m, verify_quasi_cyclic(C, C.m), C.claimed)
    if k is None:
        report.mismatches.append(f"mixed dimensions {C.dims}")
    report.notes.extend(C.provenance.get("issues", []))
    if C.claimed:
        for name, want, got in zip(("n", "k", "size", "d"), C.claimed, (field.n, k, len(C), d)):
            if want != got:
                report.mismatches.append(f"{name}: claimed {want}, computed {got}")
    if k is not None and d is not None and d >= 2:
        delta = d // 2 - 1
        report.bound = ev_bound(field.n, k, delta, field.q)
        report.sandwich = f"{len(C)} <= A_{field.q}({field.n},{d},{k}) <= {report.bound}"
        if len(C) > report.bound:
            report.mismatches.append("size exceeds the upper bound")
    if not report.quasi_cyclic:
        report.mismatches.append(f"not closed under gamma^{C.m}")
    return report
