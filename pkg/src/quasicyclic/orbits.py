"""Cyclic, m-quasi cyclic and Frobenius orbits of subspaces."""

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import NoInteriorCoefficient, NotADivisor, TooLarge, ZeroArgument
from .numtheory import divisors, int_log
from .subspace import frobenius_shift, shift_by_exponent  # noqa: F401  (frobenius_shift re-exported)

ORBIT_CAP = 2**22


@dataclass
class OrbitReport:
    kind: str  # "cyclic", "quasi" or "frobenius"
    m: int
    length: int
    t: int  # stabilizer degree: F_{q^t}^* = {a : aV = V}
    representatives: list = dc_field(repr=False)
    closed_form_length: int = 0
    lemma9_consistent: object = None  # True / False / None (not applicable)
    fit_t: object = None
    full_length: bool = False

    def to_dict(self, subspace_text=None):
        d = {
            "kind": self.kind,
            "m": self.m,
            "length": self.length,
            "t": self.t,
            "closed_form_length": self.closed_form_length,
            "lemma9_consistent": self.lemma9_consistent,
            "fit_t": self.fit_t,
            "full_length": self.full_length,
        }
        if subspace_text is not None:
            d["representatives"] = [subspace_text(V) for V in self.representatives]
        return d


def _check_m(field, m):
    if m < 1 or field.nonzero % m:
        raise NotADivisor(f"m={m} does not divide {field.nonzero}")


def stabilizer_order(V):
    """Order of {a in F* : aV = V}; the stabilizer is generated by gamma^((q^n-1)/order)."""
    M = V.field.nonzero
    for d in divisors(M):
        if shift_by_exponent(V, d) == V:
            return M // d
    return 1  # pragma: no cover - d = M always fixes V


def stabilizer_degree(V):
    """t with stabilizer F_{q^t}^*; for the zero subspace every scalar fixes V."""
    if V.dim == 0:
        return V.field.n
    return int_log(stabilizer_order(V) + 1, V.field.q)


def closed_form_length(field, m, t):
    """((q^n-1)/m) / gcd((q^n-1)/m, q^t-1): orbit length under <gamma^m> for stabilizer F_{q^t}^*."""
    M = field.nonzero // m
    return M // math.gcd(M, field.q**t - 1)


def subfield_length_fit(field, m, length):
    """Divisor t' of n with length = (q^n-1)/(m(q^t'-1)), or None."""
    for t in divisors(field.n):
        if length * m * (field.q**t - 1) == field.nonzero:
            return t
    return None


def quasi_orbit(V, m=1, cap=ORBIT_CAP):
    """Enumerate gamma^(m i) V until it repeats.

    Enumeration decides the length; the closed form and the fit to
    (1/m)(q^n-1)/(q^t'-1) are recorded alongside for auditing.
    """
    field = V.field
    _check_m(field, m)
    reps = [V]
    W = shift_by_exponent(V, m)
    while W != V:
        reps.append(W)
        if len(reps) > cap:
            raise TooLarge(f"orbit longer than cap {cap}")
        W = shift_by_exponent(W, m)
    t = stabilizer_degree(V)
    fit = subfield_length_fit(field, m, len(reps))
    return OrbitReport(
        kind="cyclic" if m == 1 else "quasi",
        m=m,
        length=len(reps),
        t=t,
        representatives=reps,
        closed_form_length=closed_form_length(field, m, t),
        lemma9_consistent=fit is not None,
        fit_t=fit,
        full_length=len(reps) * m * (field.q - 1) == field.nonzero,
    )


def cyclic_orbit(V, cap=ORBIT_CAP):
    return quasi_orbit(V, 1, cap)


def frobenius_orbit(V):
    """Distinct sigma_j(V) for j = 0..n-1."""
    reps = []
    for j in range(V.field.n):
        W = frobenius_shift(V, j)
        if W in reps:
            break
        reps.append(W)
    return OrbitReport(kind="frobenius", m=1, length=len(reps), t=stabilizer_degree(V), representatives=reps)


def equivalent_mod_t(field, a, b, m, t):
    """a^m ~_t b^m: the ratio a^m / b^m lies in F_{q^t}^*."""
    if a == 0 or b == 0:
        raise ZeroArgument("~_t is defined on nonzero elements")
    _check_m(field, m)
    if t < 1 or field.n % t:
        raise NotADivisor(f"t={t} does not divide n={field.n}")
    step = field.nonzero // (field.q**t - 1)
    return (field.dlog(a) - field.dlog(b)) * m % field.nonzero % step == 0


def mod_t_classes(field, m, t):
    """Partition of the nonzero m-th powers under ~_t, as lists of exponents."""
    _check_m(field, m)
    step = field.nonzero // (field.q**t - 1)
    classes = {}
    for e in range(0, field.nonzero, m):
        classes.setdefault(e % step, []).append(e)
    return list(classes.values())


def claimed_class_count(field, m, t):
    """(1/m)(q^n-1)/(q^t-1), possibly non-integral."""
    return Fraction(field.nonzero, m * (field.q**t - 1))


def orbit_size_lower_bound(L, m=1, s=None):
    """ceil((1/m)(q^n-1)/(q^gcd(s,n)-1)) for a nonzero interior coefficient a_s.

    Without ``s`` the best (largest) bound over the interior support is used.
    """
    field = L.field
    _check_m(field, m)
    interior = L.interior_indices()
    if s is None:
        if not interior:
            raise NoInteriorCoefficient("no nonzero a_s with 1 <= s < q-degree")
        g = min(math.gcd(j, field.n) for j in interior)
    else:
        if s not in interior:
            raise NoInteriorCoefficient(f"a_{s} is zero or not interior")
        g = math.gcd(s, field.n)
    bound = Fraction(field.nonzero, m * (field.q**g - 1))
    return math.ceil(bound)
