"""Linearized polynomials sum a_j x^[j] with [j] = q**j over F_{q^n}."""

from dataclasses import dataclass

from . import fqx
from .errors import CapExceeded, FieldMismatch, TooLarge, ZeroScalar
from .fqx import ConventionalPoly, is_irreducible  # noqa: F401  (re-exported)
from .gf import field_new
from .linalg import nullspace
from .subspace import ELEMENT_CAP, Subspace, elements, span

DEFAULT_N_CAP = 64


class LinearizedPoly:
    """q-polynomial with coefficients ``coeffs[j]`` (field codes) on x^[j]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls, field):
        return cls(field, (1,))

    @classmethod
    def from_terms(cls, field, terms):
        """Build from a ``{j: coefficient_code}`` mapping."""
        top = max(terms)
        return cls(field, [terms.get(j, 0) for j in range(top + 1)])

    @property
    def qdegree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def support(self):
        return [j for j, a in enumerate(self.coeffs) if a]

    def interior_indices(self):
        """Indices 1 <= s < q-degree with nonzero coefficient."""
        return [j for j in self.support() if 0 < j < self.qdegree]

    def top_interior(self):
        """Largest index below the q-degree with a nonzero coefficient."""
        below = [j for j in self.support() if j < self.qdegree]
        return max(below) if below else None

    def __call__(self, x):
        return eval_poly(self, x)

    def __eq__(self, other):
        return isinstance(other, LinearizedPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinearizedPoly({format_poly(self)})"

    def lift(self, table, field):
        """Same polynomial with coefficients mapped through an embedding table."""
        return LinearizedPoly(field, [table[a] for a in self.coeffs])


def format_poly(L):
    log = L.field.log_table
    parts = []
    for j in range(L.qdegree, -1, -1):
        a = L.coeffs[j]
        if not a:
            continue
        mono = "x" if j == 0 else f"x^[{j}]"
        parts.append(mono if a == 1 else f"g^{log[a]}*{mono}")
    return " + ".join(parts) or "0"


def eval_poly(L, x):
    """L(x) = sum a_j x^(q^j)."""
    f = L.field
    acc = 0
    for j, a in enumerate(L.coeffs):
        if a:
            acc = f.add(acc, f.mul(a, f.frobenius(x, j)))
    return acc


def subspace_poly(V, cap=ELEMENT_CAP):
    """Monic subspace polynomial whose roots are exactly the elements of V.

    Adds one basis vector b at a time:
    L_{V+<b>}(x) = L_V(x)^q - L_V(b)^(q-1) L_V(x).
    """
    f = V.field
    if f.q**V.dim > cap:
        raise TooLarge(f"{f.q}^{V.dim} roots exceed cap {cap}")
    coeffs = [1]
    for b in V.basis:
        c = f.pow(eval_poly(LinearizedPoly(f, coeffs), b), f.q - 1)
        powered = [0] + [f.frobenius(a) for a in coeffs]
        for j, a in enumerate(coeffs):
            powered[j] = f.sub(powered[j], f.mul(c, a))
        coeffs = powered
    return LinearizedPoly(f, coeffs)


def product_expansion(V):
    """Ordinary coefficients of prod_{v in V}(x - v), lowest degree first."""
    f = V.field
    poly = [1]
    for v in elements(V):
        nv = f.neg(v)
        out = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            out[i + 1] = f.add(out[i + 1], c)
            out[i] = f.add(out[i], f.mul(nv, c))
        poly = out
    return poly


def linearized_from_expansion(field, poly):
    """Convert an ordinary coefficient list to a LinearizedPoly.

    Raises ValueError if a monomial outside the q-powers survives.
    """
    terms = {}
    q = field.q
    j, power = 0, 1
    powers = {}
    while power < len(poly):
        powers[power] = j
        j += 1
        power *= q
    for deg, c in enumerate(poly):
        if c:
            if deg not in powers:
                raise ValueError(f"monomial x^{deg} is not a q-power")
            terms[powers[deg]] = c
    return LinearizedPoly.from_terms(field, terms)


def kernel(L, ambient=None):
    """Roots of L in ``ambient`` as an F_q-subspace (nullspace of x -> L(x))."""
    ambient = ambient or L.field
    if L.field != ambient:
        raise FieldMismatch("lift the polynomial into the ambient field first")
    q, n = ambient.q, ambient.n
    images = [eval_poly(L, q**i) for i in range(n)]
    return span(ambient, nullspace(ambient.fq, n, images, n))


def scale_conjugate(L, alpha, m=1):
    """Subspace polynomial of alpha^m V from that of V.

    Coefficient j becomes alpha^(m([k]-[j])) a_j; the leading term stays monic.
    """
    f = L.field
    if alpha == 0:
        raise ZeroScalar("alpha must be nonzero")
    a = f.pow(alpha, m)
    k = L.qdegree
    qk = f.q**k
    coeffs = [f.mul(f.pow(a, qk - f.q**j), c) if c else 0 for j, c in enumerate(L.coeffs[:-1])]
    return LinearizedPoly(f, coeffs + [L.coeffs[-1]])


def frobenius_conjugate(L, s):
    """Apply sigma_s to every coefficient."""
    f = L.field
    return LinearizedPoly(f, [f.frobenius(c, s) for c in L.coeffs])


class _Reducer:
    """Tracks x^[i] mod L as a linearized remainder of q-degree < k."""

    def __init__(self, L):
        f = L.field
        inv = f.inv(L.coeffs[-1])
        self.f = f
        self.k = L.qdegree
        # x^[k] == -sum (a_j / a_k) x^[j]  (mod L)
        self.tail = [f.neg(f.mul(inv, a)) for a in L.coeffs[:-1]]
        self.rem = [1] + [0] * (self.k - 1) if self.k else []

    def step(self):
        f, k = self.f, self.k
        if k == 0:
            return
        raised = [f.frobenius(a) for a in self.rem]
        top = raised[-1]
        rem = [0] + raised[:-1]
        if top:
            rem = [f.add(r, f.mul(top, t)) for r, t in zip(rem, self.tail)]
        self.rem = rem

    def is_x(self):
        return self.k == 0 or (self.rem[0] == 1 and not any(self.rem[1:]))


def divides_xqn_minus_x(L, N):
    """True iff L divides x^(q^N) - x, i.e. L has q^deg distinct roots in F_{q^N}."""
    if L.qdegree == 0:
        return True
    red = _Reducer(L)
    for _ in range(N):
        red.step()
    return red.is_x()


def splitting_field_degree(L, cap=DEFAULT_N_CAP):
    """Smallest N <= cap with L | x^(q^N) - x."""
    if L.qdegree == 0:
        return 1
    red = _Reducer(L)
    for N in range(1, cap + 1):
        red.step()
        if red.is_x():
            return N
    raise CapExceeded(f"no splitting degree N <= {cap} for {format_poly(L)}")


def trinomial(field, k, s, a_s=1, a_0=1):
    """x^[k] + a_s x^[s] + a_0 x."""
    return LinearizedPoly.from_terms(field, {k: 1, s: a_s, 0: a_0})


def trinomial_companion(fq, k, s):
    """The ordinary trinomial x^([k]-1) + x^([s]-1) + 1 over F_q."""
    q = fq.q
    return ConventionalPoly.from_exponents(fq, [q**k - 1, q**s - 1, 0])


@dataclass(frozen=True)
class TrinomialRow:
    k: int
    s: int
    N: int
    check: str  # "divides" (remainder computation) or "degree" ((q^k - 1) | N)


def search_trinomials(q, k_max, N_cap, verify_limit=31, p=None, e=1):
    """Rows (k, s, N) where x^([k]-1) + x^([s]-1) + 1 is irreducible and N <= N_cap.

    For an irreducible trinomial of degree q^k - 1 the roots lie in F_{q^N}
    exactly when (q^k - 1) | N. Rows with N <= ``verify_limit`` are checked
    again by the remainder computation of x^(q^N) mod x^[k] + x^[s] + x.
    """
    p = p or q
    base = field_new(p, e, 1)
    fq = base.fq
    rows = []
    for k in range(2, k_max + 1):
        for s in range(1, k):
            if not is_irreducible(trinomial_companion(fq, k, s)):
                continue
            deg = q**k - 1
            L = trinomial(base, k, s)
            for N in range(deg, N_cap + 1, deg):
                if N <= verify_limit:
                    if not divides_xqn_minus_x(L, N):  # pragma: no cover - would contradict the root count
                        raise AssertionError(f"roots of ({k},{s}) not in F_{q}^{N}")
                    rows.append(TrinomialRow(k, s, N, "divides"))
                else:
                    rows.append(TrinomialRow(k, s, N, "degree"))
    return rows


def _cleared(q, k, s):
    """Exponents (A, B, D) of the ratio a_0^(B/D) / a_s^(A/D)."""
    return q**k - 1, q**k - q**s, q**s - 1


def trinomial_ratio_exponent(field, a_0, a_s, k, s):
    """Discrete log of a_0^((q^k-q^s)/(q^s-1)) / a_s^((q^k-1)/(q^s-1)).

    Returns ``(exponent, cleared)``; when (q^s - 1) does not divide the
    numerators the quantity is replaced by its (q^s - 1)-th power and
    ``cleared`` is True.
    """
    A, B, D = _cleared(field.q, k, s)
    la, ls = field.dlog(a_0), field.dlog(a_s)
    if A % D == 0 and B % D == 0:
        return (la * (B // D) - ls * (A // D)) % field.nonzero, False
    return (la * B - ls * A) % field.nonzero, True


def frobenius_power_identity(field, a_0, a_s, k, s, i):
    """Whether (a_0^((q^k-q^s)/(q^s-1)) / a_s^((q^k-1)/(q^s-1)))^(q^i - 1) = 1."""
    z, _ = trinomial_ratio_exponent(field, a_0, a_s, k, s)
    return z * (field.q**i - 1) % field.nonzero == 0


# used by construction code that needs ordinary polynomial helpers
poly_gcd = fqx.pgcd
