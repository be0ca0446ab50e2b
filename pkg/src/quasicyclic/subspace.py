"""F_q-subspaces of F_{q^n} in canonical reduced-echelon form.

A :class:`Subspace` stores the coordinate rows of its reduced row echelon
basis, so two subspaces are equal exactly when their stored bases are equal.
"""

import itertools

from .errors import FieldMismatch, NotASubspace, TooLarge, ZeroScalar
from .gf import FieldElement
from .linalg import rank, rref
from .numtheory import gaussian, int_log  # noqa: F401  (gaussian is part of this module's API)

ELEMENT_CAP = 2**20


def _code(field, x):
    if isinstance(x, FieldElement):
        if x.field != field:
            raise FieldMismatch("generator from a different field")
        return x.code
    return x


class Subspace:
    __slots__ = ("field", "basis", "_hash")

    def __init__(self, field, basis):
        # basis is trusted to be canonical; use span() for arbitrary generators
        self.field = field
        self.basis = tuple(basis)
        self._hash = hash(self.basis)

    @property
    def dim(self):
        return len(self.basis)

    k = dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis and self.field == other.field

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={[self.field.dlog(b) for b in self.basis]})"

    def elements(self, cap=ELEMENT_CAP):
        return elements(self, cap)

    def nonzero_exponents(self):
        """Sorted exponents j with gamma**j in the subspace."""
        log = self.field.log_table
        return sorted(log[x] for x in elements(self) if x)


def span(field, gens):
    """Canonical subspace spanned by ``gens`` (codes or FieldElements)."""
    codes = [_code(field, g) for g in gens]
    return Subspace(field, rref(field.fq, field.n, codes))


def zero_subspace(field):
    return Subspace(field, ())


def whole_space(field):
    return span(field, [field.q**i for i in range(field.n)])


def subfield_subspace(field, t):
    """The subfield F_{q^t} viewed as a t-dimensional subspace."""
    return span(field, field.subfield(t))


def elements(V, cap=ELEMENT_CAP):
    """All q**k elements, ordered lexicographically by coefficient tuple on the canonical basis."""
    field = V.field
    if field.q**V.dim > cap:
        raise TooLarge(f"{field.q}^{V.dim} elements exceed cap {cap}")
    out = []
    add, mul = field.add, field.mul
    for coeffs in itertools.product(range(field.q), repeat=V.dim):
        acc = 0
        for c, b in zip(coeffs, V.basis):
            if c:
                acc = add(acc, b if c == 1 else mul(c, b))
        out.append(acc)
    return out


def from_elements(field, elems, strict=True):
    """Subspace whose elements are ``elems`` (zero may be omitted).

    With ``strict`` the list must be closed under addition and F_q-scaling;
    otherwise the span is returned silently.
    """
    codes = {_code(field, e) for e in elems}
    codes.discard(0)
    V = span(field, codes)
    if strict and set(elements(V)) - {0} != codes:
        raise NotASubspace(f"{len(codes)} elements do not form a subspace (span has dimension {V.dim})")
    return V


class CharacteristicVector:
    """Indicator of the nonzero elements of a subspace, bit j <-> gamma**j."""

    __slots__ = ("bits", "length")

    def __init__(self, bits, length):
        self.bits = bits
        self.length = length

    def popcount(self):
        return self.bits.bit_count()

    def __and__(self, other):
        return CharacteristicVector(self.bits & other.bits, self.length)

    def rotate(self, r=1):
        r %= self.length
        mask = (1 << self.length) - 1
        return CharacteristicVector(((self.bits << r) | (self.bits >> (self.length - r))) & mask, self.length)

    def to_list(self):
        return [self.bits >> j & 1 for j in range(self.length)]

    def __eq__(self, other):
        return isinstance(other, CharacteristicVector) and (self.bits, self.length) == (other.bits, other.length)

    def __hash__(self):
        return hash(self.bits)


def characteristic_vector(V):
    log = V.field.log_table
    bits = 0
    for x in elements(V):
        if x:
            bits |= 1 << log[x]
    return CharacteristicVector(bits, V.field.nonzero)


def _same_field(U, V):
    if U.field != V.field:
        raise FieldMismatch("subspaces live in different fields")


def intersect_dim(U, V):
    """dim(U & V) = dim U + dim V - rank of the stacked bases."""
    _same_field(U, V)
    return U.dim + V.dim - rank(U.field.fq, U.field.n, U.basis + V.basis)


def intersect_dim_by_vectors(U, V):
    """Intersection dimension from the AND of characteristic vectors."""
    _same_field(U, V)
    common = (characteristic_vector(U) & characteristic_vector(V)).popcount()
    return int_log(common + 1, U.field.q)


def distance(U, V):
    """Subspace distance dim U + dim V - 2 dim(U & V)."""
    return U.dim + V.dim - 2 * intersect_dim(U, V)


def scalar_shift(V, a):
    """The subspace a*V for a nonzero scalar a."""
    field = V.field
    a = _code(field, a)
    if a == 0:
        raise ZeroScalar("cannot shift by zero")
    return Subspace(field, rref(field.fq, field.n, [field.mul(a, b) for b in V.basis]))


def shift_by_exponent(V, i):
    """gamma**i * V, working directly on discrete logs."""
    field = V.field
    if i % field.nonzero == 0:
        return V
    exp, log, M = field.exp_table, field.log_table, field.nonzero
    return Subspace(field, rref(field.fq, field.n, [exp[(log[b] + i) % M] for b in V.basis]))


def frobenius_shift(V, j):
    """sigma_j(V): image of V under x -> x**(q**j)."""
    field = V.field
    if j % field.n == 0:
        return V
    return Subspace(field, rref(field.fq, field.n, [field.frobenius(b, j) for b in V.basis]))


def grassmannian(field, k):
    """Every k-dimensional subspace of the field, in a deterministic order.

    Walks all reduced echelon forms: pivot columns chosen in decreasing
    order with free entries only in non-pivot positions below each pivot.
    """
    n, q = field.n, field.q
    out = []
    for pivots in itertools.combinations(range(n - 1, -1, -1), k):
        free = []
        for r, p in enumerate(pivots):
            free.append([c for c in range(p) if c not in pivots])
        slots = [(r, c) for r, cols in enumerate(free) for c in cols]
        for values in itertools.product(range(q), repeat=len(slots)):
            rows = [q**p for p in pivots]
            for (r, c), val in zip(slots, values):
                rows[r] += val * q**c
            out.append(Subspace(field, tuple(rows)))
    return out
