"""Finite fields F_{q^n} built from a primitive polynomial.

Elements are integer codes: the coordinate vector (c_0, ..., c_{n-1}) over
F_q of ``c_0 + c_1 x + ... + c_{n-1} x^{n-1}`` packed as ``sum c_i q**i``.
All arithmetic on :class:`GF` takes and returns codes; :class:`FieldElement`
wraps a code when operator syntax or the exponent view is wanted.
"""

import itertools
from functools import lru_cache

from . import fqx
from .errors import (BadArguments, DegreeMismatch, FieldMismatch, NotADivisor,
                     NotIrreducible, NotPrimitive, TooLarge, ZeroArgument, ZeroInverse)
from .numtheory import divisors, is_prime, prime_divisors

DEFAULT_TABLE_BITS = 28

# Low-weight primitive polynomials over F_2, exponents of the nonzero terms.
_BINARY_PRIMITIVE = {
    1: (1, 0), 2: (2, 1, 0), 3: (3, 1, 0), 4: (4, 1, 0), 5: (5, 2, 0),
    6: (6, 4, 3, 1, 0), 7: (7, 1, 0), 8: (8, 4, 3, 2, 0), 9: (9, 4, 0),
    10: (10, 3, 0), 11: (11, 2, 0), 12: (12, 6, 4, 1, 0), 13: (13, 4, 3, 1, 0),
    14: (14, 10, 6, 1, 0), 15: (15, 1, 0), 16: (16, 12, 3, 1, 0), 17: (17, 3, 0),
    18: (18, 7, 0), 19: (19, 5, 2, 1, 0), 20: (20, 3, 0), 21: (21, 2, 0),
    22: (22, 1, 0), 23: (23, 5, 0), 24: (24, 7, 2, 1, 0), 25: (25, 3, 0),
    26: (26, 6, 2, 1, 0), 27: (27, 5, 2, 1, 0), 28: (28, 3, 0),
}


def _is_primitive_coeffs(fq, f):
    n = len(f) - 1
    order = fq.q**n - 1
    if order == 1:
        return f == [1, 1] if fq.q == 2 else True
    for r in prime_divisors(order):
        if fqx.ppowmod(fq, [0, 1], order // r, f) == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def base_field(p, e=1):
    """F_q for q = p**e; codes are base-p packed coordinates."""
    if e == 1:
        return fqx.BaseField.prime(p)
    inner = field_new(p, 1, e, default_modulus(p, 1, e))
    q = p**e
    add = [[inner.add(a, b) for b in range(q)] for a in range(q)]
    mul = [[inner.mul(a, b) for b in range(q)] for a in range(q)]
    return fqx.BaseField(p, e, add, mul)


@lru_cache(maxsize=None)
def default_modulus(p, e, n):
    """A primitive monic polynomial of degree n over F_{p^e}, ascending coefficients.

    Uses the tabulated low-weight polynomial over F_2 when available, otherwise
    the first primitive polynomial in lexicographic order of its lower coefficients.
    """
    if p == 2 and e == 1 and n in _BINARY_PRIMITIVE:
        coeffs = [0] * (n + 1)
        for i in _BINARY_PRIMITIVE[n]:
            coeffs[i] = 1
        return tuple(coeffs)
    fq = base_field(p, e)
    for lower in itertools.product(range(fq.q), repeat=n):
        f = list(lower[::-1]) + [1]
        if f[0] == 0:
            continue
        if fqx.is_irreducible_coeffs(fq, f) and _is_primitive_coeffs(fq, f):
            return tuple(f)
    raise NotPrimitive(f"no primitive polynomial of degree {n} over F_{p**e}")  # pragma: no cover


class GF:
    """The field F_{q^n} = F_q[x]/(modulus) with primitive element gamma = x.

    Construction verifies irreducibility and primitivity and fills the
    exponent (antilog) and logarithm tables. Instances are immutable.
    """

    def __init__(self, p, e, n, modulus, cap_bits=DEFAULT_TABLE_BITS):
        if not is_prime(p):
            raise BadArguments(f"characteristic {p} is not prime")
        if e < 1 or n < 1:
            raise BadArguments("e and n must be positive")
        self.p, self.e, self.n = p, e, n
        self.fq = base_field(p, e)
        self.q = q = self.fq.q
        coeffs = [c for c in modulus]
        if any(not 0 <= c < q for c in coeffs):
            raise BadArguments(f"modulus coefficients must lie in 0..{q - 1}")
        coeffs = fqx.trim(coeffs)
        if len(coeffs) - 1 != n:
            raise DegreeMismatch(f"modulus has degree {len(coeffs) - 1}, expected {n}")
        if coeffs[-1] != 1:
            raise BadArguments("modulus must be monic")
        self.modulus = tuple(coeffs)
        if not fqx.is_irreducible_coeffs(self.fq, coeffs):
            raise NotIrreducible(f"{self._poly_str()} is reducible over F_{q}")
        if not _is_primitive_coeffs(self.fq, coeffs):
            raise NotPrimitive(f"{self._poly_str()} is irreducible but not primitive over F_{q}")
        self.order = q**n
        if self.order > 2**cap_bits:
            raise TooLarge(f"field of size {q}^{n} exceeds table cap 2^{cap_bits}")
        self.nonzero = self.order - 1
        self.char2 = p == 2
        self._qpow = [q**j % self.nonzero if self.nonzero > 1 else 0 for j in range(n)]
        self._build_tables()

    def _poly_str(self):
        return str(fqx.ConventionalPoly(self.fq, self.modulus))

    def _build_tables(self):
        M, q, n = self.nonzero, self.q, self.n
        exp = [0] * M
        log = [0] * self.order
        if self.char2 and self.e == 1:
            top = 1 << n
            red = sum(c << i for i, c in enumerate(self.modulus))
            v = 1
            for i in range(M):
                if i and v == 1:
                    raise NotPrimitive("gamma returned to 1 early")  # pragma: no cover
                exp[i] = v
                log[v] = i
                v <<= 1
                if v & top:
                    v ^= red
        else:
            fq = self.fq
            neg_mod = [fq.neg_t[c] for c in self.modulus[:n]]
            digits = [1] + [0] * (n - 1)
            for i in range(M):
                code = self.from_coords(digits)
                if i and code == 1:
                    raise NotPrimitive("gamma returned to 1 early")  # pragma: no cover
                exp[i] = code
                log[code] = i
                lead = digits[-1]
                digits = [0] + digits[:-1]
                if lead:
                    for j in range(n):
                        digits[j] = fq.add_t[digits[j]][fq.mul_t[lead][neg_mod[j]]]
        self.exp_table = exp
        self.log_table = log
        # codes of F_q inside F_{q^n}
        self.base_codes = tuple(range(q))

    # identity ---------------------------------------------------------
    @property
    def key(self):
        return (self.p, self.e, self.n, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.q}^{self.n}, modulus={self._poly_str()})"

    # coordinates ------------------------------------------------------
    def to_coords(self, a):
        q = self.q
        out = []
        for _ in range(self.n):
            a, r = divmod(a, q)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords):
        code = 0
        for c in reversed(coords):
            code = code * self.q + c
        return code

    def element(self, code):
        return FieldElement(self, code)

    def gamma(self, i=1):
        """Code of gamma**i."""
        return self.exp_table[i % self.nonzero]

    # arithmetic on codes ----------------------------------------------
    def add(self, a, b):
        if self.char2:
            return a ^ b
        q, add_t = self.q, self.fq.add_t
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            out += add_t[x][y] * scale
            scale *= q
        return out

    def neg(self, a):
        if self.char2:
            return a
        q, neg_t = self.q, self.fq.neg_t
        out, scale = 0, 1
        while a:
            a, x = divmod(a, q)
            out += neg_t[x] * scale
            scale *= q
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        log = self.log_table
        return self.exp_table[(log[a] + log[b]) % self.nonzero]

    def inv(self, a):
        if a == 0:
            raise ZeroInverse("zero has no inverse")
        return self.exp_table[-self.log_table[a] % self.nonzero]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroInverse("zero has no inverse")
            return 1 if k == 0 else 0
        return self.exp_table[self.log_table[a] * k % self.nonzero]

    def dlog(self, a):
        if a == 0:
            raise ZeroArgument("discrete log of zero")
        return self.log_table[a]

    def frobenius(self, a, j=1):
        """a**(q**j)."""
        if a == 0:
            return 0
        return self.exp_table[self.log_table[a] * self._qpow[j % self.n] % self.nonzero]

    def in_base(self, a):
        return a < self.q

    # structure --------------------------------------------------------
    def subfield(self, t):
        """Codes of the unique subfield of order q**t."""
        if t < 1 or self.n % t:
            raise NotADivisor(f"{t} does not divide {self.n}")
        step = self.nonzero // (self.q**t - 1)
        return frozenset([0] + [self.exp_table[i * step] for i in range(self.q**t - 1)])

    def mth_power_subgroup(self, m):
        """(generator exponent, order) of the group of nonzero m-th powers."""
        if m < 1 or self.nonzero % m:
            raise NotADivisor(f"{m} does not divide {self.nonzero}")
        return m, self.nonzero // m

    def divisors_of_order(self):
        return divisors(self.nonzero)

    def elements(self):
        return range(self.order)


@lru_cache(maxsize=64)
def _cached_field(p, e, n, modulus, cap_bits):
    return GF(p, e, n, modulus, cap_bits)


def field_new(p, e, n, modulus=None, cap_bits=DEFAULT_TABLE_BITS):
    """Build (or fetch from cache) the field F_{(p^e)^n} for the given modulus."""
    if modulus is None:
        modulus = default_modulus(p, e, n)
    return _cached_field(p, e, n, tuple(modulus), cap_bits)


def embedding(small, big):
    """Field embedding small -> big as a list indexed by small's codes.

    The generator of ``small`` is sent to a root of its modulus in ``big``,
    so the map respects both addition and multiplication.
    """
    if small.fq != big.fq:
        raise FieldMismatch("fields have different base fields")
    if big.n % small.n:
        raise NotADivisor(f"{small.n} does not divide {big.n}")
    step = big.nonzero // small.nonzero
    mod = small.modulus
    for j in range(small.nonzero):
        beta = big.gamma(j * step)
        acc = 0
        for c in reversed(mod):
            acc = big.add(big.mul(acc, beta), c)
        if acc == 0:
            break
    else:  # pragma: no cover - a root always exists in the subfield
        raise NotIrreducible("modulus has no root in the extension")
    powers = [big.pow(beta, i) for i in range(small.n)]
    table = []
    for code in range(small.order):
        acc = 0
        for c, b in zip(small.to_coords(code), powers):
            if c:
                acc = big.add(acc, big.mul(c, b))
        table.append(acc)
    return table


class FieldElement:
    """An element of a :class:`GF`, viewable as coordinates or as a power of gamma."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        if not 0 <= code < field.order:
            raise BadArguments(f"code {code} out of range for {field!r}")
        self.field = field
        self.code = code

    @property
    def coords(self):
        return self.field.to_coords(self.code)

    @property
    def exp(self):
        return None if self.code == 0 else self.field.log_table[self.code]

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("elements belong to different fields")
            return other.code
        if isinstance(other, int):
            return other % self.field.p  # prime-field scalar
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.sub(self.code, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.div(self.code, b))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.code, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, j=1):
        return FieldElement(self.field, self.field.frobenius(self.code, j))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash(self.code)

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return "0" if self.code == 0 else f"g^{self.exp}"
