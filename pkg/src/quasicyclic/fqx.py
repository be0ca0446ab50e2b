"""Arithmetic in F_q and F_q[x].

Elements of F_q are the integers ``0..q-1``. For a prime ``q`` they are residues;
for ``q = p**e`` they are base-p packed coordinate vectors of an extension
(see :func:`quasicyclic.gf.base_field`). Polynomials are ascending coefficient
lists with no trailing zeros; ``[]`` is the zero polynomial.
"""

from .errors import BadArguments
from .numtheory import is_prime, prime_divisors


class BaseField:
    """Table-driven F_q for small q."""

    def __init__(self, p, e, add, mul):
        self.p = p
        self.e = e
        self.q = p**e
        self.add_t = add
        self.mul_t = mul
        self.neg_t = [add[a].index(0) for a in range(self.q)]
        self.inv_t = [0] + [mul[a].index(1) for a in range(1, self.q)]

    @classmethod
    def prime(cls, p):
        if not is_prime(p):
            raise BadArguments(f"{p} is not prime")
        add = [[(a + b) % p for b in range(p)] for a in range(p)]
        mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        return cls(p, 1, add, mul)

    def __repr__(self):
        return f"BaseField(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, BaseField) and self.mul_t == other.mul_t and self.add_t == other.add_t

    def __hash__(self):
        return hash((self.p, self.e))

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def elements(self):
        return range(self.q)


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def padd(fq, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = fq.add_t[out[i]][c]
    return trim(out)


def psub(fq, f, g):
    return padd(fq, f, [fq.neg_t[c] for c in g])


def pmul(fq, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    add, mul = fq.add_t, fq.mul_t
    for i, a in enumerate(f):
        if a == 0:
            continue
        row = mul[a]
        for j, b in enumerate(g):
            if b:
                out[i + j] = add[out[i + j]][row[b]]
    return trim(out)


def pdivmod(fq, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lead = fq.inv_t[g[-1]]
    quot = [0] * max(len(f) - dg, 0)
    add, mul, neg = fq.add_t, fq.mul_t, fq.neg_t
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c == 0:
            continue
        c = mul[c][inv_lead]
        quot[i - dg] = c
        nc = neg[c]
        for j, b in enumerate(g):
            if b:
                f[i - dg + j] = add[f[i - dg + j]][mul[nc][b]]
    return trim(quot), trim(f[:dg])


def pmod(fq, f, g):
    return pdivmod(fq, f, g)[1]


def monic(fq, f):
    if not f:
        return []
    inv = fq.inv_t[f[-1]]
    return [fq.mul_t[inv][c] for c in f]


def pgcd(fq, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, pmod(fq, f, g)
    return monic(fq, f)


def ppowmod(fq, f, e, mod):
    result = [1]
    base = pmod(fq, f, mod)
    while e:
        if e & 1:
            result = pmod(fq, pmul(fq, result, base), mod)
        e >>= 1
        if e:
            base = pmod(fq, pmul(fq, base, base), mod)
    return result


def is_irreducible_coeffs(fq, f):
    """Rabin's test: x^(q^d) = x mod f, and gcd(x^(q^(d/r)) - x, f) = 1 for primes r | d."""
    f = trim(f)
    d = degree(f)
    if d < 1:
        raise BadArguments("irreducibility needs degree >= 1")
    if d == 1:
        return True
    f = monic(fq, f)
    checkpoints = {d // r for r in prime_divisors(d)}
    x = [0, 1]
    h = x
    for i in range(1, d + 1):
        h = ppowmod(fq, h, fq.q, f)
        if i in checkpoints and len(pgcd(fq, psub(fq, h, x), f)) != 1:
            return False
    return h == x


class ConventionalPoly:
    """An ordinary polynomial over F_q, coefficients ascending."""

    def __init__(self, fq, coeffs):
        self.fq = fq
        self.coeffs = tuple(trim(c % fq.q if fq.e == 1 else c for c in coeffs))

    @classmethod
    def from_exponents(cls, fq, exponents):
        """Sum of x**e over the given exponents (coefficient 1 each)."""
        coeffs = [0] * (max(exponents) + 1)
        for e in exponents:
            coeffs[e] = fq.add_t[coeffs[e]][1]
        return cls(fq, coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, ConventionalPoly) and self.fq == other.fq and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else (f"{c}" if i == 0 else f"{c}*{mono}"))
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"ConventionalPoly({self}, q={self.fq.q})"


def is_irreducible(f):
    """Irreducibility of a :class:`ConventionalPoly` over its base field."""
    return is_irreducible_coeffs(f.fq, list(f.coeffs))
