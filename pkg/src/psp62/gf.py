"""Univariate polynomials over prime fields and their factorization.

Polynomials are coefficient lists, lowest degree first, wrapped in
:class:`GFPoly`.  Factorization is the usual three-stage pipeline: squarefree
decomposition, distinct-degree factorization, and Cantor-Zassenhaus
equal-degree splitting driven by a seeded :class:`random.Random`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import UniPoly
from .perm import CycleType

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact below 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_above(lo: int, count: int) -> list[int]:
    out, n = [], lo + 1
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, c) -> int:
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise ValueError(f"bad reduction prime {self.p} for {c}")
        return c.numerator * pow(c.denominator, -1, self.p) % self.p


# ---------------------------------------------------------------------------
# list kernels

def _strip(f: list[int]) -> list[int]:
    while f and not f[-1]:
        f.pop()
    return f


def _add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return _strip(out)


def _sub(f, g, p):
    return _add(f, [(-c) % p for c in g], p)


def _scale(f, c, p):
    return _strip([a * c % p for a in f])


def _mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip([c % p for c in out])


def _divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], _strip(r)
    inv = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * inv % p
        q[k] = c
        if c:
            for j in range(dg + 1):
                r[k + j] = (r[k + j] - c * g[j]) % p
    return _strip(q), _strip(r[:dg])


def _rem(f, g, p):
    return _divmod(f, g, p)[1]


def _monic(f, p):
    if not f:
        return []
    return _scale(f, pow(f[-1], -1, p), p)


def _gcd(f, g, p):
    while g:
        f, g = g, _rem(f, g, p)
    return _monic(f, p)


def _deriv(f, p):
    return _strip([i * c % p for i, c in enumerate(f)][1:])


def _powmod(f, e, m, p):
    out = [1]
    base = _rem(f, m, p)
    while e:
        if e & 1:
            out = _rem(_mul(out, base, p), m, p)
        e >>= 1
        if e:
            base = _rem(_mul(base, base, p), m, p)
    return out


def _pth_root(f, p):
    # f(X) = g(X^p) in char p; coefficients are their own p-th roots in F_p
    return [f[i] for i in range(0, len(f), p)]


# ---------------------------------------------------------------------------

class GFPoly:
    """Polynomial over F_p, lowest degree first, no trailing zeros."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p: int):
        self.p = p
        self.coeffs = tuple(_strip([int(c) % p for c in coeffs]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __eq__(self, other):
        return isinstance(other, GFPoly) and (self.p, self.coeffs) == (other.p, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"GFPoly({list(self.coeffs)}, p={self.p})"

    def sort_key(self):
        return (self.degree, self.coeffs[::-1])

    def __mul__(self, other: "GFPoly") -> "GFPoly":
        return GFPoly(_mul(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __add__(self, other: "GFPoly") -> "GFPoly":
        return GFPoly(_add(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __sub__(self, other: "GFPoly") -> "GFPoly":
        return GFPoly(_sub(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __pow__(self, e: int) -> "GFPoly":
        out = GFPoly([1], self.p)
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: "GFPoly"):
        q, r = _divmod(list(self.coeffs), list(other.coeffs), self.p)
        return GFPoly(q, self.p), GFPoly(r, self.p)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> "GFPoly":
        return GFPoly(_monic(list(self.coeffs), self.p), self.p)

    def derivative(self) -> "GFPoly":
        return GFPoly(_deriv(list(self.coeffs), self.p), self.p)

    def is_squarefree(self) -> bool:
        f = list(self.coeffs)
        return len(_gcd(f, _deriv(f, self.p), self.p)) == 1


def reduce(f: UniPoly, p: int) -> GFPoly:
    """Coefficientwise reduction of a rational polynomial modulo ``p``."""
    field = PrimeField(p)
    return GFPoly([field(c) for c in f.coeffs], p)


def gcd(f: GFPoly, g: GFPoly) -> GFPoly:
    return GFPoly(_gcd(list(f.coeffs), list(g.coeffs), f.p), f.p)


def squarefree_decomposition(f: GFPoly) -> list[tuple[GFPoly, int]]:
    """Monic squarefree factors with multiplicities (handles p-th powers)."""
    p = f.p
    if f.degree < 0:
        raise ValueError("squarefree decomposition of zero polynomial")
    out: dict[int, list[int]] = {}

    def rec(g: list[int], mult: int):
        i = 1
        d = _deriv(g, p)
        if not d:
            if len(g) > 1:
                rec(_pth_root(g, p), mult * p)
            return
        c = _gcd(g, d, p)
        w = _divmod(g, c, p)[0]
        while len(w) > 1:
            y = _gcd(w, c, p)
            z = _divmod(w, y, p)[0]
            if len(z) > 1:
                prev = out.get(i * mult, [1])
                out[i * mult] = _mul(prev, z, p)
            i += 1
            w = y
            c = _divmod(c, y, p)[0]
        if len(c) > 1:
            rec(_pth_root(c, p), mult * p)

    rec(_monic(list(f.coeffs), p), 1)
    return [(GFPoly(g, p), m) for m, g in sorted(out.items())]


class _Frobenius:
    """The F_p-linear map h -> h^p on F_p[X]/(f), as a matrix.

    Also valid modulo any divisor of ``f``: reduce the result afterwards.
    """

    def __init__(self, f: list[int], p: int):
        self.f, self.p = f, p
        n = len(f) - 1
        self.n = n
        # fall back to Python ints where int64 dot products could overflow
        dt = np.int64 if (p - 1) ** 2 * (n + 1) < 2 ** 62 else object
        self.dtype = dt
        fa = np.array(_monic(f, p)[:-1], dtype=dt)
        xp = np.zeros(n, dtype=dt)
        xp_list = _powmod([0, 1], p, f, p)
        xp[:len(xp_list)] = xp_list
        m = np.zeros((n, n), dtype=dt)
        col = np.zeros(n, dtype=dt)
        col[0] = 1
        for i in range(n):
            m[:, i] = col
            prod = np.convolve(col, xp) % p
            # reduce modulo the monic f, top coefficient first
            for k in range(len(prod) - 1, n - 1, -1):
                c = prod[k]
                if c:
                    prod[k - n:k] = (prod[k - n:k] - c * fa) % p
            col = prod[:n]
        self.matrix = m

    def __call__(self, h: list[int], modulus: list[int] | None = None) -> list[int]:
        v = np.zeros(self.n, dtype=self.dtype)
        v[:len(h)] = h
        out = _strip([int(c) for c in (self.matrix @ v) % self.p])
        if modulus is not None and modulus is not self.f:
            out = _rem(out, modulus, self.p)
        return out


def distinct_degree(f: list[int], p: int,
                    frob: _Frobenius | None = None) -> list[tuple[list[int], int]]:
    """Split a monic squarefree ``f`` into products of irreducibles of equal
    degree."""
    out = []
    if frob is None and len(f) > 2:
        frob = _Frobenius(f, p)
    h = [0, 1]
    x = [0, 1]
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = frob(h, f)
        g = _gcd(f, _sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, i))
            f = _divmod(f, g, p)[0]
            h = _rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f: list[int], d: int, p: int, rng: random.Random,
                 frob: _Frobenius | None = None) -> list[list[int]]:
    """Cantor-Zassenhaus splitting of a product of degree-``d``
    irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    if frob is None and p > 2:
        frob = _Frobenius(f, p)
    while True:
        a = _strip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, b = list(a), list(a)
            for _ in range(d - 1):
                b = _rem(_mul(b, b, p), f, p)
                t = _add(t, b, p)
            g = _gcd(f, t, p)
        else:
            # a^((p^d - 1)/2) = N(a)^((p - 1)/2), N(a) = a^(1 + p + ... + p^(d-1))
            norm, b = list(a), list(a)
            for _ in range(d - 1):
                b = frob(b, f)
                norm = _rem(_mul(norm, b, p), f, p)
            c = _powmod(norm, (p - 1) // 2, f, p)
            g = _gcd(f, _sub(c, [1], p), p)
        if 1 < len(g) < len(f):
            h = _divmod(f, g, p)[0]
            return equal_degree(g, d, p, rng, frob) + equal_degree(h, d, p, rng, frob)


def factor(f: GFPoly, seed=0) -> list[tuple[GFPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities,
    sorted by (degree, coefficients from the top)."""
    if f.degree < 1:
        raise ValueError("cannot factor a constant polynomial")
    p = f.p
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        gl = list(g.coeffs)
        frob = _Frobenius(gl, p) if len(gl) > 2 and p > 2 else None
        for block, d in distinct_degree(gl, p, frob):
            for h in equal_degree(block, d, p, rng, frob):
                out.append((GFPoly(h, p), m))
    out.sort(key=lambda fm: (fm[0].sort_key(), fm[1]))
    return out


def is_irreducible(g: GFPoly) -> bool:
    """gcd(g, X^(p^i) - X) = 1 for i < deg g and X^(p^deg g) = X mod g."""
    p, f = g.p, _monic(list(g.coeffs), g.p)
    n = len(f) - 1
    if n < 1:
        return False
    h = [0, 1]
    for i in range(1, n + 1):
        h = _powmod(h, p, f, p)
        diff = _sub(h, [0, 1], p)
        if i < n and len(_gcd(f, diff, p)) > 1:
            return False
    return not _rem(_sub(h, [0, 1], p), f, p)


def degree_pattern(f: GFPoly, seed=0) -> CycleType:
    """Degrees of the irreducible factors of a separable polynomial."""
    if not f.is_squarefree():
        raise ValueError("ramified specialization: polynomial is not squarefree")
    if f.degree < 1:
        raise ValueError("constant polynomial has no degree pattern")
    p = f.p
    degs = []
    for block, d in distinct_degree(_monic(list(f.coeffs), p), p):
        degs += [d] * ((len(block) - 1) // d)
    return CycleType.of_lengths(degs)


def multiplicity_profile(f: GFPoly) -> dict[int, int]:
    """Multiplicity -> number of roots over the algebraic closure."""
    prof: dict[int, int] = {}
    for g, m in squarefree_decomposition(f):
        prof[m] = prof.get(m, 0) + g.degree
    return prof


def roots(f: GFPoly, seed=0) -> list[int]:
    """Distinct roots in F_p."""
    return sorted((-g.coeffs[0]) % f.p for g, _ in factor(f, seed) if g.degree == 1)


def is_square_mod(a: int, p: int) -> bool:
    a %= p
    return a == 0 or p == 2 or pow(a, (p - 1) // 2, p) == 1
