"""Exact arithmetic over the rationals.

Rationals are :class:`fractions.Fraction` (always reduced, sign on the
numerator).  On top of them this module provides dense univariate
polynomials (:class:`UniPoly`), rational functions (:class:`RatFunc`) and
polynomials in ``X`` whose coefficients are rational functions of a parameter
``a`` (:class:`BiPoly`).

Resultants and gcds are computed over the integers after clearing
denominators: a primitive remainder sequence for the gcd and the
subresultant sequence for the resultant.  Both keep coefficient growth under
control for the degree-72 inputs used elsewhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

BigRational = Fraction

#: Degree of the zero polynomial.  Compares below every integer degree.
ZERO_DEGREE = -math.inf


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


class UniPoly:
    """Dense polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = tuple(
            _strip([Fraction(c) for c in coeffs])
        )

    # -- construction -------------------------------------------------------
    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-Fraction(r), 1])
        return out

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.to_string()

    def to_string(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", s))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {sign} {s}" for sign, s in terms[1:])

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = UniPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        db = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + db] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quo), UniPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self * (1 / self.lc)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def content_and_primitive(self) -> tuple[Fraction, list[int]]:
        """Return ``(c, P)`` with ``self == c * P``, ``P`` primitive in Z[X]
        and positive leading coefficient."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no primitive part")
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [v // g for v in ints]


# ---------------------------------------------------------------------------
# integer polynomial kernels (lists, lowest degree first)

def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(r) - len(b) + 1
    steps = 0
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        r.pop()
        _strip(r)
        steps += 1
    if steps < delta:
        f = lb ** (delta - steps)
        r = [v * f for v in r]
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [v // g for v in a]


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two nonzero integer polynomials (primitive PRS)."""
    a, b = _int_primitive(a), _int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, (_int_primitive(r) if r else [])
    return _int_primitive(a)


def _int_resultant(a: list[int], b: list[int]) -> int:
    """Resultant over Z by the subresultant algorithm (Sylvester sign
    convention)."""
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        raise ValueError("resultant of zero polynomial")
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da & 1 and db & 1:
            s = -s
    ca = reduce(math.gcd, a, 0)
    cb = reduce(math.gcd, b, 0)
    a = [v // ca for v in a]
    b = [v // cb for v in b]
    t = ca ** db * cb ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da & 1 and db & 1:
            s = -s
        r = _int_prem(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** delta
        b = [v // div for v in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            if da == 1:
                h = b[0]
            else:
                h = b[0] ** da // h ** (da - 1)
            return s * t * h


def _to_int_scaled(f: UniPoly) -> tuple[list[int], int]:
    den = reduce(_lcm, (c.denominator for c in f.coeffs), 1)
    return [int(c * den) for c in f.coeffs], den


# ---------------------------------------------------------------------------
# public operations

def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd of two polynomials, not both zero."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of zero polynomials")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    _, a = f.content_and_primitive()
    _, b = g.content_and_primitive()
    return UniPoly(_int_gcd(a, b)).monic()


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant of ``f`` and ``g`` with the Sylvester-determinant sign."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of zero polynomial")
    a, da = _to_int_scaled(f)
    b, db = _to_int_scaled(g)
    r = _int_resultant(a, b)
    # res(a/da, b/db) = da^-deg g * db^-deg f * res(a, b)
    return Fraction(r, da ** (len(b) - 1) * db ** (len(a) - 1))


def discriminant(f: UniPoly) -> Fraction:
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs a nonconstant polynomial")
    sign = -1 if (n * (n - 1) // 2) & 1 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def sylvester_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant as the determinant of the Sylvester matrix (slow; used as an
    independent check)."""
    m, n = int(f.degree), int(g.degree)
    size = m + n
    if size == 0:
        return Fraction(1)
    fh, gh = f.coeffs[::-1], g.coeffs[::-1]
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(fh) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(gh) + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for r in range(col + 1, size):
            c = rows[r][col] / p
            if c:
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[col])]
    return det


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm.  Returns monic squarefree pairwise coprime factors
    with multiplicities; ``f == lc(f) * prod(g**m)``."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero polynomial")
    if f.degree == 0:
        return []
    out = []
    fp = f.derivative()
    a0 = poly_gcd(f, fp)
    b = f.exact_div(a0).monic()
    c = fp.exact_div(a0) * (1 / f.lc)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def multiplicity_profile(f: UniPoly) -> dict[int, int]:
    """Map multiplicity -> number of roots (over the algebraic closure)."""
    prof: dict[int, int] = {}
    for g, m in squarefree_decomposition(f):
        prof[m] = prof.get(m, 0) + int(g.degree)
    return prof


def interpolate(points: Sequence[tuple]) -> UniPoly:
    """Newton interpolation through ``points`` (distinct abscissae)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("repeated abscissa in interpolation data")
    coef = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = UniPoly()
    for i in range(n - 1, -1, -1):
        out = out * UniPoly([-xs[i], 1]) + coef[i]
    return out


def discriminant_in_t(p: UniPoly, q: UniPoly, extra: int = 4) -> UniPoly:
    """disc_X(p(X) - t q(X)) as an exact polynomial in t.

    Sampled at integer t and interpolated.  Every coefficient of
    ``p - t q`` is linear in t, so the discriminant has t-degree at most
    ``2n - 2`` with ``n = deg_X``; ``extra`` surplus samples are re-checked
    against the interpolant.
    """
    n = int(max(p.degree, q.degree))
    if n < 1:
        raise ValueError("need a nonconstant family")
    if p.degree < q.degree:
        raise ValueError("degenerate specialization: deg q exceeds deg p")
    bound = 2 * n - 2
    need = bound + 1
    points = []
    t = 0
    while len(points) < need + extra:
        F = p - q * t
        if F.degree == n:
            points.append((Fraction(t), discriminant(F)))
        t += 1
    poly = interpolate(points[:need])
    for x, y in points[need:]:
        if poly(x) != y:
            raise ArithmeticError("interpolated discriminant failed re-check")
    return poly


def is_rational_square(c: Fraction) -> bool:
    c = Fraction(c)
    if c < 0:
        return False
    return all(math.isqrt(v) ** 2 == v for v in (c.numerator, c.denominator))


def rational_sqrt(c: Fraction) -> Fraction:
    if not is_rational_square(c):
        raise ValueError(f"{c} is not a rational square")
    return Fraction(math.isqrt(c.numerator), math.isqrt(c.denominator))


def poly_sqrt(f: UniPoly) -> UniPoly:
    """Exact square root in Q[X]; raises if ``f`` is not a square."""
    if f.is_zero():
        return UniPoly()
    lead = rational_sqrt(f.lc)
    root = UniPoly([lead])
    for g, m in squarefree_decomposition(f):
        if m % 2:
            raise ValueError("polynomial is not a perfect square")
        root = root * g ** (m // 2)
    if root * root != f:
        raise ArithmeticError("square root check failed")
    return root


# ---------------------------------------------------------------------------
# rational functions and polynomials over Q(a)

class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UniPoly) else UniPoly([num])
        den = UniPoly([1]) if den is None else (den if isinstance(den, UniPoly) else UniPoly([den]))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = UniPoly(), UniPoly([1])
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc
        self.num, self.den = num * (1 / c), den * (1 / c)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        if self.den == UniPoly([1]):
            return f"RatFunc({self.num.to_string('a')})"
        return f"RatFunc(({self.num.to_string('a')})/({self.den.to_string('a')}))"

    @staticmethod
    def _coerce(o) -> "RatFunc":
        return o if isinstance(o, RatFunc) else RatFunc(o)

    def __add__(self, o):
        o = self._coerce(o)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __mul__(self, o):
        o = self._coerce(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._coerce(o)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __call__(self, a0):
        d = self.den(Fraction(a0))
        if d == 0:
            raise ZeroDivisionError(f"a = {a0} is a pole")
        return self.num(Fraction(a0)) / d


class BiPoly:
    """Polynomial in X with coefficients in Q(a), lowest X-degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [c if isinstance(c, RatFunc) else RatFunc(c) for c in coeffs]
        self.coeffs: tuple[RatFunc, ...] = tuple(_strip(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, o: "BiPoly"):
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    def __mul__(self, o):
        if not isinstance(o, BiPoly):
            o = BiPoly([o])
        if not self.coeffs or not o.coeffs:
            return BiPoly([])
        out = [RatFunc(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(o.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = BiPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def specialize(self, a0) -> UniPoly:
        """Substitute ``a = a0``; the X-degree must not drop."""
        vals = [c(a0) for c in self.coeffs]
        out = UniPoly(vals)
        if out.degree != self.degree:
            raise ValueError(f"degenerate specialization at a = {a0}")
        return out
