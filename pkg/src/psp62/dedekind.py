"""Frobenius sampling and the reduction-side checks.

For a prime ``p`` of good reduction and ``t0`` in F_p with ``f(t0, X)``
separable mod ``p``, the factor degrees of ``f(t0, X)`` mod ``p`` form the
cycle type of a Frobenius element in the monodromy group.  Averaging the
number of linear factors (and its square) over many samples estimates the
number of orbits on points (and on ordered pairs).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import gf
from .exact import UniPoly, is_rational_square, squarefree_decomposition
from .perm import CycleType

DEFAULT_PRIME_COUNT = 25
DEFAULT_PER_PRIME = 40
DEFAULT_TOL_FIX = 0.15
DEFAULT_TOL_FIX2 = 0.35
MIN_SAMPLES = 200


@dataclass(frozen=True)
class SampleRecord:
    p: int
    t0: int
    pattern: CycleType | None
    accepted: bool

    @property
    def fixed_points(self) -> int:
        return self.pattern.counts.get(1, 0) if self.pattern else 0


@dataclass
class StatSummary:
    samples: int
    mean_fix: float
    mean_fix_squared: float
    unknown_type_count: int
    distinct_types: int
    tol_fix: float
    tol_fix2: float
    unknown_types: list[str] = field(default_factory=list)

    @property
    def transitive_ok(self) -> bool:
        return abs(self.mean_fix - 1) <= self.tol_fix

    @property
    def two_transitive_ok(self) -> bool:
        return abs(self.mean_fix_squared - 2) <= self.tol_fix2

    @property
    def passed(self) -> bool:
        return self.transitive_ok and self.two_transitive_ok and not self.unknown_type_count


class Pencil:
    """The polynomials ``p(X) - t q(X)`` over F_p for varying ``t``."""

    def __init__(self, p: UniPoly, q: UniPoly):
        self.p, self.q = p, q
        self.degree = int(max(p.degree, q.degree))
        self._cache: dict[int, tuple[gf.GFPoly, gf.GFPoly]] = {}

    def good_prime(self, prime: int) -> bool:
        """Prime exceeds twice the degree, divides no denominator, keeps the
        leading coefficient."""
        if prime <= 2 * self.degree or not gf.is_prime(prime):
            return False
        try:
            pb, qb = gf.reduce(self.p, prime), gf.reduce(self.q, prime)
        except ValueError:
            return False
        lead = self.p if self.p.degree >= self.q.degree else self.q
        if (pb if lead is self.p else qb).degree != lead.degree:
            return False
        self._cache[prime] = (pb, qb)
        return True

    def __call__(self, prime: int, t0: int) -> gf.GFPoly:
        if prime not in self._cache and not self.good_prime(prime):
            raise ValueError(f"bad reduction prime {prime}")
        pb, qb = self._cache[prime]
        return pb - qb * gf.GFPoly([t0], prime)


def default_primes(family: Pencil, count: int = DEFAULT_PRIME_COUNT,
                   start: int = 100) -> list[int]:
    out, n = [], start
    while len(out) < count:
        n += 1
        if gf.is_prime(n) and family.good_prime(n):
            out.append(n)
    return out


def _sample_seed(seed: int, p: int, t0: int) -> str:
    return f"{seed}:{p}:{t0}"


def sample_frobenius(family: Callable[[int, int], gf.GFPoly], primes: Iterable[int],
                     per_prime: int = DEFAULT_PER_PRIME, seed: int = 42,
                     good_prime: Callable[[int], bool] | None = None) -> list[SampleRecord]:
    """``per_prime`` accepted samples for each prime, t0 drawn without
    replacement from F_p in a seeded order; inseparable specializations are
    recorded as rejected and skipped."""
    primes = list(primes)
    if not primes:
        raise ValueError("no good primes supplied")
    records = []
    for p in primes:
        if good_prime is not None and not good_prime(p):
            raise ValueError(f"bad reduction prime {p}")
        order = list(range(p))
        random.Random(_sample_seed(seed, p, -1)).shuffle(order)
        accepted = 0
        for t0 in order:
            if accepted == per_prime:
                break
            f = family(p, t0)
            if f.degree < 1 or not f.is_squarefree():
                records.append(SampleRecord(p, t0, None, False))
                continue
            facs = gf.factor(f, random.Random(_sample_seed(seed, p, t0)))
            pattern = CycleType.of_lengths(g.degree for g, _ in facs)
            records.append(SampleRecord(p, t0, pattern, True))
            accepted += 1
    return records


def statistics(records: Iterable[SampleRecord], census_types: set[CycleType] | None = None,
               tol_fix: float = DEFAULT_TOL_FIX, tol_fix2: float = DEFAULT_TOL_FIX2,
               min_samples: int = MIN_SAMPLES) -> StatSummary:
    acc = [r for r in records if r.accepted]
    if len(acc) < min_samples:
        raise ValueError(f"insufficient samples: {len(acc)} < {min_samples}")
    fixes = [r.fixed_points for r in acc]
    unknown = [r.pattern for r in acc
               if census_types is not None and r.pattern not in census_types]
    return StatSummary(
        samples=len(acc),
        mean_fix=sum(fixes) / len(acc),
        mean_fix_squared=sum(f * f for f in fixes) / len(acc),
        unknown_type_count=len(unknown),
        distinct_types=len({r.pattern for r in acc}),
        tol_fix=tol_fix,
        tol_fix2=tol_fix2,
        unknown_types=sorted({str(u) for u in unknown}),
    )


# ---------------------------------------------------------------------------
# square discriminants

@dataclass
class SquareCheck:
    rational_square: bool
    reduction_square: bool
    multiplicities: dict[int, int]
    leading: Fraction
    prime: int


def square_disc_check(delta_t: UniPoly, p: int) -> SquareCheck:
    """Whether ``delta_t`` is a square in Q(t) and its reduction a square in
    F_p(t).  A polynomial is a square in the function field iff it is one in
    the polynomial ring: every multiplicity even and the leading coefficient
    a square."""
    mults = {m: int(g.degree) for g, m in squarefree_decomposition(delta_t)}
    over_q = all(m % 2 == 0 for m in mults) and is_rational_square(delta_t.lc)
    red = gf.reduce(delta_t, p)
    if red.degree != delta_t.degree:
        raise ValueError(f"bad reduction prime {p}: leading coefficient vanishes")
    over_p = all(m % 2 == 0 for _, m in gf.squarefree_decomposition(red)) \
        and gf.is_square_mod(red.coeffs[-1], p)
    return SquareCheck(over_q, over_p, mults, delta_t.lc, p)


def printed_exponents_even(exponents: Iterable[int]) -> bool:
    return all(e % 2 == 0 for e in exponents)


# ---------------------------------------------------------------------------
# index-63 consequences

def divisors_above_one(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def index63_consequences(model, alt_range: Iterable[int] = (5, 6, 7)) -> dict:
    """Index of a vector stabilizer in the 63-point action and the smallest
    proper-subgroup index of small alternating groups."""
    from .perm import min_faithful_degree_check

    stab_index = model.stabilizer_index(1)
    alt = {n: min_faithful_degree_check(n) for n in alt_range}
    ok = stab_index == 63 and all(v["min_index"] == n for n, v in alt.items())
    return {
        "stabilizer_index": stab_index,
        "stabilizer_order": model.chain63.order() // stab_index,
        "divisors": divisors_above_one(63),
        "alternating": alt,
        "passed": ok,
    }


def binomial_band(mean: float, var: float, n: int, z: float = 4.0) -> float:
    """Half-width of a z-sigma band for a sample mean."""
    return z * math.sqrt(var / n)
