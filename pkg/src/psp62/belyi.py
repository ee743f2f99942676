"""Ramification data of the Belyi map and of the one-parameter family.

A fiber of a rational map ``t = p(X)/q(X)`` of degree ``n`` over a finite
value ``c`` is read off from the root multiplicities of ``p - c q``; the
point ``X = oo`` lies over ``t = oo`` with multiplicity ``deg p - deg q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import gf
from .exact import (
    BiPoly,
    UniPoly,
    discriminant_in_t,
    is_rational_square,
    multiplicity_profile,
    poly_gcd,
    poly_sqrt,
    rational_sqrt,
    squarefree_decomposition,
)
from .perm import CycleType


class ProfileMismatch(AssertionError):
    pass


@dataclass
class RamificationProfile:
    degree: int
    fibers: dict[str, CycleType] = field(default_factory=dict)

    def add(self, point: str, mults: dict[int, int]) -> None:
        ct = CycleType(mults)
        if ct.degree != self.degree:
            raise ProfileMismatch(
                f"fiber over {point} has total multiplicity {ct.degree}, expected {self.degree}")
        self.fibers[point] = ct

    def ramification(self, point: str) -> int:
        ct = self.fibers[point]
        return self.degree - sum(ct.counts.values())

    def riemann_hurwitz(self) -> int:
        """Total ramification over all recorded branch points."""
        return sum(self.ramification(pt) for pt in self.fibers)

    def genus(self) -> Fraction:
        return Fraction(self.riemann_hurwitz() - 2 * self.degree + 2, 2)

    def as_dict(self) -> dict[str, str]:
        return {k: str(v) for k, v in self.fibers.items()}


def _with_infinity(mults: dict[int, int], inf_mult: int) -> dict[int, int]:
    out = dict(mults)
    if inf_mult > 0:
        out[inf_mult] = out.get(inf_mult, 0) + 1
    return out


def verify_belyi(p: UniPoly, q: UniPoly, scale: Fraction) -> RamificationProfile:
    """Fibers of ``scale * p / q`` over 0, 1 and infinity.

    The map has degree ``max(deg p, deg q)``; genus 0 forces the three
    ramification totals to add up to ``2 deg - 2``.
    """
    scale = Fraction(scale)
    if not scale:
        raise ValueError("scale must be nonzero")
    if poly_gcd(p, q).degree > 0:
        raise ValueError("p and q share a factor")
    n = int(max(p.degree, q.degree))
    prof = RamificationProfile(n)
    prof.add("0", _with_infinity(multiplicity_profile(p), int(q.degree - p.degree)))
    prof.add("1", _with_infinity(multiplicity_profile(p * scale - q), 0))
    prof.add("inf", _with_infinity(multiplicity_profile(q), int(p.degree - q.degree)))
    if prof.riemann_hurwitz() != 2 * n - 2:
        raise ProfileMismatch(
            f"Riemann-Hurwitz total {prof.riemann_hurwitz()} != {2 * n - 2}")
    return prof


def verify_square_root_structure(p: UniPoly, q: UniPoly, scale: Fraction) -> dict:
    """Certify ``scale * p / q == -(c * P / Q)^2`` with ``P, Q`` in Q[X]
    and ``c`` rational, so the square root of the Belyi map is
    ``sqrt(-1) * c * P / Q``."""
    scale = Fraction(scale)
    if scale >= 0 or not is_rational_square(-scale):
        raise ValueError("scale is not minus a rational square")
    c = rational_sqrt(-scale)
    P, Q = poly_sqrt(p), poly_sqrt(q)
    if P * P * (-c * c) != p * scale or Q * Q != q:
        raise ArithmeticError("square root certificate failed")
    return {
        "scale_root": c,
        "p_root": P,
        "q_root": Q,
        "p_root_factors": [(g, m) for g, m in squarefree_decomposition(P)],
        "q_root_factors": [(g, m) for g, m in squarefree_decomposition(Q)],
    }


# ---------------------------------------------------------------------------
# the family

@dataclass
class SplitPrime:
    p: int
    roots: list[int]
    quadratic: UniPoly


def nonzero_branch_factor(delta_t: UniPoly) -> tuple[UniPoly, int, int]:
    """From disc(t) = c * t^k * h(t)^m, return ``(h, m, k)`` with ``h``
    squarefree, coprime to ``t``; requires a single such factor."""
    k = 0
    while delta_t.coeffs and delta_t.coeffs[k] == 0:
        k += 1
    parts = [(g, m) for g, m in squarefree_decomposition(delta_t)
             if g != UniPoly([0, 1])]
    if len(parts) != 1:
        raise ProfileMismatch(
            f"discriminant has {len(parts)} multiplicity classes of nonzero branch points")
    g, m = parts[0]
    return g, m, k


def find_split_prime(p: UniPoly, q: UniPoly, h: UniPoly, delta_t: UniPoly,
                     start: int = 100) -> SplitPrime:
    """Smallest prime above ``start`` with good reduction at which the
    branch-point factor ``h`` has deg h distinct nonzero roots."""
    cand = start
    while True:
        cand += 1
        if not gf.is_prime(cand):
            continue
        try:
            pb, qb, hb = gf.reduce(p, cand), gf.reduce(q, cand), gf.reduce(h, cand)
            db = gf.reduce(delta_t, cand)
        except ValueError:
            continue
        if pb.degree != p.degree or qb.degree != q.degree or hb.degree != h.degree:
            continue
        # the discriminant keeps its shape c t^k h^m with h squarefree
        if db.degree != delta_t.degree or not hb.is_squarefree() or hb(0) == 0:
            continue
        rts = gf.roots(hb)
        if len(rts) == h.degree:
            return SplitPrime(cand, rts, h)


def verify_family_branch_data(P: BiPoly, Q: BiPoly, a0, delta_t: UniPoly | None = None,
                              prime_start: int = 100) -> tuple[RamificationProfile, dict]:
    """Fibers of ``t = p(a0, X) / q(a0, X)`` over t = 0, infinity and the
    nonzero roots r1, r2 of the discriminant.

    The fibers over r1, r2 are computed modulo the smallest good prime above
    ``prime_start`` at which both roots are rational.
    """
    p, q = P.specialize(a0), Q.specialize(a0)
    if poly_gcd(p, q).degree > 0:
        raise ValueError(f"bad specialization a = {a0}: p and q not coprime")
    n = int(max(p.degree, q.degree))
    if delta_t is None:
        delta_t = discriminant_in_t(p, q)
    h, m, k = nonzero_branch_factor(delta_t)
    prof = RamificationProfile(n)
    prof.add("0", _with_infinity(multiplicity_profile(p), int(q.degree - p.degree)))
    sp = find_split_prime(p, q, h, delta_t, prime_start)
    pb, qb = gf.reduce(p, sp.p), gf.reduce(q, sp.p)
    for i, r in enumerate(sp.roots, start=1):
        fib = pb - qb * gf.GFPoly([r], sp.p)
        prof.add(f"r{i}", _with_infinity(gf.multiplicity_profile(fib), 0))
    prof.add("inf", _with_infinity(multiplicity_profile(q), int(p.degree - q.degree)))
    if prof.riemann_hurwitz() != 2 * n - 2:
        raise ProfileMismatch(
            f"Riemann-Hurwitz total {prof.riemann_hurwitz()} != {2 * n - 2} at a = {a0}")
    witness = {
        "prime": sp.p,
        "roots_mod_p": sp.roots,
        "branch_factor": h,
        "branch_factor_multiplicity": m,
        "t_zero_order": k,
        "disc_degree": int(delta_t.degree),
    }
    return prof, witness


def verify_delta(P: BiPoly, Q: BiPoly, formula, a_values) -> dict:
    """Interpolated disc_X(p - t q) against the printed closed form, as
    polynomials in t, at each ``a0``."""
    out = {}
    for a0 in a_values:
        a0 = Fraction(a0)
        if a0 in (0, Fraction(1, 512)):
            raise ValueError(f"a = {a0} is a degenerate specialization")
        computed = discriminant_in_t(P.specialize(a0), Q.specialize(a0))
        printed = formula.at(a0)
        if computed != printed:
            diff = next(i for i in range(max(len(computed.coeffs), len(printed.coeffs)))
                        if (computed.coeffs[i:i + 1] or [0]) != (printed.coeffs[i:i + 1] or [0]))
            raise ProfileMismatch(f"discriminant differs at a = {a0} in coefficient of t^{diff}")
        out[a0] = computed
    return out
