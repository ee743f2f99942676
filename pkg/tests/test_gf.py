import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from psp62 import gf
from psp62.exact import UniPoly
from psp62.perm import CycleType

PRIMES = [2, 3, 5, 7, 37, 101]


def product(factors, p):
    out = gf.GFPoly([1], p)
    for g, m in factors:
        out = out * g ** m
    return out


def test_primality():
    assert [n for n in range(60) if gf.is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert gf.is_prime(2 ** 61 - 1) and not gf.is_prime(3215031751)
    assert gf.primes_above(100, 3) == [101, 103, 107]


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        gf.PrimeField(91)


def test_reduce_half():
    assert gf.reduce(UniPoly([Fraction(-1, 2), 0, 1]), 37) == gf.GFPoly([18, 0, 1], 37)


def test_reduce_bad_prime():
    with pytest.raises(ValueError, match="bad reduction prime"):
        gf.reduce(UniPoly([Fraction(1, 37), 1]), 37)


def test_belyi_p_mod_37_is_sixth_power(consts):
    red = gf.reduce(consts.belyi_p.expand_uni(), 37)
    assert red.degree == 72
    parts = gf.squarefree_decomposition(red)
    assert [m for _, m in parts] == [6] and parts[0][0].degree == 12


def test_x2_plus_1_mod_37():
    facs = gf.factor(gf.GFPoly([1, 0, 1], 37))
    assert set(facs) == {(gf.GFPoly([-6, 1], 37), 1), (gf.GFPoly([-31, 1], 37), 1)}


@pytest.mark.parametrize("p", [2, 3, 7, 37])
def test_fermat_polynomial_splits(p):
    f = gf.GFPoly([0, -1] + [0] * (p - 2) + [1], p)
    facs = gf.factor(f)
    assert len(facs) == p and all(g.degree == 1 and m == 1 for g, m in facs)


def test_factor_constant_raises():
    with pytest.raises(ValueError):
        gf.factor(gf.GFPoly([3], 5))


def test_degree_pattern_examples():
    p = 37
    lin = gf.GFPoly([-1, 1], p)
    quad = gf.GFPoly([2, 0, 1], p)          # -2 is a non-residue mod 37
    assert not gf.is_square_mod(-2, p)
    assert gf.degree_pattern(lin * quad) == CycleType({1: 1, 2: 1})
    with pytest.raises(ValueError, match="ramified specialization"):
        gf.degree_pattern(lin * lin)


def test_irreducible_degree_36():
    # X^36 - a over F_109 with a a primitive root: 108 = 3 * 36 and
    # 109 = 1 mod 4, so the binomial is irreducible
    p = 109
    a = next(a for a in range(2, p) if all(pow(a, 108 // r, p) != 1 for r in (2, 3)))
    f = gf.GFPoly([-a] + [0] * 35 + [1], p)
    assert gf.is_irreducible(f)
    assert gf.degree_pattern(f) == CycleType({36: 1})


def test_large_prime():
    p = 2 ** 61 - 1
    f = gf.GFPoly([5, 3, 0, 1], p) * gf.GFPoly([7, 1], p) * gf.GFPoly([1, 2, 3, 4, 1], p)
    facs = gf.factor(f, seed=1)
    assert product(facs, p) == f.monic()
    assert all(gf.is_irreducible(g) for g, _ in facs)


gf_polys = st.builds(
    lambda p, cs: gf.GFPoly(cs + [1], p),
    st.sampled_from(PRIMES),
    st.lists(st.integers(0, 10 ** 6), min_size=1, max_size=14),
)


@settings(max_examples=80, deadline=None)
@given(gf_polys, st.integers(0, 2 ** 32))
def test_factor_reconstructs_and_is_deterministic(f, seed):
    facs = gf.factor(f, seed=seed)
    assert product(facs, f.p) == f.monic()
    assert all(gf.is_irreducible(g) and g.coeffs[-1] == 1 for g, _ in facs)
    assert facs == gf.factor(f, seed=seed)


@settings(max_examples=60, deadline=None)
@given(gf_polys)
def test_degree_pattern_weights(f):
    if not f.is_squarefree():
        return
    assert gf.degree_pattern(f).degree == f.degree


@settings(max_examples=40, deadline=None)
@given(gf_polys, gf_polys)
def test_squarefree_reconstructs(f, g):
    if f.p != g.p:
        return
    h = f * g * g
    assert product(gf.squarefree_decomposition(h), h.p) == h.monic()


def test_roots():
    p = 101
    f = gf.GFPoly([-4, 0, 1], p) * gf.GFPoly([1, 0, 1], p)   # -1 is a square mod 101
    assert gf.roots(f) == sorted({2, p - 2, 10, p - 10})
    assert gf.roots(f, seed=random.Random(5)) == gf.roots(f)
