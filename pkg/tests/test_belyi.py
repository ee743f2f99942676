from fractions import Fraction

import pytest

from psp62.belyi import (
    ProfileMismatch,
    RamificationProfile,
    verify_belyi,
    verify_delta,
    verify_family_branch_data,
    verify_square_root_structure,
)
from psp62.exact import UniPoly, discriminant_in_t, poly_gcd, squarefree_decomposition
from psp62.perm import CycleType

X = UniPoly.x()


@pytest.fixture(scope="module")
def belyi_pq(consts):
    return consts.belyi_p.expand_uni(), consts.belyi_q.expand_uni()


@pytest.fixture(scope="module")
def family(consts):
    return consts.family_p.expand_bi(), consts.family_q.expand_bi()


def test_belyi_profile(consts, belyi_pq):
    p, q = belyi_pq
    prof = verify_belyi(p, q, consts.belyi_scale)
    assert prof.degree == 72
    assert prof.as_dict() == {"0": "6^12", "1": "1^24.2^24", "inf": "2^6.4.8^7"}
    assert prof.riemann_hurwitz() == 142 and prof.genus() == 0


def test_belyi_infinity_fiber(belyi_pq):
    # X = oo has multiplicity deg p - deg q = 4
    p, q = belyi_pq
    assert p.degree - q.degree == 4
    assert [(int(g.degree), m) for g, m in squarefree_decomposition(q)] == [(6, 2), (7, 8)]


def test_belyi_wrong_scale_fails(belyi_pq):
    p, q = belyi_pq
    with pytest.raises(ProfileMismatch):
        verify_belyi(p, q, Fraction(-1, 104977))


def test_belyi_shared_factor_rejected():
    with pytest.raises(ValueError):
        verify_belyi((X - 1) ** 2, (X - 1) * (X + 1), Fraction(1))


def test_square_root_structure(consts, belyi_pq):
    p, q = belyi_pq
    w = verify_square_root_structure(p, q, consts.belyi_scale)
    assert w["scale_root"] == Fraction(1, 324)
    assert w["p_root"].degree == 36 and w["q_root"].degree == 34
    assert [m for _, m in w["p_root_factors"]] == [3]
    with pytest.raises(ValueError):
        verify_square_root_structure(p, q, -consts.belyi_scale)
    with pytest.raises(ValueError):
        verify_square_root_structure(p * X, q, consts.belyi_scale)


@pytest.mark.parametrize("a0", [1, 2, 3])
def test_family_branch_data(family, a0):
    P, Q = family
    prof, wit = verify_family_branch_data(P, Q, a0)
    assert prof.as_dict() == {"0": "3^12", "r1": "1^12.2^12", "r2": "1^12.2^12", "inf": "1^6.2.4^7"}
    assert prof.riemann_hurwitz() == 70
    assert wit["prime"] == (103 if a0 == 1 else 101)
    assert wit["branch_factor"].degree == 2 and wit["branch_factor_multiplicity"] == 12
    assert wit["t_zero_order"] == 24 and wit["disc_degree"] == 48


def test_family_degenerate_specialization(family):
    P, Q = family
    with pytest.raises(ValueError):
        verify_family_branch_data(P, Q, 0)


def test_delta_matches(consts, family):
    P, Q = family
    out = verify_delta(P, Q, consts.delta, [1, 2, 3])
    assert sorted(out) == [1, 2, 3]
    assert all(d.degree == 48 for d in out.values())


def test_delta_exponents(consts):
    assert consts.delta.exponents() == [732, 168, 154, 290, 24, 12]


def test_delta_mismatch_reports_coefficient(consts, family):
    P, Q = family
    bad = consts.delta
    orig = bad.prime_powers[2]
    try:
        bad.prime_powers[2] = orig + 2
        with pytest.raises(ProfileMismatch, match="coefficient of t\\^24"):
            verify_delta(P, Q, bad, [2])
    finally:
        bad.prime_powers[2] = orig


def test_delta_rejects_degenerate(consts, family):
    P, Q = family
    with pytest.raises(ValueError):
        verify_delta(P, Q, consts.delta, [Fraction(1, 512)])


def test_profile_degree_mismatch():
    prof = RamificationProfile(4)
    with pytest.raises(ProfileMismatch):
        prof.add("0", {2: 1})
    prof.add("0", {2: 2})
    assert prof.fibers["0"] == CycleType({2: 2}) and prof.ramification("0") == 2


def test_small_belyi_map():
    # X^3 has profile 3 | 1^3 ... over 0, 1, oo: X^3 = 0, X^3 = 1, X = oo
    prof = verify_belyi(X ** 3, UniPoly([1]), Fraction(1))
    assert prof.as_dict() == {"0": "3", "1": "1^3", "inf": "3"}
    assert poly_gcd(X ** 3, UniPoly([1])) == UniPoly([1])
    assert discriminant_in_t(X ** 3, UniPoly([1])).degree == 2
