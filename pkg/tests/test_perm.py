import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from psp62.perm import (
    CycleType,
    Permutation,
    StabilizerChain,
    alternating_generators,
    batch_cycle_types,
    block_system,
    conjugacy_census,
    cycle_type,
    cycle_type_from_counts,
    enumerate_array,
    enumerate_elements,
    fix_statistics,
    inverse,
    is_transitive,
    min_faithful_degree_check,
    minimal_blocks,
    orbits,
    product,
    subgroup_indices_bruteforce,
)


def P(text, n):
    return Permutation.from_cycles(text, n)


def sym_gens(n):
    return [P("(1,2)", n), P("(" + ",".join(map(str, range(1, n + 1))) + ")", n)]


perms = st.integers(1, 12).flatmap(lambda n: st.permutations(range(n))).map(Permutation)


def same_degree(k):
    return st.integers(1, 10).flatmap(
        lambda n: st.tuples(*[st.permutations(range(n)).map(Permutation)] * k))


# -- permutations --------------------------------------------------------------

def test_cycle_notation_and_errors():
    g = P("(1, 3, 2)(4, 5)", 6)
    assert g.images == (2, 0, 1, 4, 3, 5)
    assert g.to_cycles() == "(1, 3, 2)(4, 5)"
    with pytest.raises(ValueError):
        P("(1,2)(2,3)", 4)
    with pytest.raises(ValueError):
        P("(1,7)", 4)
    with pytest.raises(ValueError):
        P("1,2", 4)


def test_composition_is_left_first():
    a, b = P("(1,2)", 3), P("(2,3)", 3)
    # apply a, then b: 1 -> 2 -> 3
    assert (a * b)(0) == 2
    assert product(a, b) == a * b


def test_degree_mismatch_raises():
    with pytest.raises(ValueError):
        P("(1,2)", 3) * P("(1,2)", 4)


def test_identity_cycle_type():
    assert cycle_type(Permutation.identity(36)) == CycleType({1: 36})


def test_printed_triple_types(consts):
    assert cycle_type(consts.x) == CycleType({6: 12})
    assert cycle_type(consts.z) == CycleType({8: 7, 4: 1, 2: 6})
    assert cycle_type(consts.y) == CycleType({1: 24, 2: 24})
    assert (consts.x * consts.y * consts.z).is_identity()


def test_convention_check_is_symmetric(consts):
    # both composition orders give the same type for y: x^-1 z^-1 and
    # z^-1 x^-1 are conjugate, so this check cannot pin the convention
    x, z = consts.x, consts.z
    assert cycle_type(~x * ~z) == cycle_type(~z * ~x)


def test_cycle_type_parse_roundtrip():
    for text in ["3^12", "1^12.2^12", "1^6.2.4^7", "2^6.4.8^7"]:
        assert str(CycleType.parse(text)) == text
    with pytest.raises(ValueError):
        CycleType.parse("2^x")


@given(perms)
def test_inverse_and_identity(g):
    e = Permutation.identity(g.degree)
    assert g * ~g == e and inverse(g) * g == e
    assert e * g == g
    assert cycle_type(g).degree == g.degree


@given(same_degree(3))
def test_associativity_and_conjugation(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert cycle_type(a.conj(b)) == cycle_type(a)
    assert a.conj(b) == ~b * a * b


@given(perms, st.integers(-5, 12))
def test_power_and_order(g, e):
    assert g ** g.order() == Permutation.identity(g.degree)
    assert (g ** e) * (g ** -e) == Permutation.identity(g.degree)
    assert g.order() == math.lcm(*[len(c) for c in g.cycles()] or [1])


@settings(max_examples=30)
@given(st.lists(st.permutations(range(8)).map(Permutation), min_size=1, max_size=40))
def test_batch_cycle_types_agree(gs):
    rows = np.array([g.images for g in gs], dtype=np.uint8)
    counts = batch_cycle_types(rows)
    assert [cycle_type_from_counts(r) for r in counts] == [cycle_type(g) for g in gs]


# -- orbits and blocks -----------------------------------------------------------

def test_orbits_small():
    assert orbits([P("(1,2)", 4)]) == [[0, 1], [2], [3]]


def test_triple_transitive_with_2_blocks(consts):
    gens = [consts.x, consts.z]
    assert is_transitive(gens)
    two = [s for s in minimal_blocks(gens) if len(s) == 2]
    assert len(two) == 1 and sorted(map(len, two[0])) == [36, 36]


def test_cyclic_blocks():
    c4 = [P("(1,2,3,4)", 4)]
    assert block_system(c4, [0, 2]) == [[0, 2], [1, 3]]
    assert [[0, 2], [1, 3]] in minimal_blocks(c4)


def test_primitive_has_no_blocks():
    assert minimal_blocks(sym_gens(6)) == []


def test_minimal_blocks_intransitive_raises():
    with pytest.raises(ValueError):
        minimal_blocks([P("(1,2)", 4)])


# -- chains ------------------------------------------------------------------------

def test_klein_group():
    chain = StabilizerChain([P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)])
    assert chain.order() == 4
    assert len(list(enumerate_elements(chain))) == 4


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_symmetric_and_alternating_orders(n):
    assert StabilizerChain(sym_gens(n)).order() == math.factorial(n)
    if n >= 3:
        assert StabilizerChain(alternating_generators(n)).order() == math.factorial(n) // 2


def test_s5_enumeration_types():
    rows = enumerate_array(StabilizerChain(sym_gens(5)))
    assert len(rows) == 120
    assert len({tuple(r) for r in batch_cycle_types(rows)}) == 7


def test_enumeration_bound():
    with pytest.raises(ValueError, match="group too large to enumerate"):
        enumerate_array(StabilizerChain(sym_gens(9)), bound=1000)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_membership_consistent(seed):
    rng = random.Random(seed)
    chain = StabilizerChain(alternating_generators(7), seed=seed)
    assert chain.order() == 2520
    assert math.prod(chain.transversal_sizes()) == chain.order()
    g = chain.random_element(rng)
    assert chain.contains(g)
    assert not chain.contains(P("(1,2)", 7))


def test_triple_group_order_divides_wreath(consts):
    order = StabilizerChain([consts.x, consts.z], seed=1).order()
    assert (2 * 1451520 ** 2) % order == 0
    assert order == 2 * 1451520 ** 2


# -- census -----------------------------------------------------------------

def test_s3_census():
    census = conjugacy_census(StabilizerChain(sym_gens(3)))
    assert sorted(c.size for c in census.classes) == [1, 2, 3]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_symmetric_census_is_partitions(n):
    census = conjugacy_census(StabilizerChain(sym_gens(n)))
    parts = {4: 5, 5: 7, 6: 11}[n]
    assert len(census.classes) == parts
    for c in census.classes:
        fixed = c.cycle_type.counts
        centralizer = math.prod(k ** m * math.factorial(m) for k, m in fixed.items())
        assert c.size == math.factorial(n) // centralizer


def test_fix_statistics_s5():
    s1, s2 = fix_statistics(StabilizerChain(sym_gens(5)))
    assert s1 == 120 and s2 == 240      # 2-transitive


def test_alternating_min_index():
    for n in (5, 6, 7):
        assert min_faithful_degree_check(n)["min_index"] == n
    with pytest.raises(ValueError):
        min_faithful_degree_check(8)


def test_a5_bruteforce_oracle():
    # every subgroup of A5 is generated by two elements
    indices = subgroup_indices_bruteforce(alternating_generators(5))
    assert min(i for i in indices if i > 1) == 5
    assert indices == {1, 5, 6, 10, 12, 15, 20, 30, 60}
