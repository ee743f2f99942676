import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from psp62.nielsen import (
    NielsenContext,
    braid_action,
    braid_orbits,
    count_tuples,
    tuple_product,
    validate_tuple,
)
from psp62.perm import Permutation, StabilizerChain, conjugacy_census, cycle_type


def random_element(census, rng):
    return Permutation._unchecked(tuple(int(v) for v in census.elements[rng.randrange(census.order)]))


def test_length_two(nielsen, census, class_vector):
    ctx, res = nielsen
    c1 = class_vector[0]
    assert len(ctx.centralizer) == census.order // c1.size == 648
    assert res.raw == res.generating == 1296
    assert res.length == Fraction(2)
    assert len(res.representatives) == 2
    assert res.orbit_sizes == [648, 648]


def test_representatives_valid_and_distinct(nielsen, class_vector):
    ctx, res = nielsen
    c1, c2, c3 = class_vector
    for rep in res.representatives:
        validate_tuple(ctx, rep.entries, [c1, c2, c2, c3])
        assert ctx.tuple_centralizer_order(rep) == 1
    assert res.representatives[0] != res.representatives[1]


def test_wrong_class_tuple_rejected(nielsen, class_vector):
    ctx, res = nielsen
    c1, c2, c3 = class_vector
    rep = res.representatives[0].entries
    with pytest.raises(ValueError, match=r"entry 4 lies in a class of type 1\^6\.2\.4\^7, expected 3\^12"):
        validate_tuple(ctx, rep, [c1, c2, c2, c1])
    swapped = (rep[0], rep[2], rep[1], rep[3])
    with pytest.raises(ValueError, match="not the identity"):
        validate_tuple(ctx, swapped, [c1, c2, c2, c3])


def test_canonical_form_idempotent_and_conjugation_invariant(nielsen, census):
    ctx, res = nielsen
    rng = random.Random(11)
    for rep in res.representatives:
        assert ctx.canonicalize(rep.entries) == rep
        for _ in range(100):
            g = random_element(census, rng)
            moved = tuple(s.conj(g) for s in rep.entries)
            assert ctx._canonical(moved) == rep


def test_canonicalize_rejects_non_generating(nielsen, class_vector):
    ctx, _ = nielsen
    g = class_vector[1].rep
    e = Permutation.identity(36)
    with pytest.raises(ValueError, match="does not generate"):
        ctx.canonicalize((class_vector[0].rep, g, g, e))


def test_count_invariant_under_conjugate_sigma1(nielsen, census, class_vector):
    ctx, res = nielsen
    c1, c2, c3 = class_vector
    rng = random.Random(5)
    g = random_element(census, rng)
    other = count_tuples(ctx, [c1, c2, c2, c3], sigma1=c1.rep.conj(g))
    assert (other.raw, other.generating, other.length) == (res.raw, res.generating, res.length)


def test_sigma1_outside_class_rejected(nielsen, class_vector):
    ctx, _ = nielsen
    c1, c2, c3 = class_vector
    with pytest.raises(ValueError):
        count_tuples(ctx, [c1, c2, c2, c3], sigma1=c2.rep)


def test_braid_single_orbit(nielsen):
    ctx, res = nielsen
    parts, info = braid_orbits(ctx, res.representatives)
    assert parts == [[0, 1]]
    assert info["orderings"] == 12
    # independent of the order in which representatives are supplied
    parts_rev, _ = braid_orbits(ctx, res.representatives[::-1])
    assert parts_rev == [[0, 1]]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 3))
def test_braid_action_laws(seed, i):
    rng = random.Random(seed)
    n = 7
    t = [Permutation(rng.sample(range(n), n)) for _ in range(3)]
    t.append(~tuple_product(tuple(t)))
    t = tuple(t)
    moved = braid_action(t, i)
    assert tuple_product(moved).is_identity()
    assert braid_action(moved, i, inverse=True) == t
    assert braid_action(braid_action(t, i, inverse=True), i) == t
    # braid relation Q1 Q2 Q1 = Q2 Q1 Q2
    lhs = braid_action(braid_action(braid_action(t, 1), 2), 1)
    rhs = braid_action(braid_action(braid_action(t, 2), 1), 2)
    assert lhs == rhs
    # Q2 preserves the multiset of cycle types of entries 2, 3
    m2 = braid_action(t, 2)
    assert sorted(map(str, map(cycle_type, m2[1:3]))) == sorted(map(str, map(cycle_type, t[1:3])))


def test_braid_index_out_of_range():
    t = tuple(Permutation.identity(3) for _ in range(4))
    with pytest.raises(IndexError):
        braid_action(t, 4)
    with pytest.raises(IndexError):
        braid_action(t, 0)


def test_impossible_class_vector_counts_zero():
    # S4: three transpositions and a 3-cycle multiply to an odd permutation
    gens = [Permutation.from_cycles("(1,2)", 4), Permutation.from_cycles("(1,2,3,4)", 4)]
    census = conjugacy_census(StabilizerChain(gens))
    trans = next(c for c in census.classes if str(c.cycle_type) == "1^2.2")
    three = next(c for c in census.classes if str(c.cycle_type) == "1.3")
    ctx = NielsenContext(census, three)
    res = count_tuples(ctx, [three, trans, trans, trans])
    assert res.raw == 0 and res.length == 0


def test_abelian_singleton_orbit():
    # C2 = <h>: the tuple (h, h, h, h) is fixed by every braid generator
    h = Permutation.from_cycles("(1,2)", 2)
    census = conjugacy_census(StabilizerChain([h]))
    ctx = NielsenContext(census, census.class_of(h))
    rep = ctx.canonicalize((h, h, h, h))
    parts, info = braid_orbits(ctx, [rep])
    assert parts == [[0]]
    assert info["nodes"] == 1
