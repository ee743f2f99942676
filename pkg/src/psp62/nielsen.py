"""Nielsen classes and the braid action on them.

A tuple ``(s1, ..., sr)`` of group elements with ``s1 * ... * sr == 1``
(left-to-right products, as everywhere in the package) is acted on by the
braid generators

    Q_i : (s_i, s_{i+1}) -> (s_i s_{i+1} s_i^-1, s_i).

Tuples are taken modulo simultaneous conjugation.  A canonical form is
obtained by conjugating a chosen "anchor" entry (the first entry lying in
the anchor class) to a fixed representative and minimizing the remaining
entries over the centralizer of that representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .perm import (
    ConjugacyClass,
    GroupCensus,
    Permutation,
    StabilizerChain,
    batch_conjugate,
    batch_inverse,
)

Tuple = tuple[Permutation, ...]


def _perm(row) -> Permutation:
    return Permutation._unchecked(tuple(int(v) for v in row))


def tuple_product(t: Tuple) -> Permutation:
    out = t[0]
    for g in t[1:]:
        out = out * g
    return out


def braid_action(t: Tuple, i: int, inverse: bool = False) -> Tuple:
    """Apply ``Q_i`` (1-based) or its inverse."""
    if not 1 <= i < len(t):
        raise IndexError(f"braid index {i} out of range 1..{len(t) - 1}")
    a, b = t[i - 1], t[i]
    if inverse:
        new = (b, ~b * a * b)
    else:
        new = (a * b * ~a, a)
    return t[:i - 1] + new + t[i + 1:]


@dataclass(frozen=True)
class NielsenRep:
    entries: Tuple

    def classes(self, ctx: "NielsenContext") -> tuple[int, ...]:
        return tuple(ctx.census.class_of(g).label for g in self.entries)

    def to_cycles(self) -> list[str]:
        return [g.to_cycles() for g in self.entries]


class NielsenContext:
    """Everything needed to canonicalize tuples in one enumerated group."""

    def __init__(self, census: GroupCensus, anchor: ConjugacyClass):
        self.census = census
        self.anchor = anchor
        self.order = census.order
        elems = census.elements
        rep = anchor.rep.as_array()
        # centralizer: rows c with rep * c == c * rep
        comm = np.all(elems[:, rep] == rep[elems], axis=1)
        self.centralizer = elems[comm]
        self.centralizer_inv = batch_inverse(self.centralizer)
        self._conjugators = self._anchor_transversal()

    def _anchor_transversal(self) -> dict[bytes, np.ndarray]:
        """For each x in the anchor class, some u with rep^u == x."""
        rep = self.anchor.rep.as_array()
        n = len(rep)
        out = {rep.tobytes(): np.arange(n, dtype=rep.dtype)}
        frontier = [rep]
        gens = [g.as_array() for g in self.census.generators]
        while frontier:
            nxt = []
            for x in frontier:
                u = out[x.tobytes()]
                for s in gens:
                    y = s[x[np.argsort(s)]]
                    key = y.tobytes()
                    if key not in out:
                        out[key] = s[u]
                        nxt.append(y)
            frontier = nxt
        if len(out) != self.anchor.size:
            raise AssertionError("anchor class transversal has the wrong size")
        return out

    # -- canonical forms ----------------------------------------------------
    def anchor_position(self, t: Tuple) -> int:
        """First entry in the anchor class (a conjugation invariant)."""
        for i, g in enumerate(t):
            if self.census.class_of(g).label == self.anchor.label:
                return i
        raise ValueError("tuple has no entry in the anchor class")

    def canonicalize(self, t: Tuple) -> NielsenRep:
        """Canonical representative of the conjugation class of a generating
        tuple ``t``."""
        if not self.generates(t):
            raise ValueError("tuple does not generate the group")
        return self._canonical(t)

    def _canonical(self, t: Tuple) -> NielsenRep:
        k = self.anchor_position(t)
        u = self._conjugators[t[k].as_array().tobytes()]
        uinv = np.argsort(u)
        rows = [g.as_array() for g in t]
        # conjugate by u^-1 so the anchor entry becomes the representative
        rows = [uinv[r[u]] for r in rows]
        others = [i for i in range(len(t)) if i != k]
        conj = [np.take_along_axis(self.centralizer,
                                   r[self.centralizer_inv], axis=1)
                for r in (rows[i] for i in others)]
        stacked = np.concatenate(conj, axis=1) if conj else np.zeros((1, 0), dtype=np.uint8)
        best = np.lexsort(stacked.T[::-1])[0]
        out = list(rows)
        for j, i in enumerate(others):
            out[i] = conj[j][best]
        return NielsenRep(tuple(_perm(r) for r in out))

    def generates(self, t: Tuple) -> bool:
        return StabilizerChain(list(t)).order() == self.order

    def tuple_centralizer_order(self, rep: NielsenRep) -> int:
        """Elements of the anchor centralizer commuting with every entry."""
        k = self.anchor_position(rep.entries)
        mask = np.ones(len(self.centralizer), dtype=bool)
        for i, g in enumerate(rep.entries):
            if i == k:
                continue
            r = g.as_array()
            mask &= np.all(batch_conjugate(self.centralizer, r) == self.centralizer, axis=1)
        return int(mask.sum())


def validate_tuple(ctx: NielsenContext, t: Tuple, classes: list[ConjugacyClass]) -> None:
    """Raise with a diagnostic unless ``t`` lies in the straight Nielsen
    class of ``classes``: entries in the tagged classes, product one, and
    generation of the whole group."""
    if len(t) != len(classes):
        raise ValueError(f"tuple of length {len(t)} for a class vector of length {len(classes)}")
    for i, (g, cl) in enumerate(zip(t, classes), start=1):
        got = ctx.census.class_of(g)
        if got.label != cl.label:
            raise ValueError(f"entry {i} lies in a class of type {got.cycle_type}, "
                             f"expected {cl.cycle_type}")
    if not tuple_product(t).is_identity():
        raise ValueError("product of the entries is not the identity")
    if not ctx.generates(t):
        raise ValueError("tuple does not generate the group")


@dataclass
class TupleCount:
    raw: int
    generating: int
    length: Fraction
    representatives: list[NielsenRep]
    non_generating: list[NielsenRep]
    orbit_sizes: list[int]


def count_tuples(ctx: NielsenContext, classes: list[ConjugacyClass],
                 sigma1: Permutation | None = None) -> TupleCount:
    """Product-one tuples ``(s1, s2, s3, s4)`` with ``s1`` fixed, ``s_i`` in
    ``classes[i]``.

    ``s2`` and ``s3`` run over their classes; ``s4`` is forced and its class
    is looked up exactly.  Tuples are then grouped into conjugation classes
    under the centralizer of ``s1`` and the generating ones are counted.
    """
    if len(classes) != 4:
        raise ValueError("expected a class vector of length 4")
    census = ctx.census
    s1 = (sigma1 or classes[0].rep).as_array()
    if census.class_of(_perm(s1)).label != classes[0].label:
        raise ValueError("sigma1 is not in the first class")
    m2, m3 = census.members(classes[1]), census.members(classes[2])
    found = []
    for s2 in m2:
        a = s2[s1]                      # s1 * s2
        prod = np.take(m3, a, axis=1)   # rows: s1 * s2 * s3 = s3[a]
        s4 = batch_inverse(prod)
        lab = census.labels[census.index.index(s4)]
        for j in np.flatnonzero(lab == classes[3].label):
            found.append((s2, m3[j], s4[j]))
    raw = len(found)
    groups: dict[NielsenRep, int] = {}
    for s2, s3, s4 in found:
        rep = ctx._canonical((_perm(s1), _perm(s2), _perm(s3), _perm(s4)))
        groups[rep] = groups.get(rep, 0) + 1
    gen, non = [], []
    for rep in sorted(groups, key=lambda r: [g.images for g in r.entries]):
        (gen if ctx.generates(rep.entries) else non).append(rep)
    generating = sum(groups[r] for r in gen)
    length = Fraction(generating * classes[0].size, census.order)
    return TupleCount(raw, generating, length, gen, non, [groups[r] for r in gen])


def braid_closure(ctx: NielsenContext, reps: list[NielsenRep],
                  max_nodes: int = 100_000) -> dict[NielsenRep, set[NielsenRep]]:
    """Braid graph on canonical forms reachable from ``reps`` (all class
    orderings), as adjacency sets.  Every node is checked to have product
    one and to generate the group."""
    graph: dict[NielsenRep, set[NielsenRep]] = {}
    queue = list(reps)
    for r in reps:
        _check_node(ctx, r)
        graph.setdefault(r, set())
    while queue:
        r = queue.pop()
        for i in range(1, len(r.entries)):
            for inv in (False, True):
                nxt = ctx._canonical(braid_action(r.entries, i, inv))
                graph[r].add(nxt)
                if nxt not in graph:
                    if len(graph) >= max_nodes:
                        raise RuntimeError("braid closure exceeded node bound")
                    _check_node(ctx, nxt)
                    graph[nxt] = set()
                    queue.append(nxt)
    return graph


def _check_node(ctx: NielsenContext, r: NielsenRep) -> None:
    if not tuple_product(r.entries).is_identity():
        raise AssertionError("braid orbit left the product-one tuples")
    if not ctx.generates(r.entries):
        raise AssertionError("braid orbit reached a non-generating tuple")


def braid_orbits(ctx: NielsenContext, reps: list[NielsenRep]) -> tuple[list[list[int]], dict]:
    """Partition ``reps`` (indices) by braid orbit.

    Moves that permute the class order are followed through the other
    orderings of the class vector; two representatives with the same class
    order lie in one orbit of the braid subgroup preserving that order
    exactly when they are connected in the full braid graph.
    """
    graph = braid_closure(ctx, reps)
    comp: dict[NielsenRep, int] = {}
    for start in sorted(graph, key=lambda r: [g.images for g in r.entries]):
        if start in comp:
            continue
        cid = len(set(comp.values()))
        stack = [start]
        comp[start] = cid
        while stack:
            r = stack.pop()
            for s in graph[r]:
                if s not in comp:
                    comp[s] = cid
                    stack.append(s)
    orbits: dict[int, list[int]] = {}
    for i, r in enumerate(reps):
        orbits.setdefault(comp[r], []).append(i)
    parts = sorted(orbits.values())
    info = {
        "nodes": len(graph),
        "orderings": len({tuple(ctx.census.class_of(g).label for g in r.entries)
                          for r in graph}),
    }
    return parts, info
