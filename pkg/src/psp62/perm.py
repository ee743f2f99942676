"""Permutation groups: cycle types, Schreier-Sims, blocks, enumeration and
conjugacy census.

Points are ``0..n-1`` internally and ``1..n`` in cycle notation.  Products
compose left to right: ``g * h`` applies ``g`` first, so
``(g * h)(i) == h(g(i))``.

Small objects (generators, strong generators, transversals) are tuples of
ints.  Whole-group work (enumeration, census, fixed-point sums) is done on
numpy arrays with one row per element; for a batch ``A`` of rows and a
permutation ``h``, the row-wise products are ``A * h == h[A]`` and
``h * A == A[:, h]``.
"""

from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np


class Permutation:
    """Immutable permutation of ``range(n)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _unchecked(cls, images: tuple) -> "Permutation":
        p = cls.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._unchecked(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``"(1, 2, 3)(4, 5)"``."""
        images = list(range(n))
        seen: set[int] = set()
        stripped = text.replace(" ", "")
        if stripped in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\d+(,\d+)*\))+", stripped):
            raise ValueError(f"malformed cycle notation: {text!r}")
        for body in re.findall(r"\(([^()]*)\)", stripped):
            pts = [int(s) - 1 for s in body.split(",")]
            for p in pts:
                if not 0 <= p < n:
                    raise ValueError(f"point {p + 1} outside 1..{n}")
                if p in seen:
                    raise ValueError(f"point {p + 1} repeated in cycle notation")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls._unchecked(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in permutation product")
        o = other.images
        return Permutation._unchecked(tuple(o[i] for i in self.images))

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._unchecked(tuple(inv))

    inverse = __invert__

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return (~self) ** (-e)
        out, base = Permutation.identity(self.degree), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def conj(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``."""
        return ~g * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def to_cycles(self) -> str:
        parts = [
            "(" + ", ".join(str(p + 1) for p in c) + ")"
            for c in self.cycles()
            if len(c) > 1
        ]
        return "".join(parts) or "()"

    def __repr__(self):
        return f"Permutation({self.to_cycles()}, n={self.degree})"

    def as_array(self) -> np.ndarray:
        return np.array(self.images, dtype=_dtype(self.degree))


def product(g: Permutation, h: Permutation) -> Permutation:
    return g * h


def inverse(g: Permutation) -> Permutation:
    return ~g


def _dtype(n: int):
    return np.uint8 if n <= 256 else np.uint16


# ---------------------------------------------------------------------------
# cycle types

class CycleType:
    """Multiset of cycle lengths, fixed points included."""

    __slots__ = ("counts",)

    def __init__(self, counts: dict[int, int]):
        self.counts = {int(k): int(v) for k, v in sorted(counts.items()) if v}
        if any(k < 1 or v < 0 for k, v in self.counts.items()):
            raise ValueError("invalid cycle type")

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse ``"1^6.2.4^7"`` style notation."""
        counts: Counter = Counter()
        for part in text.split("."):
            base, _, exp = part.partition("^")
            counts[int(base)] += int(exp) if exp else 1
        return cls(counts)

    @classmethod
    def of_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(Counter(lengths))

    @property
    def degree(self) -> int:
        return sum(k * v for k, v in self.counts.items())

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.counts == other.counts

    def __hash__(self):
        return hash(tuple(self.counts.items()))

    def __lt__(self, other):
        return tuple(self.counts.items()) < tuple(other.counts.items())

    def __str__(self):
        return ".".join(
            f"{k}^{v}" if v > 1 else f"{k}" for k, v in self.counts.items()
        )

    def __repr__(self):
        return f"CycleType({self})"


def cycle_type(g: Permutation) -> CycleType:
    return CycleType.of_lengths(len(c) for c in g.cycles())


def batch_cycle_lengths(rows: np.ndarray) -> np.ndarray:
    """For each row and point, the length of the cycle through that point."""
    n_rows, n = rows.shape
    ident = np.arange(n)
    lengths = np.zeros(rows.shape, dtype=np.int16)
    power = rows.astype(np.intp)
    k = 1
    while True:
        hit = (power == ident) & (lengths == 0)
        lengths[hit] = k
        if (lengths > 0).all():
            return lengths
        power = np.take_along_axis(rows, power, axis=1).astype(np.intp)
        k += 1
        if k > 10 ** 6:
            raise RuntimeError("cycle length search did not terminate")


def batch_cycle_types(rows: np.ndarray) -> np.ndarray:
    """Row ``r`` of the result counts the cycles of each length 0..n."""
    lengths = batch_cycle_lengths(rows)
    n = rows.shape[1]
    offs = np.arange(rows.shape[0])[:, None] * (n + 1)
    counts = np.bincount((lengths + offs).ravel(), minlength=rows.shape[0] * (n + 1))
    counts = counts.reshape(rows.shape[0], n + 1)
    counts[:, 1:] //= np.arange(1, n + 1)
    return counts


def cycle_type_from_counts(row: np.ndarray) -> CycleType:
    return CycleType({k: int(v) for k, v in enumerate(row) if k and v})


# ---------------------------------------------------------------------------
# orbits and blocks

def orbits(gens: Sequence[Permutation], n: int | None = None) -> list[list[int]]:
    """Orbit partition, each orbit sorted, orbits ordered by least point."""
    if n is None:
        n = gens[0].degree
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        for p in orb:
            for g in gens:
                q = g.images[p]
                if not seen[q]:
                    seen[q] = True
                    orb.append(q)
        out.append(sorted(orb))
    return out


def is_transitive(gens: Sequence[Permutation], n: int | None = None) -> bool:
    return len(orbits(gens, n)) == 1


def block_system(gens: Sequence[Permutation], seed: Iterable[int]) -> list[list[int]]:
    """Finest block system in which all of ``seed`` lies in one block
    (Atkinson's union-find refinement)."""
    n = gens[0].degree
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    seed = list(seed)
    queue = []
    for s in seed[1:]:
        ra, rb = find(seed[0]), find(s)
        if ra != rb:
            parent[rb] = ra
            queue.append((seed[0], s))
    while queue:
        a, b = queue.pop()
        for g in gens:
            ra, rb = find(g.images[a]), find(g.images[b])
            if ra != rb:
                parent[rb] = ra
                queue.append((g.images[a], g.images[b]))
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values())


def minimal_blocks(gens: Sequence[Permutation]) -> list[list[list[int]]]:
    """All distinct nontrivial block systems generated by a pair ``{0, j}``.

    Every minimal nontrivial block system arises this way; the list is
    sorted by block size.
    """
    n = gens[0].degree
    if not is_transitive(gens, n):
        raise ValueError("block systems need a transitive group")
    found = {}
    for j in range(1, n):
        bs = block_system(gens, [0, j])
        if len(bs) > 1:
            found[tuple(map(tuple, bs))] = bs
    return sorted(found.values(), key=lambda bs: (len(bs[0]), bs))


# ---------------------------------------------------------------------------
# Schreier-Sims

@dataclass
class _Level:
    point: int
    gens: list[Permutation]
    transversal: dict[int, Permutation] = field(default_factory=dict)
    # transversal[b] maps the base point to b


class StabilizerChain:
    """Base and strong generating set for ``<gens>``.

    Built by a seeded random Schreier-Sims phase followed by the
    deterministic Schreier-Sims completion, which checks every Schreier
    generator; the result is therefore exact regardless of the seed.
    """

    def __init__(self, gens: Sequence[Permutation], base: Sequence[int] = (),
                 seed: int = 0):
        gens = [g for g in gens if not g.is_identity()]
        self.n = gens[0].degree if gens else None
        self.gens = list(gens)
        if self.n is None:
            raise ValueError("need at least one nonidentity generator")
        self.levels: list[_Level] = []
        for b in base:
            lv = _Level(b, [])
            self._orbit(lv)
            self.levels.append(lv)
        self._build(seed)

    # -- construction -------------------------------------------------------
    def _new_base_point(self, g: Permutation) -> int:
        return next(i for i, j in enumerate(g.images) if i != j)

    def _orbit(self, level: _Level) -> None:
        b = level.point
        tr = {b: Permutation.identity(self.n)}
        queue = [b]
        for p in queue:
            u = tr[p]
            for s in level.gens:
                q = s.images[p]
                if q not in tr:
                    tr[q] = u * s
                    queue.append(q)
        level.transversal = tr

    def _add_strong(self, g: Permutation) -> None:
        """Add ``g`` as a strong generator, extending the base if ``g``
        fixes every current base point."""
        if all(g.images[lv.point] == lv.point for lv in self.levels):
            self.levels.append(_Level(self._new_base_point(g), []))
        for i, lv in enumerate(self.levels):
            if i and g.images[self.levels[i - 1].point] != self.levels[i - 1].point:
                break
            lv.gens.append(g)
            self._orbit(lv)

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through the chain from level ``start``; return the
        residue and the level where stripping stopped."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            b = g.images[lv.point]
            u = lv.transversal.get(b)
            if u is None:
                return g, i
            g = g * ~u
        return g, len(self.levels)

    def _build(self, seed: int) -> None:
        if not self.gens:
            return
        for g in self.gens:
            h, _ = self.sift(g)
            if not h.is_identity():
                self._add_strong(h)
        self._random_phase(random.Random(seed))
        self._complete()

    def _random_phase(self, rng: random.Random, patience: int = 20) -> None:
        # product replacement walk; sifting residues become strong generators
        state = list(self.gens) * (1 + 10 // len(self.gens))
        state = state[:max(10, len(self.gens))]
        acc = Permutation.identity(self.n)
        for _ in range(50):
            i, j = rng.sample(range(len(state)), 2)
            state[i] = state[i] * state[j]
        streak = 0
        while streak < patience:
            i, j = rng.sample(range(len(state)), 2)
            state[i] = state[i] * state[j]
            acc = acc * state[i]
            h, depth = self.sift(acc)
            if h.is_identity():
                streak += 1
            else:
                streak = 0
                self._add_strong(h)

    def _complete(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = None
            for b, u in list(lv.transversal.items()):
                for s in lv.gens:
                    v = lv.transversal[s.images[b]]
                    h = u * s * ~v
                    if h.is_identity():
                        continue
                    res, depth = self.sift(h, i + 1)
                    if not res.is_identity():
                        before = len(self.levels)
                        self._add_strong(res)
                        restart = max(depth, i + 1) if before == len(self.levels) \
                            else len(self.levels) - 1
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1

    # -- queries ------------------------------------------------------------
    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen, out = set(), []
        for lv in self.levels:
            for g in lv.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def transversal_sizes(self) -> list[int]:
        return [len(lv.transversal) for lv in self.levels]

    def order(self) -> int:
        return math.prod(self.transversal_sizes())

    def contains(self, g: Permutation) -> bool:
        if self.n is None:
            return g.is_identity()
        if g.degree != self.n:
            return False
        res, _ = self.sift(g)
        return res.is_identity()

    __contains__ = contains

    def stabilizer_order(self, depth: int) -> int:
        """Order of the pointwise stabilizer of the first ``depth`` base
        points."""
        return math.prod(self.transversal_sizes()[depth:])

    def random_element(self, rng: random.Random) -> Permutation:
        g = Permutation.identity(self.n)
        for lv in reversed(self.levels):
            g = g * lv.transversal[rng.choice(sorted(lv.transversal))]
        return g


def build_chain(gens: Sequence[Permutation], base: Sequence[int] = (),
                seed: int = 0) -> StabilizerChain:
    return StabilizerChain(gens, base=base, seed=seed)


# ---------------------------------------------------------------------------
# enumeration

DEFAULT_ENUMERATION_BOUND = 2_000_000


def enumerate_array(chain: StabilizerChain,
                    bound: int = DEFAULT_ENUMERATION_BOUND) -> np.ndarray:
    """All group elements as rows of an array, each exactly once.

    Every element factors uniquely as ``h * u`` with ``u`` in the top
    transversal and ``h`` in the stabilizer of the first base point; the
    traversal applies this level by level from the bottom of the chain.
    """
    order = chain.order()
    if order > bound:
        raise ValueError(f"group too large to enumerate ({order} > {bound})")
    n = chain.n
    dt = _dtype(n)
    elems = np.arange(n, dtype=dt)[None, :]
    for lv in reversed(chain.levels):
        us = [lv.transversal[b].as_array() for b in sorted(lv.transversal)]
        elems = np.concatenate([u[elems] for u in us], axis=0)
    return elems


def enumerate_elements(chain: StabilizerChain,
                       bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Permutation]:
    for row in enumerate_array(chain, bound):
        yield Permutation._unchecked(tuple(int(v) for v in row))


class ElementIndex:
    """Lookup from group elements (array rows) to their row index.

    An element is determined by its images of the base points, which are
    packed into one integer key.
    """

    def __init__(self, elems: np.ndarray, base: Sequence[int]):
        n = elems.shape[1]
        if n ** len(base) >= 2 ** 63:
            raise ValueError("base too long for packed keys")
        self.base = np.array(base, dtype=np.intp)
        self.weights = n ** np.arange(len(base), dtype=np.int64)
        keys = self.keys(elems)
        self.order = np.argsort(keys, kind="stable")
        self.sorted_keys = keys[self.order]
        if np.any(self.sorted_keys[1:] == self.sorted_keys[:-1]):
            raise ValueError("duplicate elements in enumeration")

    def keys(self, rows: np.ndarray) -> np.ndarray:
        return rows[:, self.base].astype(np.int64) @ self.weights

    def index(self, rows: np.ndarray) -> np.ndarray:
        """Row indices for ``rows``; raises if a row is not a group element
        (for rows known to be in the group this is exact)."""
        k = self.keys(rows)
        pos = np.searchsorted(self.sorted_keys, k)
        pos = np.minimum(pos, len(self.sorted_keys) - 1)
        if np.any(self.sorted_keys[pos] != k):
            raise KeyError("element not in enumerated group")
        return self.order[pos]


def batch_inverse(rows: np.ndarray) -> np.ndarray:
    inv = np.empty_like(rows)
    np.put_along_axis(inv, rows.astype(np.intp),
                      np.broadcast_to(np.arange(rows.shape[1], dtype=rows.dtype), rows.shape),
                      axis=1)
    return inv


def batch_conjugate(rows: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Row-wise ``g^-1 * r * g``."""
    ginv = np.argsort(g)
    return g[rows[:, ginv]]


# ---------------------------------------------------------------------------
# census

@dataclass
class ConjugacyClass:
    rep: Permutation
    size: int
    cycle_type: CycleType
    element_order: int
    label: int


@dataclass
class GroupCensus:
    """Conjugacy classes of an enumerated group.

    ``labels[i]`` is the class of row ``i`` of ``elements``.
    """
    order: int
    classes: list[ConjugacyClass]
    elements: np.ndarray
    labels: np.ndarray
    index: ElementIndex
    generators: list[Permutation]

    def classes_of_type(self, ct: CycleType) -> list[ConjugacyClass]:
        return [c for c in self.classes if c.cycle_type == ct]

    def cycle_types(self) -> set[CycleType]:
        return {c.cycle_type for c in self.classes}

    def members(self, cls: ConjugacyClass) -> np.ndarray:
        return self.elements[self.labels == cls.label]

    def class_of(self, g: Permutation) -> ConjugacyClass:
        i = int(self.index.index(g.as_array()[None, :])[0])
        return self.classes[int(self.labels[i])]


def conjugacy_census(chain: StabilizerChain,
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> GroupCensus:
    """Full class list by enumeration.

    Each unlabeled element seeds a breadth-first closure under conjugation
    by the generators.  Cycle type is checked to be constant on every class
    found, so classes refine the cycle-type buckets.
    """
    elems = enumerate_array(chain, bound)
    index = ElementIndex(elems, chain.base)
    counts = batch_cycle_types(elems)
    gens = [g.as_array() for g in chain.gens]
    labels = np.full(len(elems), -1, dtype=np.int32)
    stamp = np.zeros(len(elems), dtype=np.int64)
    classes: list[ConjugacyClass] = []
    # seed classes in a canonical order: smallest row among the unlabeled
    lex = np.lexsort(elems.T[::-1])
    cursor = 0
    while True:
        while cursor < len(lex) and labels[lex[cursor]] >= 0:
            cursor += 1
        if cursor == len(lex):
            break
        start = int(lex[cursor])
        lab = len(classes)
        labels[start] = lab
        frontier = elems[start:start + 1]
        while len(frontier):
            idx = np.concatenate([index.index(batch_conjugate(frontier, g)) for g in gens])
            idx = idx[labels[idx] < 0]
            # drop repeats: keep the last occurrence of each index
            pos = np.arange(len(idx))
            stamp[idx] = pos
            idx = idx[stamp[idx] == pos]
            labels[idx] = lab
            frontier = elems[idx]
        members = np.flatnonzero(labels == lab)
        if not (counts[members] == counts[start]).all():
            raise AssertionError("conjugacy class straddles cycle types")
        rep = Permutation._unchecked(tuple(int(v) for v in elems[start]))
        classes.append(ConjugacyClass(rep, len(members), cycle_type(rep), rep.order(), lab))
    if sum(c.size for c in classes) != len(elems):
        raise AssertionError("class sizes do not sum to the group order")
    return GroupCensus(len(elems), classes, elems, labels, index, list(chain.gens))


def fix_statistics(chain_or_elems) -> tuple[int, int]:
    """``(sum fix(g), sum fix(g)^2)`` over every element of the group."""
    elems = chain_or_elems if isinstance(chain_or_elems, np.ndarray) \
        else enumerate_array(chain_or_elems)
    fix = (elems == np.arange(elems.shape[1], dtype=elems.dtype)).sum(axis=1, dtype=np.int64)
    return int(fix.sum()), int((fix * fix).sum())


# ---------------------------------------------------------------------------
# alternating groups

def alternating_generators(n: int) -> list[Permutation]:
    """``(1 2 3)`` and an n-cycle or (n-1)-cycle of even parity."""
    three = Permutation.from_cycles("(1,2,3)", n)
    if n % 2:
        long = Permutation.from_cycles("(" + ",".join(map(str, range(1, n + 1))) + ")", n)
    else:
        long = Permutation.from_cycles("(" + ",".join(map(str, range(2, n + 1))) + ")", n)
    return [three, long]


def normal_closure_order(chain: StabilizerChain, g: Permutation) -> int:
    gens = [g]
    sub = StabilizerChain(gens)
    changed = True
    while changed:
        changed = False
        for s in list(sub.strong_generators) or [g]:
            for x in chain.gens:
                c = s.conj(x)
                if not sub.contains(c):
                    gens.append(c)
                    sub = StabilizerChain(gens)
                    changed = True
    return sub.order()


def min_faithful_degree_check(n: int) -> dict:
    """Smallest index of a proper subgroup of ``A_n`` for ``5 <= n <= 7``.

    The normal closure of every conjugacy class representative is computed;
    all of them being the whole group shows every proper subgroup has trivial
    core, so a subgroup of index ``k`` gives ``A_n`` inside ``S_k`` and needs
    ``|A_n| <= k!``.  The point stabilizer ``A_{n-1}`` realizes index ``n``.
    """
    if not 5 <= n <= 7:
        raise ValueError("supported range is 5 <= n <= 7")
    chain = StabilizerChain(alternating_generators(n))
    order = chain.order()
    census = conjugacy_census(chain)
    closures = {str(c.cycle_type): normal_closure_order(chain, c.rep)
                for c in census.classes if not c.rep.is_identity()}
    simple = all(v == order for v in closures.values())
    admissible = [k for k in range(2, n + 1) if order % k == 0 and math.factorial(k) >= order]
    stab = StabilizerChain(alternating_generators(n), base=[0])
    stab_index = stab.transversal_sizes()[0]
    if not simple:
        raise AssertionError(f"A_{n} has a proper normal subgroup")
    min_index = min(k for k in admissible) if admissible else None
    if min_index != n or stab_index != n:
        raise AssertionError(f"unexpected minimal index for A_{n}")
    return {
        "n": n,
        "order": order,
        "classes": len(census.classes),
        "normal_closure_orders": closures,
        "simple": simple,
        "point_stabilizer_index": stab_index,
        "min_index": min_index,
    }


def subgroup_indices_bruteforce(gens: Sequence[Permutation]) -> set[int]:
    """Indices of all subgroups generated by at most two elements.

    Quadratic in the group order; only for tiny groups (checks the
    normal-closure argument on ``A_5``, all of whose subgroups are
    2-generated).
    """
    chain = StabilizerChain(gens)
    order = chain.order()
    elems = list(enumerate_elements(chain))
    seen_orders = set()
    for i, a in enumerate(elems):
        for b in elems[i:]:
            seen_orders.add(_closure_order([a, b]))
    return {order // o for o in seen_orders}


def _closure_order(gens: list[Permutation]) -> int:
    n = gens[0].degree
    group = {Permutation.identity(n)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(group)
