"""Sp(6, 2) as 6x6 matrices over F_2, with its actions on the 63 nonzero
vectors and on the 36 quadratic forms of Arf invariant 0.

Vectors of F_2^6 are 6-bit integers.  Bits 0, 1, 2 are the coordinates on
e1, e2, e3 and bits 3, 4, 5 those on f1, f2, f3, so the symplectic form
pairs bit ``i`` with bit ``i + 3``.  A matrix is stored as the tuple of its
column images ``M e_j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .perm import (
    CycleType,
    GroupCensus,
    Permutation,
    StabilizerChain,
    conjugacy_census,
    fix_statistics,
    orbits,
)

DIM = 6
HALF = 3
NONZERO = tuple(range(1, 1 << DIM))
ORDER = 2 ** 9 * (2 ** 2 - 1) * (2 ** 4 - 1) * (2 ** 6 - 1)


def pairing(u: int, v: int) -> int:
    """Standard symplectic form B(u, v)."""
    lo = (1 << HALF) - 1
    x = ((u & lo) & (v >> HALF)) ^ ((u >> HALF) & (v & lo))
    return bin(x).count("1") & 1


def _bit(v: int, i: int) -> int:
    return (v >> i) & 1


class BinMatrix:
    """Invertible 6x6 matrix over F_2, stored by columns."""

    __slots__ = ("cols",)

    def __init__(self, cols):
        self.cols = tuple(int(c) for c in cols)
        if len(self.cols) != DIM:
            raise ValueError("expected 6 columns")

    @classmethod
    def identity(cls) -> "BinMatrix":
        return cls(1 << j for j in range(DIM))

    @classmethod
    def transvection(cls, w: int) -> "BinMatrix":
        """v -> v + B(v, w) w."""
        return cls((1 << j) ^ (w if pairing(1 << j, w) else 0) for j in range(DIM))

    def apply(self, v: int) -> int:
        out = 0
        j = 0
        while v:
            if v & 1:
                out ^= self.cols[j]
            v >>= 1
            j += 1
        return out

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        return BinMatrix(self.apply(c) for c in other.cols)

    def __eq__(self, other):
        return isinstance(other, BinMatrix) and self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def rows(self) -> list[list[int]]:
        return [[_bit(self.cols[j], i) for j in range(DIM)] for i in range(DIM)]

    def inverse(self) -> "BinMatrix":
        # v -> M^-1 v from the table of all images; 64 entries
        table = {self.apply(v): v for v in range(1 << DIM)}
        if len(table) != 1 << DIM:
            raise ValueError("singular matrix")
        return BinMatrix(table[1 << j] for j in range(DIM))

    def is_symplectic(self) -> bool:
        return gram(self) == GRAM


def _gram_matrix() -> list[list[int]]:
    return [[pairing(1 << i, 1 << j) for j in range(DIM)] for i in range(DIM)]


GRAM = _gram_matrix()


def gram(m: BinMatrix) -> list[list[int]]:
    """M^T J M over F_2."""
    r, j = np.array(m.rows()), np.array(GRAM)
    return ((r.T @ j @ r) % 2).tolist()


def _require_symplectic(m: BinMatrix) -> None:
    if not m.is_symplectic():
        raise ValueError("matrix does not preserve the symplectic form")


def build_generators(max_weight: int = 2) -> list[BinMatrix]:
    """Symplectic transvections generating Sp(6, 2).

    Starts from the transvections along every vector of Hamming weight at
    most ``max_weight`` (raising the bound if they fall short), then drops
    generators greedily, in order, while the 63-point image keeps the full
    order.
    """
    for weight in range(max_weight, DIM + 1):
        gens = [BinMatrix.transvection(w) for w in NONZERO
                if bin(w).count("1") <= weight]
        if _order63(gens) == ORDER:
            break
    else:
        raise AssertionError("transvections failed to generate Sp(6, 2)")
    i = 0
    while i < len(gens):
        trial = gens[:i] + gens[i + 1:]
        if _order63(trial) == ORDER:
            gens = trial
        else:
            i += 1
    return gens


def _order63(gens: list[BinMatrix]) -> int:
    return StabilizerChain([action_on_points(m) for m in gens]).order()


# ---------------------------------------------------------------------------
# action on nonzero vectors

def action_on_points(m: BinMatrix) -> Permutation:
    """Permutation of the 63 nonzero vectors (vector ``v`` is point
    ``v - 1``) under ``v -> M v``."""
    _require_symplectic(m)
    return Permutation(m.apply(v) - 1 for v in NONZERO)


# ---------------------------------------------------------------------------
# quadratic forms

@dataclass(frozen=True)
class QuadForm:
    """Quadratic form polarizing to the standard symplectic form.

    Such a form is determined by its values on the basis vectors, stored as
    the 6-bit integer ``diag``; the off-diagonal coefficients of the
    upper-triangular coefficient matrix equal ``B(b_i, b_j)``.
    """

    diag: int

    def matrix(self) -> list[list[int]]:
        return [[(_bit(self.diag, i) if i == j else (GRAM[i][j] if i < j else 0))
                 for j in range(DIM)] for i in range(DIM)]

    def __call__(self, v: int) -> int:
        val = bin(v & self.diag).count("1")
        for i in range(HALF):
            val += _bit(v, i) & _bit(v, i + HALF)
        return val & 1

    def arf(self, basis: list[tuple[int, int]] | None = None) -> int:
        """Sum of Q(e_i) Q(f_i) over a symplectic basis (standard by
        default)."""
        if basis is None:
            basis = [(1 << i, 1 << (i + HALF)) for i in range(HALF)]
        return sum(self(e) & self(f) for e, f in basis) & 1

    def polarizes_to_pairing(self) -> bool:
        return all(self(u ^ v) ^ self(u) ^ self(v) == pairing(u, v)
                   for u in range(1 << DIM) for v in range(1 << DIM))

    def transform(self, m: BinMatrix) -> "QuadForm":
        """The form ``Q o M^-1``."""
        minv = m.inverse()
        return QuadForm(sum(self(minv.apply(1 << j)) << j for j in range(DIM)))


def all_forms() -> list[QuadForm]:
    return [QuadForm(d) for d in range(1 << DIM)]


def forms_with_arf(value: int) -> list[QuadForm]:
    return [q for q in all_forms() if q.arf() == value]


ARF0_FORMS = tuple(forms_with_arf(0))
_FORM_INDEX = {q.diag: i for i, q in enumerate(ARF0_FORMS)}


def action_on_forms(m: BinMatrix) -> Permutation:
    """Permutation of the 36 Arf-invariant-0 forms, ordered by ``diag``,
    under ``Q -> Q o M^-1``."""
    _require_symplectic(m)
    return Permutation(_FORM_INDEX[q.transform(m).diag] for q in ARF0_FORMS)


def form_orbits(gens: list[BinMatrix]) -> list[list[int]]:
    """Orbits on all 64 forms (as ``diag`` values)."""
    perms = [Permutation(QuadForm(d).transform(m).diag for d in range(1 << DIM))
             for m in gens]
    return orbits(perms, 1 << DIM)


# ---------------------------------------------------------------------------
# assembled model

class SymplecticModel:
    """Generators of Sp(6, 2) and their images in both permutation actions.

    The census of the 36-point action is built lazily (it enumerates all
    1 451 520 elements).
    """

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.matrices = build_generators()
        self.gens63 = [action_on_points(m) for m in self.matrices]
        self.gens36 = [action_on_forms(m) for m in self.matrices]

    @cached_property
    def chain63(self) -> StabilizerChain:
        return StabilizerChain(self.gens63, seed=self.seed)

    @cached_property
    def chain36(self) -> StabilizerChain:
        return StabilizerChain(self.gens36, seed=self.seed)

    @cached_property
    def census(self) -> GroupCensus:
        return conjugacy_census(self.chain36)

    def stabilizer_index(self, vector: int = 1) -> int:
        """Index of the stabilizer of a nonzero vector, via a chain whose
        first base point is that vector."""
        chain = StabilizerChain(self.gens63, base=[vector - 1], seed=self.seed)
        return chain.order() // chain.stabilizer_order(1)

    def fix_statistics(self) -> tuple[int, int]:
        return fix_statistics(self.census.elements)


def locate_class_vector(census: GroupCensus, types: list[CycleType]):
    """The unique class of each requested cycle type."""
    out = []
    for ct in types:
        found = census.classes_of_type(ct)
        if len(found) != 1:
            raise ValueError(
                f"class vector mismatch with claimed types: {len(found)} classes of type {ct}")
        out.append(found[0])
    return out


def rational_class_check(census: GroupCensus, cls) -> bool:
    """Every power g^k with k coprime to the order of g stays in the class
    of g."""
    g = cls.rep
    for k in range(1, cls.element_order):
        if math.gcd(k, cls.element_order) == 1:
            if census.class_of(g ** k).label != cls.label:
                return False
    return True


def random_symplectic_bases(chain: StabilizerChain, model: SymplecticModel,
                            count: int, rng) -> list[list[tuple[int, int]]]:
    """Images of the standard symplectic basis under random group elements
    (read off the 63-point permutations)."""
    out = []
    for _ in range(count):
        g = chain.random_element(rng)
        img = lambda v: g.images[v - 1] + 1  # noqa: E731
        out.append([(img(1 << i), img(1 << (i + HALF))) for i in range(HALF)])
    return out


__all__ = [
    "ARF0_FORMS", "BinMatrix", "GRAM", "ORDER", "QuadForm", "SymplecticModel",
    "action_on_forms", "action_on_points", "all_forms", "build_generators",
    "form_orbits", "forms_with_arf", "gram", "locate_class_vector", "pairing",
    "rational_class_check", "random_symplectic_bases",
]
