"""
Permutation characters of S_{n+1} on cosets of Young subgroups, and the
parabolic table of marks.

A left coset ``d W_J`` is the same thing as an ordered set partition of
``{1..n+1}`` into blocks ``d(B_1), d(B_2), ...`` where ``B_i`` are the blocks
of J. A subgroup fixes the coset iff each of its orbits sits inside one block,
so both fixed-point counts (characters and marks) reduce to counting ways of
packing orbit sizes into block sizes. :func:`perm_character` and :func:`mark`
default to brute-force coset scans; ``strategy="combinatorial"`` uses the
packing count instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from collections import Counter
from math import factorial, prod
from typing import Optional

from .classes import canonical_representative, multiply_classes
from .cosets import in_parabolic, min_coset_reps, parabolic_elements
from .errors import RankMismatchError
from .exact import matrix_rank, determinant
from .solomon import structure_table
from .weyl import (
    Permutation,
    check_brute_rank,
    check_rank,
    composition_of,
    compose,
    cycle_type,
    enumerate_partitions,
    enumerate_subsets,
    inverse,
    validate_partition,
    validate_subset,
)

__all__ = [
    "ClassFunction", "MarksRow",
    "conjugacy_classes", "class_representative", "perm_character",
    "character_table", "mark", "marks_row", "marks_matrix", "orbit_count",
    "burnside_counterexample", "verify_burnside_iso",
    "character_counterexample", "verify_character_iso",
]

STRATEGIES = ("brute", "combinatorial")


@dataclass(frozen=True)
class ClassFunction:
    """Rational values on the conjugacy classes of S_{n+1}, keyed by cycle type."""

    rank: int
    values: dict

    def __post_init__(self):
        classes = set(enumerate_partitions(self.rank))
        if set(self.values) != classes:
            raise ValueError("a class function needs exactly one value per conjugacy class")
        object.__setattr__(self, "values", {k: Fraction(v) for k, v in self.values.items()})

    def _check(self, other):
        if not isinstance(other, ClassFunction):
            raise TypeError(f"expected ClassFunction, got {type(other).__name__}")
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.rank, {k: v + other.values[k] for k, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassFunction(self.rank, {k: v * other for k, v in self.values.items()})
        self._check(other)
        return ClassFunction(self.rank, {k: v * other.values[k] for k, v in self.values.items()})

    __rmul__ = __mul__

    def __getitem__(self, cycle_type):
        return self.values[tuple(cycle_type)]

    def row(self) -> list:
        return [self.values[lam] for lam in enumerate_partitions(self.rank)]

    @classmethod
    def zero(cls, rank: int) -> "ClassFunction":
        return cls(rank, {lam: 0 for lam in enumerate_partitions(rank)})


@dataclass(frozen=True)
class MarksRow:
    """Marks of every parabolic class on the action ``W / W_action``."""

    action: tuple
    values: dict


def _centraliser_order(lam) -> int:
    return prod(k ** m * factorial(m) for k, m in Counter(lam).items())


def conjugacy_classes(rank: int) -> list:
    """``(cycle type, class size)`` in canonical partition order."""
    check_rank(rank)
    total = factorial(rank + 1)
    return [(lam, total // _centraliser_order(lam)) for lam in enumerate_partitions(rank)]


def class_representative(lam, rank: int) -> Permutation:
    """Product of cycles on consecutive letters with lengths ``lam``."""
    lam = validate_partition(lam, rank)
    images = []
    start = 1
    for size in lam:
        images.extend(range(start + 1, start + size))
        images.append(start)
        start += size
    return Permutation(tuple(images))


@lru_cache(maxsize=None)
def _packings(orbits: tuple, blocks: tuple) -> int:
    """Ways to send each (labelled) orbit to a block so every block is filled exactly."""
    if not orbits:
        return 1 if not any(blocks) else 0
    first, rest = orbits[0], orbits[1:]
    total = 0
    for i, room in enumerate(blocks):
        if room >= first:
            total += _packings(rest, blocks[:i] + (room - first,) + blocks[i + 1:])
    return total


def _fixed_cosets(group_elements, J, rank: int) -> int:
    """Cosets ``d W_J`` with ``g d W_J = d W_J`` for every ``g`` given."""
    count = 0
    for d in min_coset_reps(J, rank, "direct"):
        d_inv = inverse(d)
        if all(in_parabolic(compose(d_inv, compose(g, d)), J) for g in group_elements):
            count += 1
    return count


@lru_cache(maxsize=None)
def _character(J: frozenset, rank: int, strategy: str) -> ClassFunction:
    values = {}
    for lam in enumerate_partitions(rank):
        if strategy == "brute":
            values[lam] = _fixed_cosets([class_representative(lam, rank)], J, rank)
        elif strategy == "combinatorial":
            values[lam] = _packings(lam, composition_of(J, rank))
        else:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    return ClassFunction(rank, values)


def perm_character(J, rank: int, strategy: str = "brute") -> ClassFunction:
    """Character of W on the left cosets of W_J."""
    J = validate_subset(J, rank)
    if strategy == "brute":
        check_brute_rank(rank)
    else:
        check_rank(rank)
    return _character(J, rank, strategy)


def character_table(rank: int, strategy: str = "brute") -> dict:
    """``lam -> chi_lam`` for the canonical representative of every class."""
    return {
        lam: perm_character(canonical_representative(lam, rank), rank, strategy)
        for lam in enumerate_partitions(rank)
    }


@lru_cache(maxsize=None)
def _mark(P: tuple, J: frozenset, rank: int, strategy: str) -> int:
    if strategy == "brute":
        Q = canonical_representative(P, rank)
        return _fixed_cosets(parabolic_elements(Q, rank), J, rank)
    if strategy == "combinatorial":
        return _packings(P, composition_of(J, rank))
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def mark(P, J, rank: int, strategy: str = "brute") -> int:
    """Number of cosets in ``W / W_J`` fixed by the whole parabolic ``W_Q``, Q of type P."""
    P = validate_partition(P, rank)
    J = validate_subset(J, rank)
    if strategy == "brute":
        check_brute_rank(rank)
    else:
        check_rank(rank)
    return _mark(P, J, rank, strategy)


def marks_row(action, rank: int, strategy: str = "brute") -> MarksRow:
    action = validate_partition(action, rank)
    J = canonical_representative(action, rank)
    return MarksRow(action, {P: mark(P, J, rank, strategy) for P in enumerate_partitions(rank)})


def marks_matrix(rank: int, strategy: str = "brute") -> list:
    """Rows: actions ``W/W_lam``; columns: parabolic classes P; canonical order both ways."""
    parts = enumerate_partitions(rank)
    return [[marks_row(lam, rank, strategy).values[P] for P in parts] for lam in parts]


def orbit_count(P, J, rank: int) -> Fraction:
    """Orbits of W_Q on ``W / W_J`` by averaging the permutation character over W_Q."""
    check_brute_rank(rank)
    Q = canonical_representative(P, rank)
    chi = perm_character(J, rank)
    elements = parabolic_elements(Q, rank)
    return sum((chi[cycle_type(g)] for g in elements), Fraction(0)) / len(elements)


def burnside_counterexample(rank: int, strategy: str = "brute") -> Optional[tuple]:
    """A failing ``(P, lam, mu, lhs, rhs)`` or ``("singular", det)``; ``None`` if all hold."""
    parts = enumerate_partitions(rank)
    table = marks_matrix(rank, strategy)
    marks = {(lam, P): table[i][j] for i, lam in enumerate(parts) for j, P in enumerate(parts)}
    for lam in parts:
        for mu in parts:
            product = multiply_classes(lam, mu, rank)
            for P in parts:
                lhs = marks[lam, P] * marks[mu, P]
                rhs = sum(c * marks[nu, P] for nu, c in product.coeffs.items())
                if lhs != rhs:
                    return (P, lam, mu, lhs, rhs)
    det = determinant(table)
    if det == 0:
        return ("singular", det)
    return None


def verify_burnside_iso(rank: int, strategy: str = "brute") -> bool:
    return burnside_counterexample(rank, strategy) is None


def character_counterexample(rank: int, strategy: str = "brute") -> Optional[tuple]:
    """A failing ``(J, K, lhs, rhs)`` or ``("dependent", rank)``; ``None`` if all hold."""
    table = structure_table(rank, "auto")
    subsets = enumerate_subsets(rank)
    chars = {J: perm_character(J, rank, strategy) for J in subsets}
    for J in subsets:
        for K in subsets:
            lhs = chars[J] * chars[K]
            rhs = ClassFunction.zero(rank)
            for L, c in table.product(J, K).items():
                rhs = rhs + chars[L] * c
            if lhs != rhs:
                return (J, K, lhs, rhs)
    rows = [chi.row() for chi in character_table(rank, strategy).values()]
    r = matrix_rank(rows)
    if r != len(rows):
        return ("dependent", r)
    return None


def verify_character_iso(rank: int, strategy: str = "brute") -> bool:
    return character_counterexample(rank, strategy) is None

