"""
Distinguished coset representatives.

``X_J`` is the set of ``w`` sending every simple root of ``J`` to a positive
root; it contains exactly one element of each left coset ``w W_J`` (the one
of minimal length). ``X_JK = X_J^{-1} & X_K`` holds one element per double
coset ``W_J w W_K``.

Two strategies produce ``X_J``: ``"brute"`` filters the whole group, while
``"direct"`` builds each representative from the set of values it places on
each block of ``composition_of(J)`` (it is increasing on every block).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod

from .errors import ContractViolation, CapacityError
from .weyl import (
    Permutation,
    act_on_root,
    all_permutations,
    check_brute_rank,
    check_rank,
    composition_of,
    inverse,
    length,
    simple_root,
    validate_subset,
)

__all__ = [
    "CosetRepSet", "DoubleCosetRepSet",
    "blocks_of", "min_coset_reps", "count_min_reps", "double_coset_reps",
    "intersection_subset", "is_min_rep", "in_parabolic", "parabolic_elements",
    "rep_order",
]

STRATEGIES = ("brute", "direct")


@dataclass(frozen=True)
class CosetRepSet:
    subset: frozenset
    reps: tuple

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __contains__(self, w):
        return w in set(self.reps)


@dataclass(frozen=True)
class DoubleCosetRepSet:
    left: frozenset
    right: frozenset
    reps: tuple

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)


def rep_order(w: Permutation):
    """Canonical sort key: length first, then the one-line word."""
    return (length(w), w.images)


def blocks_of(J, rank: int) -> list:
    """Consecutive position blocks of ``{1..n+1}`` whose symmetric groups make up W_J."""
    blocks = []
    start = 1
    for p in composition_of(J, rank):
        blocks.append(tuple(range(start, start + p)))
        start += p
    return blocks


def is_min_rep(w: Permutation, J) -> bool:
    return all(act_on_root(w, simple_root(k)).is_positive for k in J)


def in_parabolic(w: Permutation, J) -> bool:
    """Whether ``w`` lies in W_J, i.e. maps every block of J onto itself."""
    for block in blocks_of(J, w.rank):
        lo, hi = block[0], block[-1]
        if any(not lo <= w(i) <= hi for i in block):
            return False
    return True


def parabolic_elements(J, rank: int) -> list:
    """All elements of W_J (a direct product of symmetric groups on blocks)."""
    blocks = blocks_of(J, rank)
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = tuple(v for part in choice for v in part)
        out.append(Permutation(images))
    return sorted(out, key=rep_order)


def _direct_reps(J, rank: int) -> list:
    sizes = composition_of(J, rank)
    values = frozenset(range(1, rank + 2))
    out = []

    def fill(i, remaining, prefix):
        if i == len(sizes):
            out.append(Permutation(prefix))
            return
        for chosen in itertools.combinations(sorted(remaining), sizes[i]):
            fill(i + 1, remaining.difference(chosen), prefix + chosen)

    fill(0, values, ())
    return out


def min_coset_reps(J, rank: int, strategy: str = "direct") -> CosetRepSet:
    J = validate_subset(J, rank)
    if strategy == "brute":
        check_brute_rank(rank)
        reps = [w for w in all_permutations(rank) if is_min_rep(w, J)]
    elif strategy == "direct":
        check_rank(rank)
        reps = _direct_reps(J, rank)
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    return CosetRepSet(J, tuple(sorted(reps, key=rep_order)))


def count_min_reps(J, rank: int) -> int:
    """Index of W_J in W: the multinomial ``(n+1)! / prod(p_i!)``."""
    return factorial(rank + 1) // prod(factorial(p) for p in composition_of(J, rank))


def double_coset_reps(J, K, rank: int, strategy: str = "brute") -> DoubleCosetRepSet:
    J = validate_subset(J, rank)
    K = validate_subset(K, rank)
    if strategy == "brute":
        check_brute_rank(rank)
        candidates = all_permutations(rank)
    elif strategy == "direct":
        candidates = min_coset_reps(K, rank, "direct").reps
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    reps = [
        w for w in candidates
        if is_min_rep(w, K) and is_min_rep(inverse(w), J)
    ]
    return DoubleCosetRepSet(J, K, tuple(sorted(reps, key=rep_order)))


def intersection_subset(w: Permutation, J, K) -> frozenset:
    """``w^{-1}(J) & K``: the ``k`` in K with ``w(alpha_k)`` a simple root in J."""
    rank = w.rank
    J = validate_subset(J, rank)
    K = validate_subset(K, rank)
    if not (is_min_rep(w, K) and is_min_rep(inverse(w), J)):
        raise ContractViolation(f"{w} is not a distinguished ({sorted(J)}, {sorted(K)}) double coset rep")
    out = set()
    for k in K:
        image = act_on_root(w, simple_root(k)).simple_index
        if image is not None and image in J:
            out.add(k)
    return frozenset(out)
