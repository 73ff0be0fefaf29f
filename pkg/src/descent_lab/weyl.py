"""
The Weyl group of type A_n, realised as the symmetric group S_{n+1}.

Permutations are stored in one-line notation over ``1..n+1``; roots
``e_i - e_j`` are index pairs. Subsets of the simple roots are plain
``frozenset``s of indices ``k`` standing for ``alpha_k = e_k - e_{k+1}``.

>>> w = Permutation((2, 3, 1, 4))
>>> act_on_root(w, Root(1, 2))
Root(i=2, j=3)
>>> partition_of(frozenset({2, 3}), 3)
(3, 1)
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from .errors import (
    CapacityError,
    InvalidPartitionError,
    InvalidSubsetError,
    RankMismatchError,
)

__all__ = [
    "DEFAULT_MAX_RANK", "BRUTE_MAX_RANK",
    "Composition", "Partition", "SimpleRootSet",
    "Permutation", "Root",
    "max_rank", "check_rank", "check_brute_rank",
    "compose", "inverse", "act_on_root", "simple_root", "length", "descent_set",
    "subset_mask", "subset_from_mask", "validate_subset", "full_set",
    "composition_of", "subset_of_composition", "partition_of",
    "are_conjugate", "conjugating_witness", "cycle_type",
    "enumerate_subsets", "enumerate_partitions", "enumerate_compositions",
    "all_permutations", "format_subset", "format_partition", "parse_partition",
    "parse_subset", "validate_partition",
]

DEFAULT_MAX_RANK = 9
# S_7 has 5040 elements; everything that scans the whole group stops here.
BRUTE_MAX_RANK = 6

SimpleRootSet = frozenset  # frozenset[int] of indices in 1..n
Composition = tuple  # tuple[int, ...]
Partition = tuple  # tuple[int, ...], weakly decreasing


def max_rank() -> int:
    """Capacity bound, overridable through ``DESCENT_LAB_MAX_RANK``."""
    raw = os.environ.get("DESCENT_LAB_MAX_RANK")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_RANK
    try:
        value = int(raw)
    except ValueError:
        raise CapacityError(f"DESCENT_LAB_MAX_RANK is not an integer: {raw!r}")
    if value < 1:
        raise CapacityError(f"DESCENT_LAB_MAX_RANK must be positive, got {value}")
    return value


def check_rank(rank: int) -> int:
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise TypeError(f"rank must be an int, got {type(rank).__name__}")
    if rank < 1:
        raise CapacityError(f"rank must be at least 1, got {rank}")
    limit = max_rank()
    if rank > limit:
        raise CapacityError(f"rank {rank} exceeds the configured maximum {limit}")
    return rank


def check_brute_rank(rank: int) -> int:
    check_rank(rank)
    if rank > BRUTE_MAX_RANK:
        raise CapacityError(
            f"brute-force enumeration of S_{rank + 1} is limited to rank <= {BRUTE_MAX_RANK}"
        )
    return rank


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{1..n+1}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> "Permutation":
        return cls(tuple(range(1, rank + 2)))

    @property
    def rank(self) -> int:
        return len(self.images) - 1

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def __repr__(self):
        return f"Permutation({list(self.images)})"


class Root(NamedTuple):
    """The root ``e_i - e_j``."""

    i: int
    j: int

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    @property
    def simple_index(self) -> Optional[int]:
        """``k`` if this is the simple root ``alpha_k``, else ``None``."""
        return self.i if self.j == self.i + 1 else None


def simple_root(k: int) -> Root:
    return Root(k, k + 1)


def _same_rank(u: Permutation, v: Permutation) -> None:
    if len(u.images) != len(v.images):
        raise RankMismatchError(f"rank {u.rank} vs rank {v.rank}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``i -> u(v(i))``."""
    _same_rank(u, v)
    ui = u.images
    return Permutation(tuple(ui[x - 1] for x in v.images))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w.images)
    for i, v in enumerate(w.images, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def act_on_root(w: Permutation, r: Root) -> Root:
    size = len(w.images)
    if not (1 <= r.i <= size and 1 <= r.j <= size) or r.i == r.j:
        raise RankMismatchError(f"{r} is not a root of rank {w.rank}")
    return Root(w(r.i), w(r.j))


def length(w: Permutation) -> int:
    """Number of inversions of the one-line word."""
    images = w.images
    return sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )


def descent_set(w: Permutation) -> frozenset:
    images = w.images
    return frozenset(k for k in range(1, len(images)) if images[k - 1] > images[k])


def subset_mask(J: Iterable[int]) -> int:
    mask = 0
    for k in J:
        mask |= 1 << (k - 1)
    return mask


def subset_from_mask(mask: int) -> frozenset:
    return frozenset(k + 1 for k in range(mask.bit_length()) if mask >> k & 1)


def full_set(rank: int) -> frozenset:
    return frozenset(range(1, rank + 1))


def validate_subset(J, rank: int) -> frozenset:
    J = frozenset(J)
    for k in J:
        if not isinstance(k, int) or not 1 <= k <= rank:
            raise InvalidSubsetError(f"index {k!r} is not a simple root of rank {rank}")
    return J


def composition_of(J, rank: int) -> Composition:
    """Block sizes of ``{1..n+1}`` after joining ``i, i+1`` for every ``i`` in J."""
    J = validate_subset(J, rank)
    parts = []
    size = 1
    for k in range(1, rank + 1):
        if k in J:
            size += 1
        else:
            parts.append(size)
            size = 1
    parts.append(size)
    return tuple(parts)


def subset_of_composition(parts) -> frozenset:
    """Inverse of :func:`composition_of`."""
    if any(p < 1 for p in parts):
        raise InvalidPartitionError(f"composition parts must be positive: {parts}")
    J = set()
    start = 1
    for p in parts:
        J.update(range(start, start + p - 1))
        start += p
    return frozenset(J)


def partition_of(J, rank: int) -> Partition:
    return tuple(sorted(composition_of(J, rank), reverse=True))


def validate_partition(lam, rank: int) -> Partition:
    lam = tuple(lam)
    if any(not isinstance(p, int) or p < 1 for p in lam) or sum(lam) != rank + 1:
        raise InvalidPartitionError(f"{lam} is not a partition of {rank + 1}")
    return tuple(sorted(lam, reverse=True))


def are_conjugate(J, K, rank: int) -> bool:
    # In type A the W-orbit of J is determined by its block sizes; the
    # witness search below checks this exhaustively in the tests.
    return partition_of(J, rank) == partition_of(K, rank)


def conjugating_witness(J, K, rank: int) -> Optional[Permutation]:
    """Least ``w`` (lexicographically) with ``w(J) = K`` as root sets."""
    check_brute_rank(rank)
    J = validate_subset(J, rank)
    K = validate_subset(K, rank)
    if len(J) != len(K):
        return None
    target = {simple_root(k) for k in K}
    for w in all_permutations(rank):
        if {act_on_root(w, simple_root(k)) for k in J} == target:
            return w
    return None


def cycle_type(w: Permutation) -> Partition:
    seen = [False] * len(w.images)
    lengths = []
    for start in range(len(w.images)):
        if seen[start]:
            continue
        size = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = w.images[x] - 1
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def enumerate_subsets(rank: int) -> list:
    """All subsets of ``{1..n}``, ordered by their bitmask."""
    return [subset_from_mask(m) for m in range(1 << rank)]


@lru_cache(maxsize=None)
def _partitions(total: int, largest: int) -> tuple:
    if total == 0:
        return ((),)
    out = []
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(rank: int) -> list:
    """Partitions of ``n+1`` in reverse-lexicographic order."""
    return list(_partitions(rank + 1, rank + 1))


def enumerate_compositions(rank: int) -> list:
    return [composition_of(J, rank) for J in enumerate_subsets(rank)]


@lru_cache(maxsize=None)
def _all_permutations(rank: int) -> tuple:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, rank + 2)))


def all_permutations(rank: int) -> tuple:
    """Every element of S_{n+1}, in lexicographic order of the one-line word."""
    check_brute_rank(rank)
    return _all_permutations(rank)


def format_subset(J) -> str:
    return "{" + ",".join(str(k) for k in sorted(J)) + "}"


def parse_subset(text: str) -> frozenset:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InvalidSubsetError(f"cannot parse subset label {text!r}")
    body = body[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(int(x) for x in body.split(","))


def format_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise InvalidPartitionError(f"cannot parse partition label {text!r}")
    return tuple(int(x) for x in body[1:-1].split(",") if x.strip())
