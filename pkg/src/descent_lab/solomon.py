"""
Solomon's descent algebra of S_{n+1}.

The basis element ``x_J`` is the sum of the distinguished representatives
``X_J``; products expand as ``x_J x_K = sum_{L <= K} a_JKL x_L`` where
``a_JKL`` counts the ``w`` in ``X_JK`` with ``w^{-1}(J) & K == L``.

Structure constants are available from two independent routes:

``brute``
    Scan every permutation, keep the distinguished double coset
    representatives and read off ``L`` from the root action.
``matrix``
    Double cosets ``W_J \\ W / W_K`` of Young subgroups correspond to
    nonnegative integer matrices with row sums ``composition_of(J)`` and
    column sums ``composition_of(K)``. The composition of ``L`` is the list of
    nonzero entries read column by column, top to bottom
    (see :data:`MATRIX_CONVENTION`, fixed by :func:`calibrate_matrix_convention`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .exact import SparseElement, trace_form_matrix
from .weyl import (
    act_on_root,
    all_permutations,
    are_conjugate,
    check_brute_rank,
    check_rank,
    composition_of,
    enumerate_subsets,
    full_set,
    inverse,
    simple_root,
    subset_from_mask,
    subset_mask,
    subset_of_composition,
    validate_subset,
)

__all__ = [
    "MATRIX_CONVENTION", "SolomonElement", "StructureTable",
    "basis_element", "structure_constant", "structure_table", "pair_product",
    "multiply_basis", "multiply", "structure_table_via_matrices",
    "contingency_tables", "read_subset_from_matrix", "calibrate_matrix_convention",
    "radical_spanning_set", "solomon_gram_matrix", "resolve_strategy",
    "identity_element",
]

# (which subset supplies the row margins, order in which nonzero entries are read)
MATRIX_CONVENTION = ("left-rows", "column-major")
ORIENTATIONS = ("left-rows", "right-rows")
SCANS = ("column-major", "row-major")
# auto: brute force while S_{n+1} is tiny, matrix counting above
AUTO_BRUTE_MAX_RANK = 4


def resolve_strategy(strategy: str, rank: int) -> str:
    if strategy == "auto":
        return "brute" if rank <= AUTO_BRUTE_MAX_RANK else "matrix"
    if strategy not in ("brute", "matrix"):
        raise ValueError(f"unknown strategy {strategy!r}; expected brute, matrix or auto")
    return strategy


@dataclass(frozen=True, eq=True)
class SolomonElement(SparseElement):
    """Rational combination of the ``x_J``; keys are frozensets of root indices."""

    rank: int
    coeffs: dict

    def __post_init__(self):
        for J in self.coeffs:
            validate_subset(J, self.rank)
        super().__post_init__()

    def __mul__(self, other):
        if isinstance(other, SolomonElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def basis_element(J, rank: int) -> SolomonElement:
    return SolomonElement(rank, {validate_subset(J, rank): 1})


@dataclass(frozen=True)
class StructureTable:
    """Immutable ``(J, K) -> {L: a_JKL}`` for one rank."""

    rank: int
    strategy: str
    entries: Mapping

    def constant(self, J, K, L) -> int:
        return self.entries[frozenset(J), frozenset(K)].get(frozenset(L), 0)

    def product(self, J, K) -> Mapping:
        return self.entries[frozenset(J), frozenset(K)]

    def double_coset_count(self, J, K) -> int:
        return sum(self.product(J, K).values())

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return self.rank == other.rank and dict(self.entries) == dict(other.entries)

    def differences(self, other: "StructureTable") -> list:
        """``(J, K, L, mine, theirs)`` for every disagreeing constant."""
        out = []
        for key in sorted(set(self.entries) | set(other.entries),
                          key=lambda jk: (subset_mask(jk[0]), subset_mask(jk[1]))):
            mine = self.entries.get(key, {})
            theirs = other.entries.get(key, {})
            for L in sorted(set(mine) | set(theirs), key=subset_mask):
                if mine.get(L, 0) != theirs.get(L, 0):
                    out.append((key[0], key[1], L, mine.get(L, 0), theirs.get(L, 0)))
        return out


def _freeze(raw: dict) -> Mapping:
    return MappingProxyType({
        key: MappingProxyType(dict(sorted(counts.items(), key=lambda kv: subset_mask(kv[0]))))
        for key, counts in raw.items()
    })


# ---------------------------------------------------------------- brute force

@lru_cache(maxsize=None)
def _brute_table(rank: int) -> StructureTable:
    check_brute_rank(rank)
    counts = {(J, K): Counter() for J in range(1 << rank) for K in range(1 << rank)}
    for w in all_permutations(rank):
        w_inv = inverse(w)
        # k in K must have w(alpha_k) > 0; j in J must have w^{-1}(alpha_j) > 0
        k_ok = 0
        j_ok = 0
        lands_in = {}
        for k in range(1, rank + 1):
            image = act_on_root(w, simple_root(k))
            if image.is_positive:
                k_ok |= 1 << (k - 1)
                if image.simple_index is not None:
                    lands_in[k] = image.simple_index
            if act_on_root(w_inv, simple_root(k)).is_positive:
                j_ok |= 1 << (k - 1)
        for J in _submasks(j_ok):
            for K in _submasks(k_ok):
                L = 0
                for k, j in lands_in.items():
                    if K >> (k - 1) & 1 and J >> (j - 1) & 1:
                        L |= 1 << (k - 1)
                counts[J, K][L] += 1
    raw = {
        (subset_from_mask(J), subset_from_mask(K)):
            {subset_from_mask(L): c for L, c in ctr.items()}
        for (J, K), ctr in counts.items()
    }
    return StructureTable(rank, "brute", _freeze(raw))


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# ------------------------------------------------------------ matrix counting

def _column_vectors(total: int, caps: tuple):
    """Nonnegative vectors with the given sum, bounded entrywise by ``caps``."""
    if not caps:
        if total == 0:
            yield ()
        return
    room = sum(caps[1:])
    for first in range(min(total, caps[0]), max(0, total - room) - 1, -1):
        for rest in _column_vectors(total - first, caps[1:]):
            yield (first,) + rest


def contingency_tables(row_sums, col_sums):
    """Every nonnegative integer matrix with the given margins, as row tuples."""
    row_sums = tuple(row_sums)
    col_sums = tuple(col_sums)
    if sum(row_sums) != sum(col_sums):
        return

    def columns(j, remaining):
        if j == len(col_sums):
            if not any(remaining):
                yield ()
            return
        for col in _column_vectors(col_sums[j], remaining):
            left = tuple(r - c for r, c in zip(remaining, col))
            for rest in columns(j + 1, left):
                yield (col,) + rest

    for cols in columns(0, row_sums):
        yield tuple(tuple(col[i] for col in cols) for i in range(len(row_sums)))


def read_subset_from_matrix(matrix, convention=MATRIX_CONVENTION) -> frozenset:
    """The subset ``L`` whose composition is the nonzero entries in scan order.

    ``matrix`` is given with rows indexed by the left subset's blocks; the
    ``right-rows`` orientation transposes it first.
    """
    orientation, scan = convention
    rows = [list(r) for r in matrix]
    if orientation == "right-rows":
        rows = [list(c) for c in zip(*rows)] if rows else []
    elif orientation != "left-rows":
        raise ValueError(f"unknown orientation {orientation!r}")
    if scan == "row-major":
        seq = [x for r in rows for x in r if x]
    elif scan == "column-major":
        seq = [x for c in zip(*rows) for x in c if x] if rows else []
    else:
        raise ValueError(f"unknown scan order {scan!r}")
    return subset_of_composition(seq)


@lru_cache(maxsize=None)
def _column_major_counts(row_sums: tuple, col_sums: tuple) -> Counter:
    """Composition-of-L counts over all tables, using the fixed convention.

    Equivalent to enumerating :func:`contingency_tables` and reading each one
    column-major, but the suffix counts of each (column, remaining margins)
    state are shared.
    """

    @lru_cache(maxsize=None)
    def tail(j: int, remaining: tuple) -> tuple:
        if j == len(col_sums):
            return (((), 1),) if not any(remaining) else ()
        out = Counter()
        for col in _column_vectors(col_sums[j], remaining):
            head = tuple(x for x in col if x)
            left = tuple(r - c for r, c in zip(remaining, col))
            for rest, cnt in tail(j + 1, left):
                out[head + rest] += cnt
        return tuple(out.items())

    return Counter(dict(tail(0, row_sums)))


def pair_product(J, K, rank: int, strategy: str = "auto") -> Mapping:
    """``{L: a_JKL}`` for a single pair, without building the whole table."""
    J = validate_subset(J, rank)
    K = validate_subset(K, rank)
    strategy = resolve_strategy(strategy, rank)
    if strategy == "brute":
        return _brute_table(rank).product(J, K)
    return _matrix_pair(J, K, rank)


@lru_cache(maxsize=None)
def _matrix_pair(J: frozenset, K: frozenset, rank: int) -> Mapping:
    check_rank(rank)
    if MATRIX_CONVENTION != ("left-rows", "column-major"):
        raise AssertionError("the shared-suffix counter assumes left-rows, column-major")
    counts = _column_major_counts(composition_of(J, rank), composition_of(K, rank))
    out = {}
    for comp, c in counts.items():
        L = subset_of_composition(comp)
        out[L] = out.get(L, 0) + c
    return MappingProxyType(dict(sorted(out.items(), key=lambda kv: subset_mask(kv[0]))))


@lru_cache(maxsize=None)
def structure_table_via_matrices(rank: int) -> StructureTable:
    check_rank(rank)
    subsets = enumerate_subsets(rank)
    raw = {(J, K): dict(_matrix_pair(J, K, rank)) for J in subsets for K in subsets}
    return StructureTable(rank, "matrix", _freeze(raw))


def structure_table(rank: int, strategy: str = "auto") -> StructureTable:
    strategy = resolve_strategy(strategy, rank)
    if strategy == "brute":
        return _brute_table(rank)
    return structure_table_via_matrices(rank)


def calibrate_matrix_convention(rank: int = 3) -> list:
    """Conventions whose explicit table reading reproduces the brute-force constants."""
    brute = _brute_table(rank)
    subsets = enumerate_subsets(rank)
    matching = []
    for orientation in ORIENTATIONS:
        for scan in SCANS:
            ok = True
            for J in subsets:
                for K in subsets:
                    got = Counter()
                    for m in contingency_tables(composition_of(J, rank), composition_of(K, rank)):
                        got[read_subset_from_matrix(m, (orientation, scan))] += 1
                    if dict(got) != dict(brute.product(J, K)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                matching.append((orientation, scan))
    return matching


# ------------------------------------------------------------------- algebra

def structure_constant(J, K, L, rank: int, strategy: str = "brute") -> int:
    L = validate_subset(L, rank)
    return pair_product(J, K, rank, strategy).get(L, 0)


def multiply_basis(J, K, rank: int, strategy: str = "auto") -> SolomonElement:
    return SolomonElement(rank, dict(pair_product(J, K, rank, strategy)))


def multiply(a: SolomonElement, b: SolomonElement, strategy: str = "auto") -> SolomonElement:
    if a._check(b) is NotImplemented:
        raise TypeError("multiply expects two SolomonElements")
    out = {}
    for J, ca in a.coeffs.items():
        for K, cb in b.coeffs.items():
            for L, n in pair_product(J, K, a.rank, strategy).items():
                out[L] = out.get(L, 0) + ca * cb * n
    return SolomonElement(a.rank, out)


def identity_element(rank: int) -> SolomonElement:
    return basis_element(full_set(rank), rank)


def radical_spanning_set(rank: int) -> list:
    """``x_J - x_K`` for each unordered conjugate pair, in bitmask order."""
    subsets = enumerate_subsets(rank)
    out = []
    for a, J in enumerate(subsets):
        for K in subsets[a + 1:]:
            if are_conjugate(J, K, rank):
                out.append(basis_element(J, rank) - basis_element(K, rank))
    return out


def solomon_gram_matrix(rank: int, strategy: str = "auto") -> list:
    """Trace form of the Solomon algebra on the ``x_J`` basis (bitmask order)."""
    subsets = enumerate_subsets(rank)
    table = structure_table(rank, strategy)
    return trace_form_matrix(subsets, lambda a, b: table.product(a, b))

