"""
The class algebra spanned by conjugacy classes ``[x_J]`` of Solomon basis
elements.

Classes are labelled by partitions of ``n+1`` (``class_of(J)`` is the sorted
block sizes of J). A product of classes is evaluated on representatives,

    [x_J][x_K] = sum_{L <= K} a_JKL [x_L],

and :func:`verify_well_defined` checks that the answer never depends on the
representatives chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import RankMismatchError
from .exact import SparseElement, determinant, matrix_rank, trace_form_matrix
from .solomon import (
    SolomonElement,
    basis_element,
    multiply as solomon_multiply,
    pair_product,
    radical_spanning_set,
    solomon_gram_matrix,
    structure_table,
)
from .weyl import (
    check_brute_rank,
    check_rank,
    enumerate_partitions,
    enumerate_subsets,
    format_partition,
    format_subset,
    partition_of,
    subset_of_composition,
    validate_partition,
)

__all__ = [
    "ClassElement", "GramMatrix",
    "class_of", "canonical_representative", "class_basis_element",
    "multiply_classes", "class_table", "project",
    "well_defined_counterexample", "verify_well_defined",
    "commutativity_counterexample", "verify_commutative",
    "gram_matrix", "is_semisimple", "solomon_is_semisimple",
    "projection_matrix", "projection_kernel_dimension",
    "radical_null_vector_failures", "homomorphism_counterexample", "solomon_gram",
]


@dataclass(frozen=True, eq=True)
class ClassElement(SparseElement):
    """Rational combination of classes ``[x_lambda]``, keyed by partition tuples."""

    rank: int
    coeffs: dict

    def __post_init__(self):
        for lam in self.coeffs:
            validate_partition(lam, self.rank)
        super().__post_init__()

    def __mul__(self, other):
        if isinstance(other, ClassElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        if not self.coeffs:
            return "0"
        order = {lam: i for i, lam in enumerate(enumerate_partitions(self.rank))}
        terms = []
        for lam in sorted(self.coeffs, key=order.__getitem__):
            c = self.coeffs[lam]
            terms.append(f"{c}*{format_partition(lam)}")
        return " + ".join(terms)


def class_of(J, rank: int) -> tuple:
    return partition_of(J, rank)


def canonical_representative(lam, rank: int) -> frozenset:
    """Subset whose blocks are the parts of ``lam`` in decreasing order, left to right."""
    return subset_of_composition(validate_partition(lam, rank))


def class_basis_element(lam, rank: int) -> ClassElement:
    return ClassElement(rank, {validate_partition(lam, rank): 1})


def _collapse(product, rank: int) -> dict:
    out = {}
    for L, c in product.items():
        lam = class_of(L, rank)
        out[lam] = out.get(lam, 0) + c
    return out


@lru_cache(maxsize=None)
def _class_product(lam: tuple, mu: tuple, rank: int, strategy: str) -> ClassElement:
    J = canonical_representative(lam, rank)
    K = canonical_representative(mu, rank)
    return ClassElement(rank, _collapse(pair_product(J, K, rank, strategy), rank))


def multiply_classes(lam, mu, rank: int, strategy: str = "auto") -> ClassElement:
    check_rank(rank)
    lam = validate_partition(lam, rank)
    mu = validate_partition(mu, rank)
    return _class_product(lam, mu, rank, strategy)


def multiply(a: ClassElement, b: ClassElement, strategy: str = "auto") -> ClassElement:
    if a.rank != b.rank:
        raise RankMismatchError(f"rank {a.rank} vs rank {b.rank}")
    out = {}
    for lam, ca in a.coeffs.items():
        for mu, cb in b.coeffs.items():
            for nu, n in multiply_classes(lam, mu, a.rank, strategy).coeffs.items():
                out[nu] = out.get(nu, 0) + ca * cb * n
    return ClassElement(a.rank, out)


def class_table(rank: int, strategy: str = "auto") -> dict:
    """``(lam, mu) -> [x_lam][x_mu]`` over all partition pairs, canonical order."""
    parts = enumerate_partitions(rank)
    return {(lam, mu): multiply_classes(lam, mu, rank, strategy) for lam in parts for mu in parts}


def project(a: SolomonElement) -> ClassElement:
    """The linear map ``x_J -> [x_J]``."""
    out = {}
    for J, c in a.coeffs.items():
        lam = class_of(J, a.rank)
        out[lam] = out.get(lam, 0) + c
    return ClassElement(a.rank, out)


def well_defined_counterexample(rank: int) -> Optional[tuple]:
    """First ``(J, K, J', K', product, product')`` where representatives disagree.

    Every subset pair is evaluated, not just canonical representatives.
    """
    check_brute_rank(rank)
    table = structure_table(rank, "brute")
    seen = {}
    for J in enumerate_subsets(rank):
        for K in enumerate_subsets(rank):
            key = (class_of(J, rank), class_of(K, rank))
            value = _collapse(table.product(J, K), rank)
            if key not in seen:
                seen[key] = (J, K, value)
            elif seen[key][2] != value:
                J0, K0, first = seen[key]
                return (J0, K0, J, K, first, value)
    return None


def verify_well_defined(rank: int) -> bool:
    return well_defined_counterexample(rank) is None


def commutativity_counterexample(rank: int, strategy: str = "auto") -> Optional[tuple]:
    parts = enumerate_partitions(rank)
    for i, lam in enumerate(parts):
        for mu in parts[i + 1:]:
            left = multiply_classes(lam, mu, rank, strategy)
            right = multiply_classes(mu, lam, rank, strategy)
            if left != right:
                return (lam, mu, left, right)
    return None


def verify_commutative(rank: int, strategy: str = "auto") -> bool:
    return commutativity_counterexample(rank, strategy) is None


@dataclass(frozen=True)
class GramMatrix:
    rank: int
    order: tuple
    entries: tuple

    def determinant(self) -> Fraction:
        return determinant(self.entries)

    def labels(self) -> list:
        if self.order and isinstance(self.order[0], frozenset):
            return [format_subset(J) for J in self.order]
        return [format_partition(lam) for lam in self.order]


def gram_matrix(rank: int, strategy: str = "auto") -> GramMatrix:
    """Trace form ``(lam, mu) -> tr(left multiplication by [x_lam][x_mu])``."""
    parts = enumerate_partitions(rank)
    rows = trace_form_matrix(
        parts, lambda a, b: multiply_classes(a, b, rank, strategy).coeffs
    )
    return GramMatrix(rank, tuple(parts), tuple(tuple(r) for r in rows))


def solomon_gram(rank: int, strategy: str = "auto") -> GramMatrix:
    rows = solomon_gram_matrix(rank, strategy)
    return GramMatrix(rank, tuple(enumerate_subsets(rank)), tuple(tuple(r) for r in rows))


def is_semisimple(rank: int, strategy: str = "auto") -> bool:
    # characteristic zero: semisimple iff the trace form is nondegenerate
    return gram_matrix(rank, strategy).determinant() != 0


def solomon_is_semisimple(rank: int, strategy: str = "auto") -> bool:
    return solomon_gram(rank, strategy).determinant() != 0


def radical_null_vector_failures(rank: int, strategy: str = "auto") -> list:
    """Radical spanning elements that are *not* null vectors of the Solomon trace form."""
    gram = solomon_gram(rank, strategy)
    failures = []
    for element in radical_spanning_set(rank):
        v = element.vector(gram.order)
        if any(sum(g * x for g, x in zip(row, v)) != 0 for row in gram.entries):
            failures.append(element)
    return failures


def projection_matrix(rank: int) -> list:
    """Rows: partitions; columns: subsets; entry 1 where ``class_of(J) == lam``."""
    parts = enumerate_partitions(rank)
    subsets = enumerate_subsets(rank)
    return [[1 if class_of(J, rank) == lam else 0 for J in subsets] for lam in parts]


def projection_kernel_dimension(rank: int) -> int:
    return (1 << rank) - matrix_rank(projection_matrix(rank))


def homomorphism_counterexample(rank: int, strategy: str = "auto") -> Optional[tuple]:
    """First subset pair where ``project(x_J x_K) != project(x_J) project(x_K)``."""
    for J in enumerate_subsets(rank):
        for K in enumerate_subsets(rank):
            a = basis_element(J, rank)
            b = basis_element(K, rank)
            lhs = project(solomon_multiply(a, b, strategy))
            rhs = multiply(project(a), project(b), strategy)
            if lhs != rhs:
                return (J, K, lhs, rhs)
    return None

