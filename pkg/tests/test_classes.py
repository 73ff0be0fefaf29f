import itertools
from fractions import Fraction

import pytest

from descent_lab.classes import (
    ClassElement,
    canonical_representative,
    class_basis_element,
    class_of,
    class_table,
    gram_matrix,
    homomorphism_counterexample,
    is_semisimple,
    multiply,
    multiply_classes,
    project,
    projection_kernel_dimension,
    radical_null_vector_failures,
    solomon_gram,
    solomon_is_semisimple,
    verify_commutative,
    verify_well_defined,
)
from descent_lab.errors import InvalidPartitionError
from descent_lab.exact import determinant, matrix_rank, null_space
from descent_lab.solomon import basis_element, radical_spanning_set
from descent_lab.weyl import enumerate_partitions, enumerate_subsets, full_set

E = frozenset()
ONES = (1, 1, 1, 1)


def test_class_of_examples():
    assert class_of(full_set(3), 3) == (4,)
    assert class_of({1}, 3) == class_of({2}, 3) == class_of({3}, 3) == (2, 1, 1)
    assert class_of({1, 3}, 3) == (2, 2)


def test_canonical_representative():
    assert canonical_representative((4,), 3) == full_set(3)
    assert canonical_representative(ONES, 3) == E
    assert canonical_representative((3, 1), 3) == {1, 2}
    for rank in range(1, 6):
        for lam in enumerate_partitions(rank):
            assert class_of(canonical_representative(lam, rank), rank) == lam
    with pytest.raises(InvalidPartitionError):
        canonical_representative((3, 2), 3)


def test_multiply_classes_examples():
    for mu in enumerate_partitions(3):
        assert multiply_classes((4,), mu, 3) == class_basis_element(mu, 3)
    assert multiply_classes((3, 1), (3, 1), 3) == ClassElement(3, {(3, 1): 1, (2, 1, 1): 1})
    assert multiply_classes((2, 1, 1), (2, 1, 1), 3) == ClassElement(3, {(2, 1, 1): 2, ONES: 5})


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_well_defined(rank):
    assert verify_well_defined(rank)


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_commutative(rank):
    assert verify_commutative(rank)


def test_symmetric_cells_rank3():
    expected = ClassElement(3, {(2, 1, 1): 2})
    assert multiply_classes((3, 1), (2, 2), 3) == expected
    assert multiply_classes((2, 2), (3, 1), 3) == expected


@pytest.mark.parametrize("rank", range(1, 6))
def test_identity_and_dimension(rank):
    parts = enumerate_partitions(rank)
    one = (rank + 1,)
    for lam in parts:
        unit = class_basis_element(lam, rank)
        assert multiply_classes(one, lam, rank) == unit == multiply_classes(lam, one, rank)
    assert len(parts) == len({class_of(J, rank) for J in enumerate_subsets(rank)})


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_class_associativity(rank):
    parts = enumerate_partitions(rank)
    for a, b, c in itertools.product(parts, repeat=3):
        A, B, C = (class_basis_element(p, rank) for p in (a, b, c))
        assert multiply(multiply(A, B), C) == multiply(A, multiply(B, C))


@pytest.mark.parametrize("rank", [2, 3, 4, 5])
def test_brute_and_matrix_class_tables_agree(rank):
    assert class_table(rank, "brute") == class_table(rank, "matrix")


def test_project_examples():
    assert project(basis_element(full_set(3), 3)) == class_basis_element((4,), 3)
    assert project(basis_element({1}, 3) - basis_element({3}, 3)).is_zero()
    assert projection_kernel_dimension(3) == 3


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_projection_is_homomorphism(rank):
    assert homomorphism_counterexample(rank) is None


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_kernel_is_radical_span(rank):
    subsets = enumerate_subsets(rank)
    span = radical_spanning_set(rank)
    dim = projection_kernel_dimension(rank)
    assert dim == 2 ** rank - len(enumerate_partitions(rank))
    span_rank = matrix_rank([e.vector(subsets) for e in span]) if span else 0
    assert span_rank == dim
    assert all(project(e).is_zero() for e in span)


def _brute_gram(rank):
    """Trace form computed from explicit left-multiplication matrices."""
    parts = enumerate_partitions(rank)
    basis = {p: class_basis_element(p, rank) for p in parts}

    def op(element):
        cols = [multiply(element, basis[b]) for b in parts]
        return [[c[a] for c in cols] for a in parts]

    gram = []
    for a in parts:
        row = []
        for b in parts:
            m = op(multiply(basis[a], basis[b]))
            row.append(sum(m[i][i] for i in range(len(parts))))
        gram.append(row)
    return gram


def test_gram_rank1_by_hand():
    # basis [2], [1,1]; [1,1]^2 = 2[1,1]
    # L_[2] = I, L_[1,1] = [[0,0],[1,2]] -> traces 2 and 2
    g = gram_matrix(1)
    assert g.entries == ((2, 2), (2, 4))
    assert g.determinant() == 4


@pytest.mark.parametrize("rank", [2, 3])
def test_gram_matches_operator_traces(rank):
    expected = _brute_gram(rank)
    assert [list(r) for r in gram_matrix(rank).entries] == expected


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_class_algebra_semisimple(rank):
    assert is_semisimple(rank)


def test_rank3_gram_symmetric_and_nonsingular():
    g = gram_matrix(3)
    assert all(g.entries[i][j] == g.entries[j][i] for i in range(5) for j in range(5))
    assert determinant(g.entries) != 0


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_solomon_trace_form_degenerate(rank):
    assert not solomon_is_semisimple(rank)
    assert radical_null_vector_failures(rank) == []
    g = solomon_gram(rank)
    nulls = null_space(g.entries)
    assert len(nulls) == 2 ** rank - len(enumerate_partitions(rank))


def test_solomon_rank1_boundary():
    assert solomon_is_semisimple(1)


def test_class_element_arithmetic():
    a = ClassElement(3, {(4,): 1, ONES: Fraction(1, 2)})
    b = ClassElement(3, {ONES: Fraction(-1, 2)})
    assert (a + b) == class_basis_element((4,), 3)
    assert (2 * a)[ONES] == 1
    assert str(ClassElement(3, {})) == "0"
