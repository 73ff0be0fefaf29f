import random
from collections import Counter

import pytest

from descent_lab.cosets import double_coset_reps, intersection_subset, min_coset_reps
from descent_lab.exact import matrix_rank
from descent_lab.solomon import (
    MATRIX_CONVENTION,
    SolomonElement,
    basis_element,
    calibrate_matrix_convention,
    contingency_tables,
    identity_element,
    multiply,
    multiply_basis,
    pair_product,
    radical_spanning_set,
    read_subset_from_matrix,
    structure_constant,
    structure_table,
    structure_table_via_matrices,
)
from descent_lab.weyl import compose, composition_of, enumerate_subsets, full_set

E = frozenset()


def x(J, rank=3):
    return basis_element(J, rank)


def test_structure_constant_examples():
    assert structure_constant(E, E, E, 3) == 24
    assert structure_constant({1}, {1}, {1}, 3) == 2
    assert structure_constant({1}, {1}, E, 3) == 5
    for K in enumerate_subsets(3):
        assert structure_constant(full_set(3), K, K, 3) == 1


def test_structure_constant_by_definition():
    # straight from the definition on the explicit double coset reps
    rank = 3
    for J in enumerate_subsets(rank):
        for K in enumerate_subsets(rank):
            got = Counter(intersection_subset(w, J, K) for w in double_coset_reps(J, K, rank))
            assert dict(got) == dict(pair_product(J, K, rank, "brute"))


def test_multiply_basis_examples():
    for K in enumerate_subsets(3):
        assert multiply_basis(full_set(3), K, 3) == x(K)
    prod = multiply_basis({1, 2}, {1, 2}, 3)
    assert prod[frozenset({1, 2})] == 1
    rest = [L for L in prod.coeffs if L != {1, 2}]
    assert len(rest) == 1 and len(rest[0]) == 1 and rest[0] <= {1, 2}
    assert prod.coeffs[rest[0]] == 1
    assert multiply_basis(E, E, 3) == x(E).scale(24)


def test_multiply_trivial_cases():
    a = x({1}) + x({2, 3}).scale(3)
    assert multiply(identity_element(3), a) == a
    zero = SolomonElement(3, {})
    assert multiply(zero, a).is_zero()


def test_solomon_algebra_is_not_commutative():
    assert multiply(x({1}), x({2})) != multiply(x({2}), x({1}))
    assert multiply(x({1}, 2), x({2}, 2)) != multiply(x({2}, 2), x({1}, 2))
    # this particular pair does commute (checked in the group algebra below too)
    assert multiply(x({1}), x({1, 2})) == multiply(x({1, 2}), x({1}))


def test_rank1_solomon_algebra_is_commutative():
    a, b = x(E, 1), x({1}, 1)
    assert multiply(a, b) == multiply(b, a)


def _group_algebra_sum(J, rank):
    return Counter(min_coset_reps(J, rank).reps)


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_products_agree_with_group_algebra(rank):
    # Independent oracle: multiply the sums of coset reps inside Q[W].
    for J in enumerate_subsets(rank):
        for K in enumerate_subsets(rank):
            product = Counter()
            for u in min_coset_reps(J, rank).reps:
                for v in min_coset_reps(K, rank).reps:
                    product[compose(u, v)] += 1
            expected = Counter()
            for L, c in pair_product(J, K, rank, "brute").items():
                for d in min_coset_reps(L, rank).reps:
                    expected[d] += c
            assert product == expected


@pytest.mark.parametrize("rank", range(1, 6))
def test_matrix_method_equals_brute_force(rank):
    brute = structure_table(rank, "brute")
    matrix = structure_table_via_matrices(rank)
    assert brute.differences(matrix) == []
    assert brute == matrix


@pytest.mark.parametrize("rank", range(1, 5))
def test_margin_identity(rank):
    table = structure_table(rank, "brute")
    for J in enumerate_subsets(rank):
        for K in enumerate_subsets(rank):
            assert table.double_coset_count(J, K) == len(double_coset_reps(J, K, rank))
            assert all(L <= K for L in table.product(J, K))


def test_margin_identity_sampled_rank5():
    rng = random.Random(5)
    subsets = enumerate_subsets(5)
    table = structure_table(5, "matrix")
    for _ in range(25):
        J, K = rng.choice(subsets), rng.choice(subsets)
        assert table.double_coset_count(J, K) == len(double_coset_reps(J, K, 5, "direct"))


def test_identity_row():
    for rank in range(1, 5):
        table = structure_table(rank)
        Pi = full_set(rank)
        for K in enumerate_subsets(rank):
            assert dict(table.product(Pi, K)) == {K: 1}


@pytest.mark.parametrize("rank", range(1, 5))
def test_diagonal_constant_counts_reps_with_large_preimage(rank):
    table = structure_table(rank)
    for J in enumerate_subsets(rank):
        for K in enumerate_subsets(rank):
            want = sum(1 for w in double_coset_reps(J, K, rank)
                       if intersection_subset(w, J, K) == K)
            assert table.constant(J, K, K) == want


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_associativity_all_triples(rank):
    subsets = enumerate_subsets(rank)
    for J in subsets:
        for K in subsets:
            for M in subsets:
                a, b, c = (basis_element(S, rank) for S in (J, K, M))
                assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_associativity_random_rank4():
    rng = random.Random(4)
    subsets = enumerate_subsets(4)
    for _ in range(40):
        a, b, c = (basis_element(rng.choice(subsets), 4) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_contingency_table_counts():
    assert sum(1 for _ in contingency_tables((1, 1, 1, 1), (1, 1, 1, 1))) == 24
    tables = list(contingency_tables(composition_of({1}, 3), composition_of({1}, 3)))
    assert len(tables) == 7
    assert list(contingency_tables((4,), (4,))) == [((4,),)]
    assert read_subset_from_matrix(((4,),)) == full_set(3)
    for m in contingency_tables((1, 1, 1, 1), (1, 1, 1, 1)):
        assert read_subset_from_matrix(m) == E


def test_contingency_tables_have_the_margins():
    for m in contingency_tables((3, 1, 2), (2, 2, 2)):
        assert tuple(sum(r) for r in m) == (3, 1, 2)
        assert tuple(sum(c) for c in zip(*m)) == (2, 2, 2)


def test_calibrated_convention():
    found = calibrate_matrix_convention(3)
    assert MATRIX_CONVENTION in found
    # the only other survivor is the transpose read the other way, i.e. the same reading
    assert set(found) == {("left-rows", "column-major"), ("right-rows", "row-major")}
    assert calibrate_matrix_convention(4) == found


def test_radical_spanning_set():
    assert radical_spanning_set(1) == []
    span = radical_spanning_set(3)
    subsets = enumerate_subsets(3)
    assert matrix_rank([e.vector(subsets) for e in span]) == 3
    for e in span:
        assert sum(e.coeffs.values()) == 0
