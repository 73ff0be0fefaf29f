import itertools

import pytest
from hypothesis import given, strategies as st

from descent_lab.errors import (
    CapacityError,
    InvalidPartitionError,
    InvalidSubsetError,
    RankMismatchError,
)
from descent_lab.weyl import (
    Permutation,
    Root,
    act_on_root,
    all_permutations,
    are_conjugate,
    check_rank,
    compose,
    composition_of,
    conjugating_witness,
    cycle_type,
    descent_set,
    enumerate_partitions,
    enumerate_subsets,
    format_partition,
    format_subset,
    full_set,
    inverse,
    length,
    parse_partition,
    parse_subset,
    partition_of,
    simple_root,
    subset_of_composition,
)

P = Permutation
E = frozenset()


def perms(rank):
    return st.permutations(list(range(1, rank + 2))).map(lambda p: Permutation(tuple(p)))


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_compose_examples():
    w = P((3, 1, 4, 2))
    assert compose(Permutation.identity(3), w) == w
    assert compose(w, inverse(w)) == Permutation.identity(3)
    assert compose(P((2, 1, 3, 4)), P((1, 3, 2, 4))) == P((2, 3, 1, 4))


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatchError):
        compose(P((1, 2)), P((1, 2, 3)))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_compose_associative(triple):
    u, v, w = triple
    assert compose(compose(u, v), w) == compose(u, compose(v, w))


def test_act_on_root_examples():
    assert act_on_root(Permutation.identity(3), simple_root(1)) == simple_root(1)
    assert act_on_root(P((2, 3, 1, 4)), Root(1, 2)) == Root(2, 3)
    image = act_on_root(P((2, 1, 3, 4)), Root(1, 2))
    assert image == Root(2, 1)
    assert not image.is_positive


def test_length_examples():
    assert length(Permutation.identity(3)) == 0
    assert length(P((2, 1, 3, 4))) == 1
    assert length(P((4, 3, 2, 1))) == 6


def test_descent_set_examples():
    assert descent_set(Permutation.identity(3)) == E
    assert descent_set(P((2, 1, 3, 4))) == {1}
    assert descent_set(P((4, 3, 2, 1))) == {1, 2, 3}


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_length_counts_positive_roots_made_negative(rank):
    positive = [Root(i, j) for i in range(1, rank + 2) for j in range(i + 1, rank + 2)]
    for w in all_permutations(rank):
        flipped = sum(1 for r in positive if not act_on_root(w, r).is_positive)
        assert length(w) == flipped
        assert descent_set(w) == {k for k in range(1, rank + 1)
                                  if not act_on_root(w, simple_root(k)).is_positive}


def test_composition_examples():
    assert composition_of(full_set(3), 3) == (4,)
    assert composition_of(E, 3) == (1, 1, 1, 1)
    assert composition_of({1, 3}, 3) == (2, 2)


def test_composition_rejects_bad_index():
    with pytest.raises(InvalidSubsetError):
        composition_of({4}, 3)
    with pytest.raises(InvalidSubsetError):
        composition_of({0}, 3)


def test_partition_examples():
    assert partition_of({1, 2}, 3) == (3, 1)
    assert partition_of({2, 3}, 3) == (3, 1)
    assert partition_of(E, 3) == (1, 1, 1, 1)


@pytest.mark.parametrize("rank", range(1, 7))
def test_composition_is_bijection_onto_compositions(rank):
    comps = [composition_of(J, rank) for J in enumerate_subsets(rank)]
    assert len(set(comps)) == 2 ** rank
    # every composition of n+1 appears: compare with direct enumeration of cut points
    expected = set()
    for cuts in itertools.product([0, 1], repeat=rank):
        parts, size = [], 1
        for c in cuts:
            if c:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        expected.add(tuple(parts))
    assert set(comps) == expected
    for J in enumerate_subsets(rank):
        assert subset_of_composition(composition_of(J, rank)) == J


def test_conjugacy_examples():
    assert are_conjugate({1}, {3}, 3)
    assert not are_conjugate({1, 2}, {1, 3}, 3)
    for J in enumerate_subsets(3):
        assert are_conjugate(J, J, 3)


def test_witness_examples():
    J = frozenset({1, 3})
    assert conjugating_witness(J, J, 3) == Permutation.identity(3)
    w = conjugating_witness({1}, {3}, 3)
    assert act_on_root(w, simple_root(1)) == simple_root(3)
    assert conjugating_witness({1, 2}, {1, 3}, 3) is None


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_conjugacy_fast_path_matches_witness_search(rank):
    subsets = enumerate_subsets(rank)
    for J in subsets:
        for K in subsets:
            w = conjugating_witness(J, K, rank)
            assert are_conjugate(J, K, rank) == (w is not None)
            if w is not None:
                assert {act_on_root(w, simple_root(k)) for k in J} == {simple_root(k) for k in K}


def test_witness_is_lexicographically_least():
    rank = 3
    w = conjugating_witness({1}, {3}, rank)
    for u in all_permutations(rank):
        if u.images >= w.images:
            break
        assert act_on_root(u, simple_root(1)) != simple_root(3)


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(3)) == (1, 1, 1, 1)
    assert cycle_type(P((2, 1, 3, 4))) == (2, 1, 1)
    assert cycle_type(P((2, 3, 4, 1))) == (4,)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_cycle_type_is_conjugation_invariant(pair):
    u, w = pair
    assert cycle_type(compose(compose(u, w), inverse(u))) == cycle_type(w)
    assert sum(cycle_type(w)) == w.rank + 1


def test_enumeration_sizes():
    assert len(enumerate_subsets(3)) == 8
    assert len(enumerate_partitions(3)) == 5
    assert len(enumerate_partitions(4)) == 7
    assert enumerate_partitions(3) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_subsets(2) == [E, {1}, {2}, {1, 2}]


def test_rank_capacity(monkeypatch):
    with pytest.raises(CapacityError):
        check_rank(10)
    monkeypatch.setenv("DESCENT_LAB_MAX_RANK", "12")
    assert check_rank(10) == 10
    with pytest.raises(CapacityError):
        check_rank(0)
    with pytest.raises(CapacityError):
        all_permutations(7)


def test_labels_round_trip():
    for J in enumerate_subsets(4):
        assert parse_subset(format_subset(J)) == J
    for lam in enumerate_partitions(4):
        assert parse_partition(format_partition(lam)) == lam
    with pytest.raises(InvalidPartitionError):
        parse_partition("3,1")
