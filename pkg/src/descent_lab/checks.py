"""
Named verification suites driven by ``descent-lab check``.

Each check returns a :class:`CheckResult`; a failing check carries the first
counterexample found, rendered as text.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .characters import burnside_counterexample, character_counterexample
from .classes import (
    class_basis_element,
    commutativity_counterexample,
    gram_matrix,
    homomorphism_counterexample,
    multiply_classes,
    projection_kernel_dimension,
    radical_null_vector_failures,
    solomon_gram,
    well_defined_counterexample,
)
from .cosets import (
    count_min_reps,
    double_coset_reps,
    in_parabolic,
    min_coset_reps,
    parabolic_elements,
)
from .exact import matrix_rank
from .solomon import radical_spanning_set, structure_table
from .weyl import (
    all_permutations,
    compose,
    enumerate_partitions,
    enumerate_subsets,
    format_partition,
    format_subset,
    inverse,
    length,
)

__all__ = ["SUITES", "CheckResult", "run_suite"]

SUITES = ("welldef", "commute", "semisimple", "oracle", "characters", "burnside", "cosets")


@dataclass
class CheckResult:
    name: str
    rank: int
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def _fmt(x) -> str:
    if isinstance(x, frozenset):
        return format_subset(x)
    if isinstance(x, tuple) and all(isinstance(p, int) for p in x):
        return format_partition(x)
    return str(x)


def _from_counterexample(name: str, rank: int, found, detail: str) -> CheckResult:
    if found is None:
        return CheckResult(name, rank, True, detail)
    text = ", ".join(_fmt(x) for x in found) if isinstance(found, tuple) else _fmt(found)
    return CheckResult(name, rank, False, detail, text)


def _timed(fn: Callable[[], CheckResult]) -> CheckResult:
    start = time.perf_counter()
    result = fn()
    result.seconds = round(time.perf_counter() - start, 4)
    return result


# --------------------------------------------------------------------- suites

def _welldef(rank, strategy):
    yield lambda: _from_counterexample(
        "welldef.representative_independence", rank, well_defined_counterexample(rank),
        f"class products agree over all {4 ** rank} subset pairs",
    )


def _commute(rank, strategy):
    yield lambda: _from_counterexample(
        "commute.partition_pairs", rank, commutativity_counterexample(rank, strategy),
        "[x_lam][x_mu] == [x_mu][x_lam] for all partition pairs",
    )

    def identity():
        one = (rank + 1,)
        for lam in enumerate_partitions(rank):
            unit = class_basis_element(lam, rank)
            for got in (multiply_classes(one, lam, rank, strategy), multiply_classes(lam, one, rank, strategy)):
                if got != unit:
                    return CheckResult("commute.identity", rank, False, "", f"{_fmt(lam)}: {got}")
        return CheckResult("commute.identity", rank, True, f"[x_{_fmt(one)}] is a two-sided identity")

    yield identity


def _semisimple(rank, strategy):
    def class_gram():
        det = gram_matrix(rank, strategy).determinant()
        return CheckResult("semisimple.class_trace_form", rank, det != 0, f"det = {det}",
                           None if det != 0 else "trace form is degenerate")

    def solomon_degenerate():
        det = solomon_gram(rank, strategy).determinant()
        # only conjugate distinct subsets produce radical elements; none exist at rank 1
        expected_degenerate = rank >= 2
        ok = (det == 0) == expected_degenerate
        return CheckResult("semisimple.solomon_trace_form", rank, ok,
                           f"det = {det}; degenerate expected: {expected_degenerate}",
                           None if ok else f"det = {det}")

    def null_vectors():
        bad = radical_null_vector_failures(rank, strategy)
        count = len(radical_spanning_set(rank))
        return CheckResult("semisimple.radical_null_vectors", rank, not bad,
                           f"{count} differences x_J - x_K checked",
                           None if not bad else str(bad[0].coeffs))

    def kernel():
        expected = (1 << rank) - len(enumerate_partitions(rank))
        got = projection_kernel_dimension(rank)
        span = radical_spanning_set(rank)
        span_rank = matrix_rank([e.vector(enumerate_subsets(rank)) for e in span]) if span else 0
        ok = got == expected == span_rank
        return CheckResult("semisimple.projection_kernel", rank, ok,
                           f"kernel dim {got}, radical span dim {span_rank}, expected {expected}",
                           None if ok else f"{got} / {span_rank} != {expected}")

    def homomorphism():
        return _from_counterexample("semisimple.projection_homomorphism", rank,
                                    homomorphism_counterexample(rank, strategy),
                                    "project(x_J x_K) == project(x_J) project(x_K)")

    yield from (class_gram, solomon_degenerate, null_vectors, kernel, homomorphism)


def _oracle(rank, strategy):
    def tables():
        brute = structure_table(rank, "brute")
        matrix = structure_table(rank, "matrix")
        diff = brute.differences(matrix)
        if diff:
            J, K, L, a, b = diff[0]
            return CheckResult("oracle.matrix_vs_brute", rank, False, "",
                               f"J={_fmt(J)}, K={_fmt(K)}, L={_fmt(L)}: brute {a}, matrix {b}")
        return CheckResult("oracle.matrix_vs_brute", rank, True,
                           f"{len(brute.entries)} (J, K) pairs agree")

    def margins():
        table = structure_table(rank, "matrix")
        for J in enumerate_subsets(rank):
            for K in enumerate_subsets(rank):
                reps = double_coset_reps(J, K, rank, "direct")
                total = table.double_coset_count(J, K)
                if total != len(reps):
                    return CheckResult("oracle.margin_identity", rank, False, "",
                                       f"J={_fmt(J)}, K={_fmt(K)}: sum a_JKL={total}, |X_JK|={len(reps)}")
        return CheckResult("oracle.margin_identity", rank, True, "sum_L a_JKL == |X_JK|")

    yield from (tables, margins)


def _characters(rank, strategy):
    yield lambda: _from_counterexample(
        "characters.product_and_independence", rank, character_counterexample(rank),
        "chi_J chi_K == sum_L a_JKL chi_L; class characters independent",
    )


def _burnside(rank, strategy):
    yield lambda: _from_counterexample(
        "burnside.marks_multiplicative", rank, burnside_counterexample(rank),
        "marks multiplicative; marks matrix nonsingular",
    )


def coset_machinery_counterexample(rank: int, sample: Optional[int] = None, seed: int = 0):
    """Unique minimal rep per coset, ``l(dv) = l(d) + l(v)``, ``|X_J|`` multinomial.

    With ``sample`` set, only that many random group elements are factorised
    per subset (the counts are always checked in full).
    """
    group = all_permutations(rank)
    rng = random.Random(seed)
    for J in enumerate_subsets(rank):
        reps = min_coset_reps(J, rank, "brute")
        if len(reps) != count_min_reps(J, rank):
            return ("count", J, len(reps), count_min_reps(J, rank))
        if set(reps.reps) != set(min_coset_reps(J, rank, "direct").reps):
            return ("direct-vs-brute", J)
        sub = parabolic_elements(J, rank)
        rep_lengths = {d: length(d) for d in reps}
        elements = group if sample is None else rng.sample(group, min(sample, len(group)))
        for w in elements:
            found = [d for d in reps if in_parabolic(compose(inverse(d), w), J)]
            if len(found) != 1:
                return ("unique-rep", J, w, len(found))
            d = found[0]
            v = compose(inverse(d), w)
            if length(w) != rep_lengths[d] + length(v):
                return ("length", J, w, d, v)
        if sample is None and len(reps) * len(sub) != len(group):
            return ("index", J)
    return None


def _cosets(rank, strategy):
    sample = None if rank <= 4 else 60
    detail = "exhaustive" if sample is None else f"{sample} sampled elements per subset"
    yield lambda: _from_counterexample("cosets.factorisation", rank,
                                       coset_machinery_counterexample(rank, sample), detail)


_SUITES = {
    "welldef": _welldef,
    "commute": _commute,
    "semisimple": _semisimple,
    "oracle": _oracle,
    "characters": _characters,
    "burnside": _burnside,
    "cosets": _cosets,
}


def run_suite(rank: int, suite: str = "all", strategy: str = "auto") -> list:
    """Run one named suite (or all of them) and return the results in order."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}; expected all or one of {', '.join(SUITES)}")
    results = []
    for name in names:
        for check in _SUITES[name](rank, strategy):
            results.append(_timed(check))
    return results

