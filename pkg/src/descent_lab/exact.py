"""Sparse rational linear combinations and exact matrix helpers."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import sympy

from .errors import RankMismatchError

__all__ = [
    "SparseElement", "to_sympy", "matrix_rank", "determinant", "null_space",
    "left_multiplication_matrix", "trace_form_matrix", "format_fraction",
    "parse_fraction",
]


class SparseElement:
    """Mixin for immutable ``rank`` + ``coeffs`` dataclasses over some basis.

    Subclasses are frozen dataclasses with fields ``rank`` and ``coeffs``;
    zero coefficients are dropped on construction so equality is structural.
    """

    def __post_init__(self):
        clean = {k: Fraction(v) for k, v in self.coeffs.items() if v != 0}
        object.__setattr__(self, "coeffs", clean)

    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return type(self)(self.rank, out)

    def __neg__(self):
        return type(self)(self.rank, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return type(self)(self.rank, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __getitem__(self, key):
        return self.coeffs.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self, basis: Sequence) -> list:
        return [self[b] for b in basis]


def to_sympy(rows) -> sympy.Matrix:
    return sympy.Matrix([
        [sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row]
        for row in rows
    ])


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def matrix_rank(rows) -> int:
    rows = list(rows)
    if not rows or not len(rows[0]):
        return 0
    return to_sympy(rows).rank()


def determinant(rows) -> Fraction:
    rows = list(rows)
    if not rows:
        return Fraction(1)
    return _from_sympy(to_sympy(rows).det(method="bareiss"))


def null_space(rows) -> list:
    """Basis of ``{v : M v = 0}`` as lists of Fractions."""
    return [[_from_sympy(x) for x in v] for v in to_sympy(rows).nullspace()]


def left_multiplication_matrix(basis: Sequence, product: Callable, b) -> list:
    """Matrix of ``y -> b * y``; column ``j`` holds the coordinates of ``b * basis[j]``."""
    columns = [product(b, y) for y in basis]
    return [[Fraction(col.get(x, 0)) for col in columns] for x in basis]


def trace_form_matrix(basis: Sequence, product: Callable) -> list:
    """``(a, b) -> trace(left multiplication by a*b)`` on the given basis.

    ``product(a, b)`` must return a mapping from basis labels to coefficients.
    """
    # trace(L_{ab}) is linear in ab, so only the traces of basis operators are needed
    traces = {}
    for z in basis:
        traces[z] = sum((Fraction(product(z, y).get(y, 0)) for y in basis), Fraction(0))
    gram = []
    for a in basis:
        row = []
        for b in basis:
            prod_ab = product(a, b)
            row.append(sum((c * traces[z] for z, c in prod_ab.items()), Fraction(0)))
        gram.append(row)
    return gram


def format_fraction(x) -> "int | str":
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not coefficients")
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))
