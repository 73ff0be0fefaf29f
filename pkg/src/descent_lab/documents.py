"""
Serializable documents for multiplication tables, character tables and
tables of marks, with JSON and CSV emitters/parsers that round-trip.

JSON keeps integers as numbers and other rationals as ``"p/q"`` strings. CSV
puts metadata on leading ``# key=value`` lines; a multiplication table has one
row per basis pair with the product written as ``coeff*label`` terms joined
by ``+``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .characters import character_table, conjugacy_classes, marks_matrix
from .classes import class_table
from .exact import format_fraction, parse_fraction
from .solomon import resolve_strategy, structure_table
from .weyl import (
    enumerate_partitions,
    enumerate_subsets,
    format_partition,
    format_subset,
)

__all__ = [
    "TableDocument", "MatrixDocument",
    "build_table_document", "build_characters_document", "build_marks_document",
    "build_gram_document", "to_json", "from_json", "to_csv", "from_csv",
    "parse_terms", "format_terms",
]


@dataclass(frozen=True)
class TableDocument:
    """Full basis-product table; ``cells[i][j]`` is ``labels[i] * labels[j]``."""

    rank: int
    algebra: str
    labels: tuple
    cells: tuple
    metadata: dict = field(default_factory=dict)

    kind = "table"

    def cell(self, left: str, right: str) -> dict:
        return self.cells[self.labels.index(left)][self.labels.index(right)]


@dataclass(frozen=True)
class MatrixDocument:
    """A labelled rational matrix: character table, table of marks or Gram matrix."""

    kind: str
    rank: int
    row_labels: tuple
    column_labels: tuple
    values: tuple
    metadata: dict = field(default_factory=dict)

    def row(self, label: str) -> tuple:
        return self.values[self.row_labels.index(label)]


def _metadata(strategy: str) -> dict:
    return {"tool_version": __version__, "strategy": strategy}


def build_table_document(rank: int, algebra: str = "class", strategy: str = "auto") -> TableDocument:
    resolved = resolve_strategy(strategy, rank)
    if algebra == "class":
        parts = enumerate_partitions(rank)
        table = class_table(rank, resolved)
        labels = tuple(format_partition(lam) for lam in parts)
        cells = tuple(
            tuple(
                {format_partition(nu): table[lam, mu].coeffs[nu]
                 for nu in parts if nu in table[lam, mu].coeffs}
                for mu in parts
            )
            for lam in parts
        )
    elif algebra == "solomon":
        subsets = enumerate_subsets(rank)
        table = structure_table(rank, resolved)
        labels = tuple(format_subset(J) for J in subsets)
        cells = tuple(
            tuple(
                {format_subset(L): Fraction(c) for L, c in table.product(J, K).items()}
                for K in subsets
            )
            for J in subsets
        )
    else:
        raise ValueError(f"unknown algebra {algebra!r}; expected class or solomon")
    return TableDocument(rank, algebra, labels, cells, _metadata(resolved))


def _char_strategy(strategy: str, rank: int) -> str:
    resolved = resolve_strategy(strategy, rank)
    return "brute" if resolved == "brute" else "combinatorial"


def build_characters_document(rank: int, strategy: str = "auto") -> MatrixDocument:
    """Rows ``chi_lam`` (canonical representatives), columns conjugacy classes."""
    used = _char_strategy(strategy, rank)
    table = character_table(rank, used)
    parts = enumerate_partitions(rank)
    meta = _metadata(used)
    meta["class_sizes"] = [size for _, size in conjugacy_classes(rank)]
    return MatrixDocument(
        "characters", rank,
        tuple(format_partition(lam) for lam in parts),
        tuple(format_partition(lam) for lam in parts),
        tuple(tuple(table[lam].row()) for lam in parts),
        meta,
    )


def build_marks_document(rank: int, strategy: str = "auto") -> MatrixDocument:
    """Rows: actions ``W/W_lam``; columns: parabolic classes."""
    used = _char_strategy(strategy, rank)
    parts = enumerate_partitions(rank)
    labels = tuple(format_partition(lam) for lam in parts)
    values = tuple(tuple(Fraction(x) for x in row) for row in marks_matrix(rank, used))
    return MatrixDocument("marks", rank, labels, labels, values, _metadata(used))


def build_gram_document(gram, strategy: str = "auto") -> MatrixDocument:
    labels = tuple(gram.labels())
    values = tuple(tuple(Fraction(x) for x in row) for row in gram.entries)
    return MatrixDocument("gram", gram.rank, labels, labels, values, _metadata(strategy))


# ----------------------------------------------------------------------- JSON

def to_json(doc) -> str:
    if isinstance(doc, TableDocument):
        payload = {
            "kind": "table",
            "rank": doc.rank,
            "algebra": doc.algebra,
            "labels": list(doc.labels),
            "cells": [
                [{k: format_fraction(v) for k, v in cell.items()} for cell in row]
                for row in doc.cells
            ],
            "metadata": doc.metadata,
        }
    else:
        payload = {
            "kind": doc.kind,
            "rank": doc.rank,
            "row_labels": list(doc.row_labels),
            "column_labels": list(doc.column_labels),
            "values": [[format_fraction(v) for v in row] for row in doc.values],
            "metadata": doc.metadata,
        }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str):
    data = json.loads(text)
    if data.get("kind", "table") == "table":
        return TableDocument(
            data["rank"], data["algebra"], tuple(data["labels"]),
            tuple(
                tuple({k: parse_fraction(v) for k, v in cell.items()} for cell in row)
                for row in data["cells"]
            ),
            data.get("metadata", {}),
        )
    return MatrixDocument(
        data["kind"], data["rank"], tuple(data["row_labels"]), tuple(data["column_labels"]),
        tuple(tuple(parse_fraction(v) for v in row) for row in data["values"]),
        data.get("metadata", {}),
    )


# ------------------------------------------------------------------------ CSV

def format_terms(cell: dict, order) -> str:
    if not cell:
        return "0"
    rank = {label: i for i, label in enumerate(order)}
    keys = sorted(cell, key=lambda k: rank.get(k, len(rank)))
    return "+".join(f"{format_fraction(cell[k])}*{k}" for k in keys)


def parse_terms(text: str) -> dict:
    text = text.strip()
    if text == "0":
        return {}
    out = {}
    for term in text.split("+"):
        coeff, _, label = term.partition("*")
        if not label:
            raise ValueError(f"malformed term {term!r}")
        out[label] = out.get(label, 0) + parse_fraction(coeff)
    return out


def _meta_lines(kind: str, rank: int, extra: dict, metadata: dict) -> list:
    lines = [f"# kind={kind}", f"# rank={rank}"]
    for key, value in extra.items():
        lines.append(f"# {key}={value}")
    for key, value in metadata.items():
        lines.append(f"# meta.{key}={json.dumps(value)}")
    return lines


def to_csv(doc) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(doc, TableDocument):
        for line in _meta_lines("table", doc.rank, {"algebra": doc.algebra}, doc.metadata):
            buf.write(line + "\n")
        writer.writerow(["rank", "left", "right", "result"])
        for i, left in enumerate(doc.labels):
            for j, right in enumerate(doc.labels):
                writer.writerow([doc.rank, left, right, format_terms(doc.cells[i][j], doc.labels)])
    else:
        for line in _meta_lines(doc.kind, doc.rank, {}, doc.metadata):
            buf.write(line + "\n")
        writer.writerow(["row"] + list(doc.column_labels))
        for label, row in zip(doc.row_labels, doc.values):
            writer.writerow([label] + [format_fraction(v) for v in row])
    return buf.getvalue()


def from_csv(text: str):
    header = {}
    meta = {}
    body = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            if key.startswith("meta."):
                meta[key[5:]] = json.loads(value)
            else:
                header[key] = value
        elif line.strip():
            body.append(line)
    rows = list(csv.reader(body))
    kind = header.get("kind", "table")
    rank = int(header["rank"])
    if kind == "table":
        labels = []
        cells = {}
        for _, left, right, result in rows[1:]:
            if left not in labels:
                labels.append(left)
            cells[left, right] = parse_terms(result)
        return TableDocument(
            rank, header["algebra"], tuple(labels),
            tuple(tuple(cells[a, b] for b in labels) for a in labels), meta,
        )
    columns = tuple(rows[0][1:])
    return MatrixDocument(
        kind, rank, tuple(r[0] for r in rows[1:]), columns,
        tuple(tuple(parse_fraction(x) for x in r[1:]) for r in rows[1:]), meta,
    )
