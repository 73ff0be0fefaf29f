"""Heatmap figures for table and matrix documents (written next to the data output)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .documents import MatrixDocument, TableDocument, format_terms  # noqa: E402

__all__ = ["render_figure"]

_TITLES = {
    "characters": "Permutation characters of S_{size}",
    "marks": "Parabolic table of marks of S_{size}",
    "gram": "Trace form, rank {rank}",
}


def _canvas(count: int):
    side = max(4.0, 0.9 * count + 1.5)
    fig, ax = plt.subplots(figsize=(side, side * 0.85))
    return fig, ax


def _annotate(ax, texts, values, fontsize):
    top = max((v for row in values for v in row), default=0) or 1
    for i, row in enumerate(texts):
        for j, text in enumerate(row):
            color = "white" if values[i][j] > 0.6 * top else "black"
            ax.text(j, i, text, ha="center", va="center", fontsize=fontsize, color=color)


def render_figure(doc, path) -> None:
    """Render ``doc`` as an annotated heatmap; the format follows the file suffix."""
    if isinstance(doc, TableDocument):
        n = len(doc.labels)
        # colour by the number of double cosets, i.e. the coefficient sum of each cell
        values = [[float(sum(cell.values())) for cell in row] for row in doc.cells]
        texts = [[format_terms(cell, doc.labels).replace("+", "+\n") for cell in row]
                 for row in doc.cells]
        rows = cols = doc.labels
        title = f"{doc.algebra} algebra products, rank {doc.rank}"
        fontsize = 7 if n <= 8 else 5
        show_text = n <= 16
    elif isinstance(doc, MatrixDocument):
        n = len(doc.row_labels)
        values = [[float(v) for v in row] for row in doc.values]
        texts = [[str(v) for v in row] for row in doc.values]
        rows, cols = doc.row_labels, doc.column_labels
        title = _TITLES.get(doc.kind, doc.kind).format(size=doc.rank + 1, rank=doc.rank)
        fontsize = 8 if n <= 12 else 5
        show_text = n <= 22
    else:
        raise TypeError(f"cannot plot {type(doc).__name__}")

    fig, ax = _canvas(n)
    try:
        image = ax.imshow(values, cmap="viridis", aspect="auto")
        fig.colorbar(image, ax=ax, shrink=0.8)
        ax.set_xticks(range(len(cols)))
        ax.set_xticklabels(cols, rotation=90, fontsize=fontsize + 1)
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels(rows, fontsize=fontsize + 1)
        ax.set_title(title)
        if show_text:
            _annotate(ax, texts, values, fontsize)
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
    finally:
        plt.close(fig)
