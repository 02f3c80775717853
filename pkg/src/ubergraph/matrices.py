"""Labelled incidence, adjacency and Laplacian matrices."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .core import Ubergraph
from .errors import UnknownEdge, UnknownId


@dataclass(frozen=True, eq=False)
class LabeledMatrix:
    rows: tuple[str, ...]
    cols: tuple[str, ...]
    data: np.ndarray

    def __post_init__(self):
        if self.data.shape != (len(self.rows), len(self.cols)):
            raise ValueError(f"shape {self.data.shape} does not match "
                             f"{len(self.rows)} x {len(self.cols)} labels")
        self.data.setflags(write=False)

    def __getitem__(self, key: tuple[str, str]):
        r, c = key
        try:
            return self.data[self.rows.index(r), self.cols.index(c)]
        except ValueError:
            raise UnknownId(f"no entry ({r!r}, {c!r})", label=f"{r},{c}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and np.array_equal(self.data, other.data))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def submatrix(self, rows, cols) -> "LabeledMatrix":
        ri = [self.rows.index(r) for r in rows]
        ci = [self.cols.index(c) for c in cols]
        return LabeledMatrix(tuple(rows), tuple(cols), self.data[np.ix_(ri, ci)].copy())

    def to_text(self) -> str:
        """Space-aligned grid with a header row of column labels."""
        cells = [[""] + list(self.cols)]
        cells += [[r] + [_fmt(v) for v in row] for r, row in zip(self.rows, self.data)]
        if not self.rows and not self.cols:
            return ""
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        lines = []
        for row in cells:
            parts = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow([""] + list(self.cols))
        for r, row in zip(self.rows, self.data):
            writer.writerow([r] + [_fmt(v) for v in row])
        return buf.getvalue()


def _fmt(v) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def incidence_matrix(u: Ubergraph) -> LabeledMatrix:
    """``(n+m) x m`` with a 1 where the row node is a member of the column edge."""
    nodes = u.nodes()
    edges = list(u.edges)
    m = np.zeros((len(nodes), len(edges)), dtype=np.int64)
    for j, e in enumerate(edges):
        for x in u.edges[e]:
            m[u.index(x), j] = 1
    return LabeledMatrix(tuple(nodes), tuple(edges), m)


def degree_vector(m: LabeledMatrix) -> dict[str, int]:
    return {x: int(d) for x, d in zip(m.rows, m.data.sum(axis=1))}


def incident_from_matrix(m: LabeledMatrix, e: str, f: str) -> bool:
    # Columns, not rows, are indexed by edges; their dot product is |e & f|.
    for g in (e, f):
        if g not in m.cols:
            raise UnknownEdge(f"{g!r} is not an edge column", label=g)
    return int(m.data[:, m.cols.index(e)] @ m.data[:, m.cols.index(f)]) != 0


def adjacency_matrix(u: Ubergraph) -> LabeledMatrix:
    """Off-diagonal entry (x, y) counts the edges holding both x and y."""
    inc = incidence_matrix(u)
    a = inc.data @ inc.data.T
    np.fill_diagonal(a, 0)
    return LabeledMatrix(inc.rows, inc.rows, a)


def laplacian(u: Ubergraph) -> LabeledMatrix:
    a = adjacency_matrix(u)
    lap = np.diag(a.data.sum(axis=1)) - a.data
    return LabeledMatrix(a.rows, a.cols, lap)
