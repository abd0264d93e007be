"""Exact dense matrices over Q: incidence matrices, rank, null-space bases.

Everything here is tolerance-free.  Rank is computed twice, by fraction-free
(Bareiss) elimination on a denominator-cleared integer copy and by reduced
row echelon form over ``Fraction``; the two must agree.  Null-space bases are
read off the RREF, so the basis is deterministic, and every basis vector is
re-multiplied through the matrix before being returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidParameters, NonIntegerEntries
from .hypergraph import Hypergraph, VertexVector

# primes just above 2**20; large enough that rank mod p equals rank over Q
# for every desk-scale 0/1 incidence matrix, small enough for fast arithmetic
ORACLE_PRIME_POOL = (
    1048583, 1048589, 1048601, 1048609, 1048613,
    1048627, 1048633, 1048661, 1048681, 1048703,
)


class RationalMatrix:
    """Dense labelled matrix with ``Fraction`` entries."""

    __slots__ = ("entries", "row_labels", "col_labels")

    def __init__(
        self,
        entries: Sequence[Sequence],
        row_labels: Sequence[str],
        col_labels: Sequence[str],
    ):
        rows = [[Fraction(x) for x in row] for row in entries]
        cols = len(col_labels)
        if any(len(row) != cols for row in rows):
            raise DimensionMismatch("row length does not match column label count")
        if len(rows) != len(row_labels):
            raise DimensionMismatch("entry rows do not match row label count")
        if len(set(row_labels)) != len(row_labels) or len(set(col_labels)) != len(col_labels):
            raise InvalidParameters("matrix labels must be unique")
        self.entries: list[list[Fraction]] = rows
        self.row_labels: tuple[str, ...] = tuple(str(x) for x in row_labels)
        self.col_labels: tuple[str, ...] = tuple(str(x) for x in col_labels)

    @property
    def rows(self) -> int:
        return len(self.row_labels)

    @property
    def cols(self) -> int:
        return len(self.col_labels)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i])

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.entries]

    def transpose(self) -> "RationalMatrix":
        flipped = [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return RationalMatrix(flipped, self.col_labels, self.row_labels)

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class NullspaceBasis:
    """Exact kernel basis together with the rank it certifies."""

    rank: int
    cols: int
    vectors: tuple[VertexVector, ...]

    def __post_init__(self):
        if self.rank + len(self.vectors) != self.cols:
            raise DimensionMismatch("rank + nullity must equal the column count")

    @property
    def nullity(self) -> int:
        return len(self.vectors)


def edge_vertex_incidence(h: Hypergraph) -> RationalMatrix:
    """|E| x |V| 0/1 matrix; rows are hyperedges, columns are vertices."""
    entries = [
        [Fraction(1) if v in e else Fraction(0) for v in h.vertices] for e in h.edges
    ]
    return RationalMatrix(entries, h.edge_labels, h.vertices)


def vertex_edge_incidence(h: Hypergraph) -> RationalMatrix:
    """The transpose: rows are vertices, columns are hyperedges."""
    return edge_vertex_incidence(h).transpose()


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free integer elimination; all divisions are exact."""
    m = [row[:] for row in rows]
    n_rows, n_cols = len(m), len(m[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank


def _cleared_integer_rows(m: RationalMatrix) -> list[list[int]]:
    out = []
    for row in m.entries:
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def rank_and_nullspace(m: RationalMatrix) -> NullspaceBasis:
    """Exact rank and a deterministic kernel basis.

    The basis vector for a free column f has 1 at f and, for each pivot
    column, minus the RREF coefficient of f in that pivot's row.  Each vector
    is verified by re-multiplication before being returned.
    """
    rref_rows, pivots = _rref([row[:] for row in m.entries])
    rank = len(pivots)
    bareiss = _bareiss_rank(_cleared_integer_rows(m))
    if bareiss != rank:
        raise ArithmeticError(
            f"rank disagreement: Bareiss {bareiss} vs RREF {rank}"
        )

    free_cols = [c for c in range(m.cols) if c not in set(pivots)]
    vectors = []
    for f in free_cols:
        coords = {m.col_labels[f]: Fraction(1)}
        for r, p in enumerate(pivots):
            if rref_rows[r][f] != 0:
                coords[m.col_labels[p]] = -rref_rows[r][f]
        vectors.append(VertexVector(coords))

    for vec in vectors:
        product = matvec(m, vec)
        if any(val != 0 for val in product.values()):
            raise ArithmeticError("null-space basis vector failed re-multiplication")
    return NullspaceBasis(rank=rank, cols=m.cols, vectors=tuple(vectors))


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0]) if m else 0
    rank = 0
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(r + 1, n_rows):
            if m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        rank += 1
        r += 1
        if r == n_rows:
            break
    return rank


def rank_modular_oracle(m: RationalMatrix, n_primes: int = 3, seed: int = 0) -> int:
    """Rank over GF(p) for several primes > 2**20; returns the maximum.

    Only valid on integer matrices.  The modular rank never exceeds the
    rational rank, so the maximum over a few primes is a cheap independent
    cross-check that must coincide with rational elimination on incidence
    matrices.
    """
    if not m.is_integer():
        raise NonIntegerEntries("modular rank oracle requires integer entries")
    rows = [[int(x) for x in row] for row in m.entries]
    rng = random.Random(seed)
    primes = rng.sample(ORACLE_PRIME_POOL, min(n_primes, len(ORACLE_PRIME_POOL)))
    return max(_rank_mod_p(rows, p) for p in primes)


def matvec(m: RationalMatrix, x) -> dict[str, object]:
    """Exact matrix-vector product, keyed by row labels.

    ``x`` may be a ``VertexVector`` or a plain mapping; its support must be
    covered by the column labels.  Entries may be rational or cyclotomic; the
    result lives in whichever scalar domain the inputs span.
    """
    entries = x.entries if isinstance(x, VertexVector) else {str(k): v for k, v in x.items()}
    col_set = set(m.col_labels)
    outside = [k for k, v in entries.items() if v != 0 and k not in col_set]
    if outside:
        raise DimensionMismatch(f"vector support outside matrix columns: {sorted(outside)}")
    result: dict[str, object] = {}
    for i, rlabel in enumerate(m.row_labels):
        row = m.entries[i]
        total = Fraction(0)
        for j, clabel in enumerate(m.col_labels):
            coeff = row[j]
            if coeff == 0:
                continue
            val = entries.get(clabel, 0)
            if val == 0:
                continue
            total = total + coeff * val if coeff != 1 else total + val
        result[rlabel] = total
    return result


def span_dimension(vectors: Iterable[VertexVector]) -> int:
    """Dimension of the span of rational sparse vectors (exact elimination)."""
    vecs = list(vectors)
    if not vecs:
        return 0
    labels = sorted({k for v in vecs for k in v.support()})
    if not labels:
        return 0
    rows = [[Fraction(v.value(k)) for k in labels] for v in vecs]
    _, pivots = _rref(rows)
    return len(pivots)


def stack_vectors(vectors: Sequence[VertexVector], col_labels: Sequence[str]) -> RationalMatrix:
    """Rows = vectors over an explicit column label order."""
    rows = [[Fraction(v.value(c)) for c in col_labels] for v in vectors]
    return RationalMatrix(rows, [f"v{i}" for i in range(len(vectors))], col_labels)
