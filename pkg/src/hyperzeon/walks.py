"""Nilpotent adjacency matrices for hypergraphs and walk extraction from their powers.

The path/cycle context labels vertex i with an index-2 nilpotent generator and
edge l with an idempotent one; entry (i, j) of the adjacency matrix is the
vertex label of j times the sum of labels of edges containing both endpoints.
Powers of the matrix then count walks whose surviving terms are exactly the
self-avoiding ones: repeated vertices square to zero, repeated edges collapse
idempotently and merely shrink the recorded edge set.  Trails swap the roles
(idempotent vertices, nilpotent edges) so edge repetition cancels instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, Signature
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class WalkRecord:
    """One surviving basis term: the walk's vertex set, edge set, and multiplicity."""

    vertex_set: frozenset
    edge_set: frozenset
    count: int


class AlgebraMatrix:
    """Dense matrix of kernel elements sharing one signature."""

    __slots__ = ("signature", "entries")

    def __init__(self, signature: Signature, entries):
        self.signature = signature
        rows = tuple(tuple(row) for row in entries)
        width = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for x in row:
                if not isinstance(x, Element) or x.signature != signature:
                    raise ValueError("entries must be elements of the matrix signature")
        self.entries = rows

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, idx):
        return self.entries[idx]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraMatrix)
            and self.signature == other.signature
            and self.entries == other.entries
        )

    def __mul__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        if self.signature != other.signature:
            raise ValueError("matrix signatures differ")
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.signature.zero()
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out_row = []
            for j in range(other.cols):
                acc = zero
                for t in range(self.cols):
                    a = row[t]
                    b = other.entries[t][j]
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return AlgebraMatrix(self.signature, out)

    def power(self, k: int) -> "AlgebraMatrix":
        if k < 0:
            raise ValueError(f"power must be >= 0, got {k}")
        if k == 0:
            if self.rows != self.cols:
                raise ValueError("power 0 requires a square matrix")
            one, zero = self.signature.one(), self.signature.zero()
            rows = [
                [one if a == b else zero for b in range(self.cols)]
                for a in range(self.rows)
            ]
            return AlgebraMatrix(self.signature, rows)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out


# -- matrix builders ------------------------------------------------------------


def walk_signature(h: Hypergraph) -> Signature:
    """Vertices 1..n as index-2 nilpotents (ids 0..n-1), edges as idempotents (ids n..n+m-1)."""
    return Signature.zeons(h.n) + Signature.idempotents(h.m)


def trail_signature(h: Hypergraph) -> Signature:
    """Role swap: vertices idempotent, edges index-2 nilpotent."""
    return Signature.idempotents(h.n, "ε") + Signature.zeons(h.m, "ζ")


@lru_cache(maxsize=64)
def build_omega(h: Hypergraph) -> AlgebraMatrix:
    """The n x n nilpotent adjacency matrix: (i, j) -> zeta_j * sum of shared edge labels."""
    sig = walk_signature(h)
    n = h.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            terms = {((j - 1, 1), (n + idx, 1)): 1 for idx in h.common_edges(i, j)}
            row.append(Element(sig, terms, _raw=True))
        rows.append(row)
    return AlgebraMatrix(sig, rows)


@lru_cache(maxsize=64)
def build_trail_matrix(h: Hypergraph) -> AlgebraMatrix:
    sig = trail_signature(h)
    n = h.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            terms = {((j - 1, 1), (n + idx, 1)): 1 for idx in h.common_edges(i, j)}
            row.append(Element(sig, terms, _raw=True))
        rows.append(row)
    return AlgebraMatrix(sig, rows)


def build_blocks(h: Hypergraph) -> tuple[AlgebraMatrix, AlgebraMatrix]:
    """The factor matrices X (n x m, idempotent edge labels) and Z (m x n, vertex labels)."""
    sig = walk_signature(h)
    n = h.n
    X = [
        [
            Element(sig, {((n + l, 1),): 1}, _raw=True) if v in e else sig.zero()
            for l, e in enumerate(h.edges)
        ]
        for v in range(1, h.n + 1)
    ]
    Z = [
        [
            Element(sig, {((j - 1, 1),): 1}, _raw=True) if j in e else sig.zero()
            for j in range(1, h.n + 1)
        ]
        for e in h.edges
    ]
    return AlgebraMatrix(sig, X), AlgebraMatrix(sig, Z)


def build_bipartite(h: Hypergraph) -> AlgebraMatrix:
    """The (n+m) x (n+m) block matrix [[0, X], [Z, 0]]; its square is diag(XZ, ZX)."""
    X, Z = build_blocks(h)
    sig = X.signature
    zero = sig.zero()
    size = h.n + h.m
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if i < h.n and j >= h.n:
                row.append(X.entries[i][j - h.n])
            elif i >= h.n and j < h.n:
                row.append(Z.entries[i - h.n][j])
            else:
                row.append(zero)
        rows.append(row)
    return AlgebraMatrix(sig, rows)


# -- walk extraction --------------------------------------------------------------


def _row_times_matrix(row, mat: AlgebraMatrix):
    zero = mat.signature.zero()
    out = []
    for c in range(mat.cols):
        acc = zero
        for v, rv in enumerate(row):
            b = mat.entries[v][c]
            if rv and b:
                acc = acc + rv * b
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=4096)
def _walk_row(h: Hypergraph, i: int, k: int, premultiplied: bool):
    """Row i of Omega^k, optionally with zeta_i folded in from the start."""
    omega = build_omega(h)
    if k == 1:
        row = omega.entries[i - 1]
        if premultiplied:
            zi = omega.signature.gen(i - 1)
            row = tuple(zi * x for x in row)
        return tuple(row)
    return _row_times_matrix(_walk_row(h, i, k - 1, premultiplied), omega)


@lru_cache(maxsize=4096)
def _trail_row(h: Hypergraph, i: int, k: int):
    """Row i of the trail matrix's k-th power, with the start vertex label folded in."""
    mat = build_trail_matrix(h)
    if k == 1:
        xi = mat.signature.gen(i - 1)
        return tuple(xi * x for x in mat.entries[i - 1])
    return _row_times_matrix(_trail_row(h, i, k - 1), mat)


def _extract_records(element: Element, n: int) -> list[WalkRecord]:
    records = []
    for monomial, coeff in element.terms.items():
        vs = frozenset(g + 1 for g, _ in monomial if g < n)
        es = frozenset(g - n + 1 for g, _ in monomial if g >= n)
        records.append(WalkRecord(vs, es, coeff))
    records.sort(key=lambda r: (sorted(r.vertex_set), sorted(r.edge_set)))
    return records


def _check_vertex(h: Hypergraph, v: int):
    if not 1 <= v <= h.n:
        raise ValueError(f"vertex {v} outside 1..{h.n}")


def k_paths(h: Hypergraph, i: int, j: int, k: int) -> list[WalkRecord]:
    """Self-avoiding k-step walks from i to j, grouped by (vertex set, edge set).

    Each record's vertex set has size k+1 and contains both endpoints; the
    count is the number of distinct walks realizing that pair of sets.
    """
    _check_vertex(h, i)
    _check_vertex(h, j)
    if i == j:
        raise ValueError("closed walks are cycles; use k_cycles")
    if k < 1:
        raise ValueError(f"paths need k >= 1, got {k}")
    entry = _walk_row(h, i, k, True)[j - 1]
    records = _extract_records(entry, h.n)
    for r in records:
        assert len(r.vertex_set) == k + 1 and i in r.vertex_set and j in r.vertex_set
    return records


def k_cycles(h: Hypergraph, i: int, k: int) -> list[WalkRecord]:
    """Closed k-step walks at i with distinct non-base vertices.

    An out-and-back walk reusing one edge counts: the idempotent edge label
    absorbs the repetition instead of canceling it.  Vertex sets have size k.
    """
    _check_vertex(h, i)
    if k < 2:
        raise ValueError(f"cycles need k >= 2, got {k}")
    entry = _walk_row(h, i, k, False)[i - 1]
    records = _extract_records(entry, h.n)
    for r in records:
        assert len(r.vertex_set) == k and i in r.vertex_set
    return records


def k_trails(h: Hypergraph, i: int, j: int, k: int) -> list[WalkRecord]:
    """Edge-distinct k-step walks from i to j (i == j allowed), grouped by sets.

    Vertices may repeat, including stationary steps that spend an unused
    incident edge without moving.  Every edge set has size exactly k and the
    vertex set always includes the start vertex.
    """
    _check_vertex(h, i)
    _check_vertex(h, j)
    if k < 1:
        raise ValueError(f"trails need k >= 1, got {k}")
    entry = _trail_row(h, i, k)[j - 1]
    records = _extract_records(entry, h.n)
    for r in records:
        assert len(r.edge_set) == k and i in r.vertex_set
    return records
