"""Concrete graphs for each family, plus a brute-force strong-regularity check.

Vertex numbering is fixed per family:

* complete: 0..N-1
* paley: field elements in ``GaloisField.elements()`` order
* latin: cell (row, col) is vertex ``row * t + col``
* triangular: 2-subsets of {0..m-1} in lexicographic order
"""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from .gf import GaloisField, prime_power
from .srg import GraphFamily, ParameterError, SrgParams


class NotRegularError(ValueError):
    pass


class NotStronglyRegularError(ValueError):
    """Common-neighbour counts are not constant; ``pair`` is the first offender."""

    def __init__(self, message: str, pair: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.pair = pair


class Graph:
    """Simple undirected graph held as a dense boolean adjacency matrix.

    Neighbour lists are derived lazily; for a regular graph they form an
    ``(N, k)`` integer array, which is what the time-evolution code gathers
    from.
    """

    def __init__(self, adjacency: np.ndarray, name: str = ""):
        adj = np.asarray(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.setflags(write=False)
        self.adjacency = adj
        self.name = name

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            adj[u, v] = adj[v, u] = True
        return cls(adj, name)

    def __repr__(self):
        return f"Graph({self.name or 'unnamed'}, N={self.N})"

    @property
    def N(self) -> int:
        return self.adjacency.shape[0]

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def is_regular(self) -> bool:
        return bool(np.all(self.degrees == self.degrees[0]))

    @property
    def k(self) -> int:
        if not self.is_regular:
            raise NotRegularError(f"{self!r} is not regular")
        return int(self.degrees[0])

    @cached_property
    def neighbors(self) -> np.ndarray:
        """(N, k) array of neighbour indices, each row sorted."""
        k = self.k
        idx = np.nonzero(self.adjacency)[1].reshape(self.N, k)
        idx.setflags(write=False)
        return idx

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def complement(self) -> "Graph":
        comp = ~self.adjacency
        np.fill_diagonal(comp, False)
        return Graph(comp, f"complement({self.name})")


def build_complete(N: int) -> Graph:
    if N < 2:
        raise ParameterError(f"complete graph needs N >= 2, got {N}")
    adj = ~np.eye(N, dtype=bool)
    return Graph(adj, f"complete(n={N})")


def build_paley(q: int, field: Optional[GaloisField] = None) -> Graph:
    """Paley graph: x ~ y iff x - y is a nonzero square in GF(q)."""
    if prime_power(q) is None:
        raise ParameterError(f"q={q} is not a prime power")
    if q % 4 != 1:
        raise ParameterError(f"q={q} is not 1 mod 4; adjacency would not be symmetric")
    field = field or GaloisField.of_order(q)
    if field.order != q:
        raise ParameterError(f"field has order {field.order}, expected {q}")
    elements = field.elements()
    adj = np.zeros((q, q), dtype=bool)
    for i, x in enumerate(elements):
        for s in field.nonzero_squares:
            adj[i, field.index(field.add(x, s))] = True
    return Graph(adj, f"paley(q={q})")


def build_latin(t: int, d: int) -> Graph:
    """Rook's graph (d=2) or the graph of the cyclic Latin square (d=3).

    Cells are adjacent when they share a row or a column, and for d=3 also
    when they carry the same symbol ``(row + col) mod t``.
    """
    if d not in (2, 3):
        raise ParameterError(f"only d in (2, 3) can be constructed, got d={d}")
    if t < d:
        raise ParameterError(f"need t >= d, got t={t}, d={d}")
    rows, cols = np.divmod(np.arange(t * t), t)
    adj = (rows[:, None] == rows[None, :]) | (cols[:, None] == cols[None, :])
    if d == 3:
        sym = (rows + cols) % t
        adj |= sym[:, None] == sym[None, :]
    np.fill_diagonal(adj, False)
    return Graph(adj, f"latin(t={t},d={d})")


def build_triangular(m: int) -> Graph:
    """Line graph of K_m: 2-subsets, adjacent when they intersect."""
    if m < 5:
        raise ParameterError(f"triangular graphs need m >= 5, got {m}")
    pairs = np.array(list(itertools.combinations(range(m), 2)))
    a, b = pairs[:, 0], pairs[:, 1]
    adj = (
        (a[:, None] == a[None, :])
        | (a[:, None] == b[None, :])
        | (b[:, None] == a[None, :])
        | (b[:, None] == b[None, :])
    )
    np.fill_diagonal(adj, False)
    return Graph(adj, f"triangular(m={m})")


def build_family(family: GraphFamily) -> Graph:
    if family.tag == "complete":
        return build_complete(family.n)
    if family.tag == "paley":
        return build_paley(family.q)
    if family.tag == "latin":
        return build_latin(family.t, family.d)
    return build_triangular(family.m)


def common_neighbor_counts(g: Graph, block: int = 512) -> np.ndarray:
    """Integer matrix of common-neighbour counts, computed a row block at a time."""
    a = g.adjacency.astype(np.float64)
    out = np.empty((g.N, g.N), dtype=np.int64)
    for start in range(0, g.N, block):
        out[start:start + block] = np.rint(a[start:start + block] @ a)
    return out


def verify_srg(g: Graph) -> SrgParams:
    """Count common neighbours over every vertex pair and return (N, k, lambda, mu).

    Raises NotRegularError for irregular input and NotStronglyRegularError,
    naming the first offending pair in row-major order, when the counts are
    not constant over adjacent or over non-adjacent pairs.
    """
    if g.N < 4:
        raise ValueError(f"need at least 4 vertices, got {g.N}")
    k = g.k
    counts = common_neighbor_counts(g)
    upper = np.triu(np.ones((g.N, g.N), dtype=bool), 1)
    adj_pairs = np.argwhere(g.adjacency & upper)
    non_pairs = np.argwhere(~g.adjacency & upper)
    if len(non_pairs) == 0:
        raise NotStronglyRegularError("no non-adjacent pairs (mu undefined)")
    if len(adj_pairs) == 0:
        raise NotStronglyRegularError("no adjacent pairs (lambda undefined)")

    lam = counts[tuple(adj_pairs[0])]
    mu = counts[tuple(non_pairs[0])]
    bad_adj = adj_pairs[counts[adj_pairs[:, 0], adj_pairs[:, 1]] != lam]
    bad_non = non_pairs[counts[non_pairs[:, 0], non_pairs[:, 1]] != mu]
    offenders = [tuple(map(int, p)) for p in (bad_adj[:1].tolist() + bad_non[:1].tolist())]
    if offenders:
        u, v = min(offenders)
        kind = "adjacent" if g.adjacency[u, v] else "non-adjacent"
        expected = lam if g.adjacency[u, v] else mu
        raise NotStronglyRegularError(
            f"{kind} pair ({u}, {v}) has {counts[u, v]} common neighbours, expected {expected}",
            pair=(u, v),
        )
    return SrgParams(g.N, k, int(lam), int(mu))


# -- edge-list files ----------------------------------------------------------

PathOrFile = Union[str, Path, TextIO]


def format_edge_list(g: Graph, params: Optional[SrgParams] = None) -> str:
    """Header "N k lambda mu", then one "u v" line per edge with u < v, sorted.

    For graphs without an SRG parameter tuple (the complete graph) the
    missing entries are written as NA.
    """
    if params is None:
        try:
            params = verify_srg(g)
        except (NotStronglyRegularError, NotRegularError, ValueError):
            params = None
    if params is not None:
        header = "{} {} {} {}".format(*params.astuple())
    elif g.is_regular and g.k == g.N - 1:
        header = f"{g.N} {g.k} {g.N - 2} NA"
    else:
        header = f"{g.N} NA NA NA"
    buf = io.StringIO()
    buf.write(header + "\n")
    for u, v in g.edges():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def write_edge_list(g: Graph, dest: PathOrFile, params: Optional[SrgParams] = None) -> None:
    text = format_edge_list(g, params)
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def read_edge_list(src: PathOrFile) -> tuple[Graph, Optional[SrgParams]]:
    text = Path(src).read_text() if isinstance(src, (str, Path)) else src.read()
    lines = text.splitlines()
    head = lines[0].split()
    n = int(head[0])
    params = None if "NA" in head else SrgParams(*map(int, head))
    edges = [tuple(map(int, line.split())) for line in lines[1:] if line.strip()]
    return Graph.from_edges(n, edges), params
