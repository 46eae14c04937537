"""Core data model: graphs, signed graphs, alignments, and matrix views.

Vertices are dense integer indices 0..n-1. Edge sets are stored canonically
with u < v, and all set operations are exact over integers. Every type is an
immutable value after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


def _canonical_edges(n: int, edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    canon = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        canon.add((u, v) if u < v else (v, u))
    return frozenset(canon)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge] = frozenset()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", _canonical_edges(self.n, self.edges))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise ValueError("labels length must equal vertex count")
            object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {w if u == v else u for (u, w) in self.edges if v in (u, w)}

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return a

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class SignedGraph:
    """Graph with disjoint positive and negative edge sets (weights +1/-1)."""

    n: int
    pos: frozenset[Edge] = frozenset()
    neg: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        pos = _canonical_edges(self.n, self.pos)
        neg = _canonical_edges(self.n, self.neg)
        if pos & neg:
            raise ValueError("an edge cannot be both positive and negative")
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    @property
    def edges(self) -> frozenset[Edge]:
        return self.pos | self.neg

    @property
    def m(self) -> int:
        return len(self.pos) + len(self.neg)

    def is_empty(self) -> bool:
        return not self.pos and not self.neg

    def sign(self, u: int, v: int) -> int:
        e = (min(u, v), max(u, v))
        if e in self.pos:
            return 1
        if e in self.neg:
            return -1
        return 0

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def support(self) -> list[int]:
        """Vertices incident to at least one signed edge, ascending."""
        seen = set()
        for u, v in self.edges:
            seen.add(u)
            seen.add(v)
        return sorted(seen)


@dataclass(frozen=True)
class Alignment:
    """Injective vertex map from a source graph into a target graph."""

    mapping: tuple[int, ...]
    target_n: int

    def __post_init__(self) -> None:
        mapping = tuple(int(x) for x in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(set(mapping)) != len(mapping):
            raise ValueError("alignment is not injective")
        if any(not (0 <= x < self.target_n) for x in mapping):
            raise ValueError("alignment image outside target vertex range")

    @classmethod
    def identity(cls, n: int) -> "Alignment":
        return cls(tuple(range(n)), n)

    def __len__(self) -> int:
        return len(self.mapping)

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def is_bijection(self) -> bool:
        return len(self.mapping) == self.target_n


@dataclass(frozen=True, eq=False)
class SignedMatrix:
    """Dense square real matrix, typically the adjacency or Laplacian of a signed graph."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def is_symmetric(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.entries - self.entries.T) <= tol))


@dataclass(frozen=True)
class ColoredGraph:
    """Graph with one positive integer color per vertex."""

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        if len(colors) != self.graph.n:
            raise ValueError("colors length must equal vertex count")
        if any(c < 1 for c in colors):
            raise ValueError("colors must be positive integers")
        object.__setattr__(self, "colors", colors)

    @property
    def n(self) -> int:
        return self.graph.n

    def color_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for c in self.colors:
            hist[c] = hist.get(c, 0) + 1
        return hist


# ---------------------------------------------------------------------------
# Operations


def mismatch(g: Graph, h: Graph) -> SignedGraph:
    """Signed difference of two graphs on the same vertex set.

    Positive edges are in g but not h, negative edges in h but not g, so the
    adjacency matrix of the result equals A_g - A_h.
    """
    if g.n != h.n:
        raise ValueError("vertex sets differ")
    return SignedGraph(g.n, pos=g.edges - h.edges, neg=h.edges - g.edges)


def apply_alignment(g: Graph, pi: Alignment) -> Graph:
    """Image of g under an injective vertex map, on the target's vertex set."""
    if len(pi) != g.n:
        raise ValueError("alignment length must equal source vertex count")
    if pi.target_n < g.n:
        raise ValueError("target too small for injective image")
    return Graph(pi.target_n, edges={(pi[u], pi[v]) for (u, v) in g.edges})


def signed_sum(d: SignedGraph, g: SignedGraph) -> SignedGraph:
    """Sum of signed graphs: union with opposite-sign cancellation."""
    if d.n != g.n:
        raise ValueError("vertex sets differ")
    pos_union = d.pos | g.pos
    neg_union = d.neg | g.neg
    return SignedGraph(d.n, pos=pos_union - neg_union, neg=neg_union - pos_union)


def negate(d: SignedGraph) -> SignedGraph:
    """Flip the sign of every edge."""
    return SignedGraph(d.n, pos=d.neg, neg=d.pos)


def pad(g: Graph, n: int) -> Graph:
    """Extend a graph with isolated vertices up to order n."""
    if n < g.n:
        raise ValueError(f"cannot pad graph of order {g.n} down to {n}")
    return Graph(n, edges=g.edges, labels=None)


def adjacency(d: SignedGraph) -> SignedMatrix:
    """Signed adjacency matrix: +1/-1 on signed edges, 0 elsewhere."""
    a = np.zeros((d.n, d.n), dtype=np.int64)
    for u, v in d.pos:
        a[u, v] = 1
        a[v, u] = 1
    for u, v in d.neg:
        a[u, v] = -1
        a[v, u] = -1
    return SignedMatrix(a)


def laplacian(d: SignedGraph) -> SignedMatrix:
    """Signed Laplacian: off-diagonal -sign(vw), diagonal sum of incident signs."""
    return SignedMatrix(laplacian_from_adjacency(adjacency(d).entries))


def laplacian_from_adjacency(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    lap = -a.astype(np.int64 if a.dtype.kind in "iub" else np.float64)
    np.fill_diagonal(lap, a.sum(axis=1) - np.diag(a))
    return lap


def component_vertex_sets(d: SignedGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components carrying edges, smallest-first.

    Isolated vertices are dropped: they cannot affect any padding-invariant
    norm and only components with edges matter for the evaluators.
    """
    parent = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for u, v in d.edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return sorted(tuple(sorted(g)) for g in groups.values())


def components(d: SignedGraph) -> list[SignedGraph]:
    """Connected components of the edge-carrying part, reindexed compactly."""
    out = []
    for verts in component_vertex_sets(d):
        index = {v: i for i, v in enumerate(verts)}
        pos = {(index[u], index[v]) for (u, v) in d.pos if u in index}
        neg = {(index[u], index[v]) for (u, v) in d.neg if u in index}
        out.append(SignedGraph(len(verts), pos=pos, neg=neg))
    return out


def is_star_forest(d: SignedGraph) -> bool:
    """True when every edge-carrying component is a star (K2 counts)."""
    deg: dict[int, int] = {}
    for u, v in d.edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    for verts in component_vertex_sets(d):
        centers = sum(1 for v in verts if deg.get(v, 0) >= 2)
        n_edges = sum(1 for (u, v) in d.edges if u in set(verts))
        if centers > 1 or n_edges != len(verts) - 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Small graph factories


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, edges={(u, v) for u in range(n) for v in range(u + 1, n)})


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, edges={(i, (i + 1) % n) for i in range(n)})


def path_graph(n: int) -> Graph:
    return Graph(n, edges={(i, i + 1) for i in range(n - 1)})


def star_graph(c: int) -> Graph:
    """Star with center 0 and c leaves."""
    return Graph(c + 1, edges={(0, i) for i in range(1, c + 1)})


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, edges={(i, a + j) for i in range(a) for j in range(b)})


def petersen_graph() -> Graph:
    outer = {(i, (i + 1) % 5) for i in range(5)}
    spokes = {(i, i + 5) for i in range(5)}
    inner = {(5 + i, 5 + (i + 2) % 5) for i in range(5)}
    return Graph(10, edges=outer | spokes | inner)
