"""Independent brute-force oracles for pinning expected values in tests.

Everything here is deliberately simple and separate from the library's
algorithmic paths: distances come from exhaustive permutation enumeration
with norms computed by direct numpy formulas, spectra from the
characteristic polynomial, connectivity from a hand-rolled BFS.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from gmmdist import Graph, SignedGraph, pad


def norm_values_direct(m: np.ndarray) -> dict[str, float]:
    """All acceptance norms of one matrix via direct formulas."""
    a = m.astype(np.float64)
    absa = np.abs(a)
    out = {
        "op:1": absa.sum(axis=0).max() if a.size else 0.0,
        "op:inf": absa.sum(axis=1).max() if a.size else 0.0,
        "ew:2": math.sqrt(float((a * a).sum())),
        "iso": 1.0 if absa.any() else 0.0,
    }
    if a.size:
        out["op:2"] = float(np.abs(np.linalg.eigvalsh(a)).max())
        out["absop:2"] = float(np.abs(np.linalg.eigvalsh(absa)).max())
    else:
        out["op:2"] = 0.0
        out["absop:2"] = 0.0
    return out


ORACLE_SPECS = ("op:1", "op:2", "op:inf", "ew:2", "absop:2", "iso")


def brute_force_distances(g: Graph, h: Graph) -> dict[str, float]:
    """Minimum over all bijections for every oracle spec at once."""
    if g.n > h.n:
        g, h = h, g
    g = pad(g, h.n)
    n = h.n
    ag = g.adjacency_matrix().astype(np.int64)
    ah = h.adjacency_matrix().astype(np.int64)
    best = {s: math.inf for s in ORACLE_SPECS}
    idx = np.arange(n)
    inv = np.empty(n, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        inv[np.array(perm)] = idx
        m = ag[np.ix_(inv, inv)] - ah
        vals = norm_values_direct(m)
        for s in ORACLE_SPECS:
            if vals[s] < best[s]:
                best[s] = vals[s]
    return best


def brute_force_distance(g: Graph, h: Graph, key: str) -> float:
    return brute_force_distances(g, h)[key]


def spectral_radius_charpoly(m: np.ndarray) -> float:
    """Largest |eigenvalue| from the characteristic polynomial
    (Faddeev-LeVerrier coefficients, then polynomial roots)."""
    a = np.asarray(m, dtype=np.float64)
    n = a.shape[0]
    coeffs = [1.0]
    mk = np.zeros_like(a)
    for k in range(1, n + 1):
        mk = a @ mk + coeffs[-1] * np.eye(n)
        prod = a @ mk
        coeffs.append(-np.trace(prod) / k)
    roots = np.roots(coeffs)
    return float(np.abs(roots).max()) if n else 0.0


def bfs_component(n: int, edges: set, start: int) -> set[int]:
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def is_connected_bfs(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(bfs_component(g.n, set(g.edges), 0)) == g.n


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5,
                 max_degree: int | None = None) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        edges = {e for e in pairs if rng.random() < p}
        g = Graph(n, edges=edges)
        if max_degree is None or g.max_degree() <= max_degree:
            return g


def random_signed(rng: np.random.Generator, n: int,
                  p_pos: float = 0.25, p_neg: float = 0.25) -> SignedGraph:
    pos, neg = set(), set()
    for e in itertools.combinations(range(n), 2):
        r = rng.random()
        if r < p_pos:
            pos.add(e)
        elif r < p_pos + p_neg:
            neg.add(e)
    return SignedGraph(n, pos=pos, neg=neg)


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    return Graph(g.n, edges={(perm[u], perm[v]) for (u, v) in g.edges})


def graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class on exactly n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        lookup = {}
        for i, (u, v) in enumerate(pairs):
            pu, pv = perm[u], perm[v]
            lookup[i] = pairs.index((min(pu, pv), max(pu, pv)))
        perm_maps.append(lookup)
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        canon = min(
            sum(1 << pm[i] for i in range(len(pairs)) if mask >> i & 1)
            for pm in perm_maps)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Graph(n, edges={pairs[i] for i in range(len(pairs))
                                   if canon >> i & 1}))
    return out


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices, up to isomorphism."""
    from gmmdist import is_isomorphic

    found: list[Graph] = []
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rec() -> None:
        v = next((i for i in range(n) if deg[i] < 3), None)
        if v is None:
            g = Graph(n, edges=edges)
            if is_connected_bfs(g) and not any(is_isomorphic(g, r) for r in found):
                found.append(g)
            return
        need = 3 - deg[v]
        cands = [u for u in range(v + 1, n) if deg[u] < 3]
        if len(cands) < need:
            return
        for combo in itertools.combinations(cands, need):
            for u in combo:
                deg[u] += 1
                edges.append((v, u))
            deg[v] += need
            rec()
            deg[v] -= need
            for u in combo:
                deg[u] -= 1
                edges.pop()

    rec()
    return found


def color_preserving_distance(cg, ch, spec) -> float:
    """Exhaustive minimum over color-preserving bijections."""
    from gmmdist import Alignment, apply_alignment, mismatch, mismatch_norm

    n = cg.n
    best = math.inf
    for perm in itertools.permutations(range(n)):
        if any(cg.colors[v] != ch.colors[perm[v]] for v in range(n)):
            continue
        d = mismatch(apply_alignment(cg.graph, Alignment(perm, n)), ch.graph)
        best = min(best, mismatch_norm(d, spec).value)
    return best
