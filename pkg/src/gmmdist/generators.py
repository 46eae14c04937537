"""Hardness-reduction instance families and brute-force source-problem oracles.

Each generator builds the exact pair of graphs used by one reduction, records
the planted answer (decided by a brute-force oracle when the instance is
small enough) and the claimed distance gap, and exposes enough construction
detail in the instance metadata to rebuild the proof's explicit alignments.
All constructions are deterministic: edges are processed in sorted order and
fresh vertex ids are allocated in documented blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import bound_b
from .graphs import (Alignment, ColoredGraph, Graph, SignedGraph, cycle_graph,
                     path_graph)

HAMILTON_CAP = 14
MAXCUT_CAP = 20
THREEPARTITION_CAP_M = 4


@dataclass(frozen=True)
class InstanceMeta:
    """Provenance of a generated pair: source problem, planted answer, gap."""

    source: str
    answer: str
    gap_low_c: int | None = None
    gap_high_c: int | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.answer not in ("yes", "no", "unknown"):
            raise ValueError("answer must be yes/no/unknown")

    def gap_expressions(self) -> dict | None:
        if self.gap_low_c is None:
            return None
        return {"low": f"b_p({self.gap_low_c})", "high": f"b_p({self.gap_high_c})"}

    def gap_at(self, p: float) -> tuple[float, float] | None:
        if self.gap_low_c is None:
            return None
        return bound_b(p, self.gap_low_c), bound_b(p, self.gap_high_c)


@dataclass(frozen=True)
class ReductionInstance:
    """A generated pair of equal-order graphs plus optional colored originals."""

    left: Graph
    right: Graph
    meta: InstanceMeta
    colored: tuple[ColoredGraph, ColoredGraph] | None = None

    def __post_init__(self) -> None:
        if self.left.n != self.right.n:
            raise ValueError("generated pairs must have equal order")


@dataclass(frozen=True)
class ThreePartitionInstance:
    """3m positive integers summing to m*A, each strictly between A/4 and A/2."""

    A: int
    items: tuple[int, ...]

    def __post_init__(self) -> None:
        items = tuple(int(a) for a in self.items)
        object.__setattr__(self, "items", items)
        if len(items) == 0 or len(items) % 3 != 0:
            raise ValueError("need 3m items")
        m = len(items) // 3
        if sum(items) != m * self.A:
            raise ValueError("items must sum to m*A")
        if any(not (self.A / 4 < a < self.A / 2) for a in items):
            raise ValueError("every item must lie strictly between A/4 and A/2")
        if self.A < 8:
            raise ValueError("instances with A < 8 are excluded (trivial or empty)")

    @property
    def m(self) -> int:
        return len(self.items) // 3


# ---------------------------------------------------------------------------
# Brute-force source-problem oracles


def find_hamiltonian_cycle(g: Graph, cap: int = HAMILTON_CAP) -> list[int] | None:
    """A Hamiltonian cycle as a vertex sequence, or None. Backtracking search."""
    n = g.n
    if n > cap:
        raise ValueError(f"hamiltonian search capped at {cap} vertices")
    if n < 3:
        return None
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    if any(len(a) < 2 for a in adj):
        return None
    path = [0]
    visited = [False] * n
    visited[0] = True

    def dfs(v: int) -> bool:
        if len(path) == n:
            return 0 in adj[v]
        for u in adj[v]:
            if visited[u]:
                continue
            visited[u] = True
            path.append(u)
            if dfs(u):
                return True
            path.pop()
            visited[u] = False
        return False

    return list(path) if dfs(0) else None


def brute_force_hamcycle(g: Graph, cap: int = HAMILTON_CAP) -> bool:
    """True iff the graph has a Hamiltonian cycle."""
    return find_hamiltonian_cycle(g, cap=cap) is not None


def find_hamiltonian_path(g: Graph, cap: int = HAMILTON_CAP) -> list[int] | None:
    """A Hamiltonian path as a vertex sequence, or None."""
    n = g.n
    if n > cap:
        raise ValueError(f"hamiltonian search capped at {cap} vertices")
    if n == 0:
        return None
    if n == 1:
        return [0]
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    visited = [False] * n

    def dfs(v: int, path: list[int]) -> bool:
        if len(path) == n:
            return True
        for u in adj[v]:
            if visited[u]:
                continue
            visited[u] = True
            path.append(u)
            if dfs(u, path):
                return True
            path.pop()
            visited[u] = False
        return False

    for start in range(n):
        path = [start]
        visited = [False] * n
        visited[start] = True
        if dfs(start, path):
            return path
    return None


def brute_force_maxcut(g: Graph, cap: int = MAXCUT_CAP) -> int:
    """Exact maximum cut value over all bipartitions (vertex n-1 side fixed)."""
    if g.n > cap:
        raise ValueError(f"max-cut enumeration capped at {cap} vertices")
    if g.m == 0:
        return 0
    n = g.n
    masks = np.arange(1 << (n - 1), dtype=np.uint32)
    total = np.zeros(masks.shape[0], dtype=np.int32)
    for u, v in g.sorted_edges():
        side_u = (masks >> u) & 1 if u < n - 1 else np.zeros_like(masks)
        side_v = (masks >> v) & 1 if v < n - 1 else np.zeros_like(masks)
        total += (side_u != side_v)
    return int(total.max())


def find_threepartition(inst: ThreePartitionInstance,
                        cap_m: int = THREEPARTITION_CAP_M) -> list[tuple[int, int, int]] | None:
    """A partition into triples of item indices each summing to A, or None."""
    if inst.m > cap_m:
        raise ValueError(f"3-partition enumeration capped at m={cap_m}")
    items = inst.items
    used = [False] * len(items)
    groups: list[tuple[int, int, int]] = []

    def rec() -> bool:
        try:
            i = used.index(False)
        except ValueError:
            return True
        used[i] = True
        rest = [j for j in range(i + 1, len(items)) if not used[j]]
        for x in range(len(rest)):
            j = rest[x]
            used[j] = True
            for y in range(x + 1, len(rest)):
                k = rest[y]
                if items[i] + items[j] + items[k] == inst.A:
                    used[k] = True
                    groups.append((i, j, k))
                    if rec():
                        return True
                    groups.pop()
                    used[k] = False
            used[j] = False
        used[i] = False
        return False

    return list(groups) if rec() else None


def brute_force_threepartition(inst: ThreePartitionInstance,
                               cap_m: int = THREEPARTITION_CAP_M) -> bool:
    """True iff a valid grouping into triples summing to A exists."""
    return find_threepartition(inst, cap_m=cap_m) is not None


def _require_cubic(g: Graph) -> None:
    if g.n == 0 or any(d != 3 for d in g.degrees()):
        raise ValueError("construction needs a 3-regular input graph")


# ---------------------------------------------------------------------------
# Hamiltonian cycle reduction: cycle vs 3-regular graph


def gen_hamcycle(g: Graph, oracle_cap: int = HAMILTON_CAP) -> ReductionInstance:
    """Pair (C_n, G) for 3-regular G: distance <= b_p(1) iff G is Hamiltonian,
    and >= b_p(3) otherwise."""
    _require_cubic(g)
    n = g.n
    answer = "unknown"
    if n <= oracle_cap:
        answer = "yes" if brute_force_hamcycle(g) else "no"
    meta = InstanceMeta("hamiltonian-cycle-3regular", answer, 1, 3, {"n": n})
    return ReductionInstance(cycle_graph(n), g, meta)


# ---------------------------------------------------------------------------
# Path variant: path vs modified 3-regular graph


def gen_path_variant(g: Graph, v: int, e: tuple[int, int],
                     oracle_cap: int = HAMILTON_CAP) -> ReductionInstance:
    """Pair (P_{n+2}, G_e) where G_e removes one edge at v and hangs a new
    leaf on each separated endpoint. Two variants built with distinct edges
    at v cover the Hamiltonian-cycle question for g."""
    _require_cubic(g)
    e = (min(e), max(e))
    if v not in e:
        raise ValueError(f"edge {e} is not incident to vertex {v}")
    if e not in g.edges:
        raise ValueError(f"{e} is not an edge of the graph")
    n = g.n
    u = e[0] if e[1] == v else e[1]
    edges = set(g.edges) - {e}
    edges.add((v, n))
    edges.add((u, n + 1))
    variant = Graph(n + 2, edges=edges)
    answer = "unknown"
    if n + 2 <= oracle_cap:
        answer = "yes" if find_hamiltonian_path(variant) is not None else "no"
    meta = InstanceMeta("hamiltonian-path-variant", answer, 1, 2,
                        {"n": n, "v": v, "removed_edge": list(e)})
    return ReductionInstance(path_graph(n + 2), variant, meta)


# ---------------------------------------------------------------------------
# 3-Partition trees

_T1_ROLES = ("black", "red", "orange", "pink", "blue")


def _tree_layout(inst: ThreePartitionInstance) -> dict:
    """Shared id-block arithmetic for both trees.

    Blacks come first (paths contiguous), then 3 reds per black, then one
    orange per black, then the pink/blue decorations.
    """
    mA = inst.m * inst.A
    return {"mA": mA, "red_start": mA, "orange_start": 4 * mA,
            "deco_start": 5 * mA, "inner_total": mA - 6 * inst.m}


def gen_threepartition_trees(inst: ThreePartitionInstance) -> ReductionInstance:
    """Bounded-degree trees T1, T2 whose distance is b_p(2) exactly when the
    3-partition instance is solvable (max degree 8 in T1 and 6 in T2).

    T1: one path of a_i blacks per item, 3 red + 1 orange leaf per black,
    paths chained through orange leaves, 2 pinks per inner path node, one
    blue leaf per pink. T2: m paths of A blacks with the same red/orange
    decoration, chained through first red leaves, blues attached to degree-1
    reds, one pink leaf per blue.
    """
    m, A, items = inst.m, inst.A, inst.items
    lay = _tree_layout(inst)
    mA = lay["mA"]

    def red(b: int, j: int) -> int:
        return lay["red_start"] + 3 * b + j

    def orange(b: int) -> int:
        return lay["orange_start"] + b

    # T1
    edges1: set[tuple[int, int]] = set()
    paths1: list[list[int]] = []
    base = 0
    for a in items:
        blacks = list(range(base, base + a))
        paths1.append(blacks)
        edges1.update((blacks[i], blacks[i + 1]) for i in range(a - 1))
        base += a
    for b in range(mA):
        edges1.update((b, red(b, j)) for j in range(3))
        edges1.add((b, orange(b)))
    for i in range(3 * m - 1):
        edges1.add((orange(paths1[i][0]), orange(paths1[i + 1][-1])))
    inner1 = [b for path in paths1 for b in path[1:-1]]
    pink_start1 = lay["deco_start"]
    blue_start1 = pink_start1 + 2 * len(inner1)
    for idx, b in enumerate(inner1):
        for j in range(2):
            pk = pink_start1 + 2 * idx + j
            edges1.add((b, pk))
            edges1.add((pk, blue_start1 + 2 * idx + j))
    n1 = blue_start1 + 2 * len(inner1)
    t1 = Graph(n1, edges=edges1)

    # T2
    edges2: set[tuple[int, int]] = set()
    paths2 = [list(range(i * A, (i + 1) * A)) for i in range(m)]
    for blacks in paths2:
        edges2.update((blacks[i], blacks[i + 1]) for i in range(A - 1))
    for b in range(mA):
        edges2.update((b, red(b, j)) for j in range(3))
        edges2.add((b, orange(b)))
    chain_reds = set()
    for i in range(m - 1):
        r1, r2 = red(paths2[i][0], 0), red(paths2[i + 1][-1], 0)
        edges2.add((r1, r2))
        chain_reds.update((r1, r2))
    n_blue = 2 * len(inner1)
    hosts = [r for r in range(lay["red_start"], lay["orange_start"])
             if r not in chain_reds][:n_blue]
    blue_start2 = lay["deco_start"]
    pink_start2 = blue_start2 + n_blue
    for j, host in enumerate(hosts):
        edges2.add((host, blue_start2 + j))
        edges2.add((blue_start2 + j, pink_start2 + j))
    n2 = pink_start2 + n_blue
    t2 = Graph(n2, edges=edges2)

    answer = "unknown"
    if m <= THREEPARTITION_CAP_M:
        answer = "yes" if brute_force_threepartition(inst) else "no"
    roles1 = (["black"] * mA + ["red"] * (3 * mA) + ["orange"] * mA
              + ["pink"] * (2 * len(inner1)) + ["blue"] * (2 * len(inner1)))
    roles2 = (["black"] * mA + ["red"] * (3 * mA) + ["orange"] * mA
              + ["blue"] * n_blue + ["pink"] * n_blue)
    meta = InstanceMeta(
        "three-partition-trees", answer, 2, 3,
        {"A": A, "m": m, "items": list(items),
         "roles_left": roles1, "roles_right": roles2,
         "blue_hosts_right": hosts, "inner_blacks_left": inner1})
    return ReductionInstance(t1, t2, meta)


def partition_alignment(instance: ReductionInstance,
                        partition: list[tuple[int, int, int]]) -> Alignment:
    """The proof's explicit alignment of T1 into T2 for a valid partition.

    Packs the three paths of each group contiguously into one T2 path,
    carries reds and oranges to the image black's decorations, and matches
    blues (hence pinks) in construction order. Its mismatch graph is a
    disjoint union of stars with maximum mismatch count 2.
    """
    ex = instance.meta.extra
    if "items" not in ex or "A" not in ex:
        raise ValueError("instance was not produced by gen_threepartition_trees")
    items = list(ex["items"])
    A, m = int(ex["A"]), int(ex["m"])
    inst = ThreePartitionInstance(A, tuple(items))
    groups = sorted(tuple(sorted(t)) for t in partition)
    flat = [i for t in groups for i in t]
    if sorted(flat) != list(range(3 * m)):
        raise ValueError("partition must cover every item index exactly once")
    for t in groups:
        if sum(items[i] for i in t) != A:
            raise ValueError(f"group {t} does not sum to A={A}")

    lay = _tree_layout(inst)
    mA = lay["mA"]

    def red(b: int, j: int) -> int:
        return lay["red_start"] + 3 * b + j

    def orange(b: int) -> int:
        return lay["orange_start"] + b

    starts = [0]
    for a in items:
        starts.append(starts[-1] + a)
    inner1 = list(ex["inner_blacks_left"])
    n1 = instance.left.n
    n2 = instance.right.n
    pi = [-1] * n1

    for gi, triple in enumerate(groups):
        offset = 0
        for t in triple:
            for idx in range(items[t]):
                b = starts[t] + idx
                target = gi * A + offset + idx
                pi[b] = target
                for j in range(3):
                    pi[red(b, j)] = red(target, j)
                pi[orange(b)] = orange(target)
            offset += items[t]

    pink_start1 = lay["deco_start"]
    blue_start1 = pink_start1 + 2 * len(inner1)
    blue_start2 = lay["deco_start"]
    pink_start2 = blue_start2 + 2 * len(inner1)
    for j in range(2 * len(inner1)):
        pi[blue_start1 + j] = blue_start2 + j
        pi[pink_start1 + j] = pink_start2 + j
    return Alignment(tuple(pi), n2)


# ---------------------------------------------------------------------------
# Color conversion: colored distance -> plain distance


def convert_colored(cg: ColoredGraph) -> Graph:
    """Attach color(v) * n^2 fresh leaves to every vertex v."""
    n = cg.n
    edges = set(cg.graph.edges)
    nxt = n
    for v in range(n):
        for _ in range(cg.colors[v] * n * n):
            edges.add((v, nxt))
            nxt += 1
    return Graph(nxt, edges=edges)


def gen_color_conversion(cg: ColoredGraph, ch: ColoredGraph) -> ReductionInstance:
    """Plain pair whose distance equals the color-preserving distance of the
    colored originals; the leaf decorations make any color-breaking alignment
    more expensive than the worst color-preserving one."""
    if cg.n != ch.n:
        raise ValueError("colored graphs must have the same order")
    if cg.color_histogram() != ch.color_histogram():
        raise ValueError("colored graphs must have the same color histogram")
    left = convert_colored(cg)
    right = convert_colored(ch)
    meta = InstanceMeta(
        "color-distance-conversion", "unknown", None, None,
        {"n": cg.n, "colors_left": list(cg.colors), "colors_right": list(ch.colors)})
    return ReductionInstance(left, right, meta, colored=(cg, ch))


# ---------------------------------------------------------------------------
# Additive-approximation gadget


def choose_gadget_params(p: float, eps: float) -> tuple[int, int]:
    """Smallest m with b_p(2m) > b_p(m) + eps, then smallest o with
    b_p(ceil(o/2)) >= b_p(2m)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    m = 1
    while not bound_b(p, 2 * m) > bound_b(p, m) + eps:
        m += 1
        if m > 10 ** 7:
            raise ValueError(f"no finite m satisfies gap for p={p}, eps={eps}")
    o = 1
    while not bound_b(p, math.ceil(o / 2)) >= bound_b(p, 2 * m):
        o += 1
    return m, o


def _gadget_size(m: int, o: int) -> int:
    return 2 * m + (m - 1) * o


def _gadget_layout(base: int, m: int, o: int) -> dict:
    side1 = list(range(base, base + m))
    side2 = list(range(base + m, base + 2 * m))
    reds = [list(range(base + 2 * m + i * o, base + 2 * m + (i + 1) * o))
            for i in range(m - 1)]
    return {"side1": side1, "side2": side2, "reds": reds}


def _add_gadget(edges: set, base: int, m: int, o: int,
                v: int | None, w: int | None) -> None:
    lay = _gadget_layout(base, m, o)
    for i, group in enumerate(lay["reds"]):
        for r in group:
            edges.add((lay["side1"][i], r))
            edges.add((lay["side1"][i + 1], r))
            edges.add((lay["side2"][i], r))
            edges.add((lay["side2"][i + 1], r))
    if v is not None:
        edges.update((v, b) for b in lay["side1"])
    if w is not None:
        edges.update((w, b) for b in lay["side2"])


BLACK, BLUE, RED = 1, 2, 3


def gen_additive_gadget(g: Graph, p: float, eps: float,
                        convert_cap: int = 0) -> ReductionInstance:
    """Gadget-expanded colored pair (G', C'_n) scaling the Hamiltonian-cycle
    gap past any additive error eps.

    Every edge of g and of C_n is replaced by a gadget of 2m blue and
    (m-1)*o red nodes whose two blue sides attach to the two endpoints;
    n/2 isolated gadgets pad C'_n so the orders match (a 3-regular graph has
    n/2 more edges than the cycle). The conversion to plain graphs is only
    materialized when its order stays within convert_cap.
    """
    _require_cubic(g)
    n = g.n
    m, o = choose_gadget_params(p, eps)
    size = _gadget_size(m, o)
    g_edges = g.sorted_edges()
    c_edges = cycle_graph(n).sorted_edges()
    iso_count = len(g_edges) - len(c_edges)

    edges_l: set[tuple[int, int]] = set()
    for t, (v, w) in enumerate(g_edges):
        _add_gadget(edges_l, n + t * size, m, o, v, w)
    left_plain = Graph(n + len(g_edges) * size, edges=edges_l)

    edges_r: set[tuple[int, int]] = set()
    for t, (v, w) in enumerate(c_edges):
        _add_gadget(edges_r, n + t * size, m, o, v, w)
    for t in range(iso_count):
        _add_gadget(edges_r, n + (len(c_edges) + t) * size, m, o, None, None)
    right_plain = Graph(n + (len(c_edges) + iso_count) * size, edges=edges_r)

    def colors_for(total: int, gadgets: int) -> tuple[int, ...]:
        cols = [BLACK] * n
        for _ in range(gadgets):
            cols += [BLUE] * (2 * m) + [RED] * ((m - 1) * o)
        assert len(cols) == total
        return tuple(cols)

    colored_l = ColoredGraph(left_plain, colors_for(left_plain.n, len(g_edges)))
    colored_r = ColoredGraph(right_plain, colors_for(right_plain.n,
                                                     len(c_edges) + iso_count))

    answer = "unknown"
    if n <= HAMILTON_CAP:
        answer = "yes" if brute_force_hamcycle(g) else "no"
    extra = {"n": n, "m": m, "o": o, "gadget_size": size,
             "gadgets_left": len(g_edges),
             "gadgets_right": len(c_edges) + iso_count,
             "gadget_sides_left": 2 * len(g_edges),
             "gadget_sides_right": 2 * (len(c_edges) + iso_count),
             "isolated_gadgets": iso_count,
             "source_edges": [list(e) for e in g_edges],
             "color_map": {"black": BLACK, "blue": BLUE, "red": RED},
             "converted": False}

    left, right = left_plain, right_plain
    conv_order = left_plain.n + left_plain.n ** 2 * sum(colored_l.colors)
    if convert_cap and conv_order <= convert_cap:
        conv = gen_color_conversion(colored_l, colored_r)
        left, right = conv.left, conv.right
        extra["converted"] = True
    meta = InstanceMeta("additive-approximation-gadget", answer,
                        m, 2 * m, extra)
    return ReductionInstance(left, right, meta, colored=(colored_l, colored_r))


def additive_gadget_alignment(instance: ReductionInstance,
                              cycle: list[int]) -> Alignment:
    """The proof's alignment of G' onto C'_n for a Hamiltonian cycle of the
    source graph: cycle edges carry their gadgets onto cycle-edge gadgets,
    the leftover perfect matching goes to the isolated gadgets; every black
    keeps exactly the m blue mismatches of its matched edge."""
    ex = instance.meta.extra
    if "gadget_size" not in ex:
        raise ValueError("instance was not produced by gen_additive_gadget")
    n, m, o, size = ex["n"], ex["m"], ex["o"], ex["gadget_size"]
    g_edges = [tuple(e) for e in ex["source_edges"]]
    c_edges = cycle_graph(n).sorted_edges()
    c_index = {e: t for t, e in enumerate(c_edges)}

    if sorted(cycle) != list(range(n)):
        raise ValueError("cycle must visit every source vertex exactly once")
    pos = {v: i for i, v in enumerate(cycle)}
    cycle_pairs = {}
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        cycle_pairs[(min(a, b), max(a, b))] = (min(pos[a], pos[b]), max(pos[a], pos[b]))

    total = instance.colored[0].n if instance.colored else instance.left.n
    pi = [-1] * total
    for v in range(n):
        pi[v] = pos[v]
    iso_next = len(c_edges)
    for t, (v, w) in enumerate(g_edges):
        src = _gadget_layout(n + t * size, m, o)
        if (v, w) in cycle_pairs:
            a, b = cycle_pairs[(v, w)]
            tgt = _gadget_layout(n + c_index[(a, b)] * size, m, o)
            swap = pos[v] != a
        else:
            tgt = _gadget_layout(n + iso_next * size, m, o)
            iso_next += 1
            swap = False
        s1, s2 = ("side2", "side1") if swap else ("side1", "side2")
        for x, y in zip(src["side1"], tgt[s1]):
            pi[x] = y
        for x, y in zip(src["side2"], tgt[s2]):
            pi[x] = y
        for gi, group in enumerate(src["reds"]):
            for x, y in zip(group, tgt["reds"][gi]):
                pi[x] = y
    target_n = instance.colored[1].n if instance.colored else instance.right.n
    return Alignment(tuple(pi), target_n)


# ---------------------------------------------------------------------------
# Cut-norm reduction


def alon_naor_matrix(g: Graph) -> np.ndarray:
    """2m x n ±1 pattern whose cut norm equals the max cut of g.

    Edges oriented from lower to higher index; edge i contributes a row pair
    (+1 at source, -1 at target) and its negation.
    """
    edges = g.sorted_edges()
    a = np.zeros((2 * len(edges), g.n), dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        a[2 * i, u] = 1
        a[2 * i, v] = -1
        a[2 * i + 1, v] = 1
        a[2 * i + 1, u] = -1
    return a


def cutnorm_block_matrix(g: Graph) -> np.ndarray:
    """Symmetric block matrix [[0, A], [A^T, 0]] with cut norm 2 * maxcut(g)."""
    a = alon_naor_matrix(g)
    two_m, n = a.shape
    b = np.zeros((two_m + n, two_m + n), dtype=np.int64)
    b[:two_m, two_m:] = a
    b[two_m:, :two_m] = a.T
    return b


def cutnorm_block_signed(g: Graph) -> SignedGraph:
    """The block matrix viewed as a signed graph on row plus column vertices."""
    b = cutnorm_block_matrix(g)
    pos = {(u, v) for u in range(b.shape[0]) for v in range(u + 1, b.shape[0])
           if b[u, v] == 1}
    neg = {(u, v) for u in range(b.shape[0]) for v in range(u + 1, b.shape[0])
           if b[u, v] == -1}
    return SignedGraph(b.shape[0], pos=pos, neg=neg)


def gen_cutnorm_instance(g: Graph, maxcut_cap: int = MAXCUT_CAP) -> ReductionInstance:
    """Pair (F, H) with cut-norm distance exactly twice the max cut of g.

    F and H take the positive respectively negative edges of the block
    signed graph, then vertex v_i receives i * (ceil(n^2/4) + n) identical
    leaves on both sides to pin down the alignment.
    """
    n = g.n
    delta = cutnorm_block_signed(g)
    two_m = 2 * g.m
    unit = math.ceil(n * n / 4) + n
    edges_f = set(delta.pos)
    edges_h = set(delta.neg)
    nxt = delta.n
    for i in range(1, n + 1):
        v = two_m + i - 1
        for _ in range(i * unit):
            edges_f.add((v, nxt))
            edges_h.add((v, nxt))
            nxt += 1
    f = Graph(nxt, edges=edges_f)
    h = Graph(nxt, edges=edges_h)
    extra = {"n": n, "block_order": delta.n, "leaf_unit": unit}
    if n <= maxcut_cap:
        extra["maxcut"] = brute_force_maxcut(g)
        extra["claimed_distance"] = 2 * extra["maxcut"]
    meta = InstanceMeta("max-cut-cut-norm", "unknown", None, None, extra)
    return ReductionInstance(f, h, meta)
