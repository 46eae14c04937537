"""Exact and approximate computation of mismatch-norm graph distances.

``exact_distance`` runs a branch-and-bound over vertex bijections: source
vertices are assigned in descending-degree order, candidate targets are
ordered by degree similarity, interchangeable targets (twins) are collapsed
to one representative, and subtrees are cut with per-vertex forced-mismatch
bounds. The incumbent is seeded by ``local_search``. When the two graphs
have different orders the smaller one is padded with isolated vertices,
which leaves every supported norm unchanged.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import BoundCertificate, bound_b, degree_lower_bound
from .graphs import (Alignment, Graph, apply_alignment,
                     laplacian_from_adjacency, mismatch, pad)
from .norms import (DEFAULT_CUT_CAP, CutNormInfeasible, NormSpec, NormValue,
                    abs_operator_norm, evaluate_matrix, mismatch_norm,
                    operator_norm)

DEFAULT_BUDGET = 10 ** 8
CUT_SEARCH_CAP = 12


@dataclass(frozen=True)
class SolveResult:
    """Distance value with witness alignment and search diagnostics."""

    value: float
    alignment: Alignment
    nodes_explored: int
    lower_bound_used: BoundCertificate
    exact: bool


@dataclass(frozen=True)
class Threshold:
    """Exactly represented rational threshold num/den for the decision problem."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num <= 0 or self.den <= 0:
            raise ValueError("threshold numerator and denominator must be positive")

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @classmethod
    def parse(cls, text: str) -> "Threshold":
        num, _, den = text.partition("/")
        return cls(int(num), int(den or "1"))


def _normalized_pair(g: Graph, h: Graph) -> tuple[Graph, Graph]:
    """Order so |g| <= |h| (distance is symmetric), then pad g up to |h|.

    Equal-order pairs are put in a canonical order so that dist(g, h) and
    dist(h, g) run the identical computation and return the identical float.
    """
    if g.n > h.n:
        g, h = h, g
    elif g.n == h.n and (g.m, sorted(g.edges)) > (h.m, sorted(h.edges)):
        g, h = h, g
    if g.n < h.n:
        g = pad(g, h.n)
    return g, h


def _aligned_mismatch_matrix(ag: np.ndarray, ah: np.ndarray, mapping: np.ndarray) -> np.ndarray:
    n = ah.shape[0]
    inv = np.empty(n, dtype=np.int64)
    inv[mapping] = np.arange(n)
    return ag[np.ix_(inv, inv)].astype(np.int64) - ah.astype(np.int64)


def _mapping_value(ag: np.ndarray, ah: np.ndarray, mapping: np.ndarray,
                   spec: NormSpec, cut_cap: int) -> float:
    """Mismatch-norm value of a full bijection, matching mismatch_norm()."""
    m = _aligned_mismatch_matrix(ag, ah, mapping)
    support = np.flatnonzero(np.any(m != 0, axis=0))
    if support.size == 0:
        return 0.0
    if spec.kind == "iso":
        return 1.0
    m = m[np.ix_(support, support)]
    if spec.laplacian:
        m = laplacian_from_adjacency(m)
    return evaluate_matrix(m, spec, cut_cap=cut_cap).value


def _root_certificate(g: Graph, h: Graph, spec: NormSpec) -> BoundCertificate:
    if spec.kind in ("op", "absop") and not spec.laplacian:
        return degree_lower_bound(g, h, spec.p)
    return BoundCertificate(0.0, "no alignment-free bound for this norm kind")


def _twin_masks(adj_rows: list[int], n: int) -> list[int]:
    """Bitmask per vertex of the vertices it can be swapped with.

    u and w are interchangeable when N(u) \\ {w} == N(w) \\ {u}: exchanging
    them is an automorphism, so exploring one of them as a target suffices.
    """
    masks = [0] * n
    for u in range(n):
        for w in range(u + 1, n):
            if adj_rows[u] & ~(1 << w) == adj_rows[w] & ~(1 << u):
                masks[u] |= 1 << w
                masks[w] |= 1 << u
    return masks


class _SwapState:
    """Aligned mismatch matrix with O(n) evaluation and apply of 2-swaps."""

    def __init__(self, ag: np.ndarray, ah: np.ndarray, mapping: np.ndarray):
        n = ah.shape[0]
        self.ag, self.ah = ag, ah
        self.mapping = mapping.copy()
        self.inv = np.empty(n, dtype=np.int64)
        self.inv[mapping] = np.arange(n)
        self.m = ag[np.ix_(self.inv, self.inv)] - ah
        self.abs_m = np.abs(self.m)
        self.mc = self.abs_m.sum(axis=1, dtype=np.int64)
        self.mmc = int(self.mc.max())
        self.tot = int(self.mc.sum())

    def probe(self, a: int, b: int, fast_reject: bool = False):
        """Objective after swapping positions a and b, or None when a cheap
        test already shows the swap cannot improve (fast_reject mode)."""
        ag, ah, inv = self.ag, self.ah, self.inv
        ga, gb = inv[a], inv[b]
        row_a = ag[gb][inv]
        row_a[a] = 0
        row_a[b] = ag[gb, ga]
        row_b = ag[ga][inv]
        row_b[b] = 0
        row_b[a] = ag[ga, gb]
        new_a = row_a - ah[a]
        new_b = row_b - ah[b]
        abs_a = np.abs(new_a)
        abs_b = np.abs(new_b)
        s_a = int(abs_a.sum())
        s_b = int(abs_b.sum())
        if fast_reject:
            # by symmetry the total changes by twice the row-sum delta,
            # minus the double-counted (a,b) entry; the new row sums bound
            # the new maximum from below
            delta_tot = 2 * (s_a + s_b - int(self.mc[a]) - int(self.mc[b])
                             - int(abs_a[b]) + int(self.abs_m[a, b]))
            if delta_tot >= 0 and max(s_a, s_b) >= self.mmc:
                return None, None
        mc_new = self.mc + (abs_a - self.abs_m[a]) + (abs_b - self.abs_m[b])
        mc_new[a] = s_a
        mc_new[b] = s_b
        return (int(mc_new.max()), int(mc_new.sum())), (new_a, new_b, mc_new)

    def apply(self, a: int, b: int, probe_data) -> None:
        new_a, new_b, mc_new = probe_data
        m, abs_m, inv = self.m, self.abs_m, self.inv
        m[a, :] = new_a
        m[:, a] = new_a
        m[b, :] = new_b
        m[:, b] = new_b
        abs_m[a, :] = np.abs(new_a)
        abs_m[:, a] = abs_m[a, :]
        abs_m[b, :] = np.abs(new_b)
        abs_m[:, b] = abs_m[b, :]
        ga, gb = inv[a], inv[b]
        inv[a], inv[b] = gb, ga
        self.mapping[ga], self.mapping[gb] = b, a
        self.mc = mc_new
        self.mmc = int(mc_new.max())
        self.tot = int(mc_new.sum())


def local_search(g: Graph, h: Graph, spec: NormSpec, seed: int = 0,
                 max_steps: int = 20000, stall: int | None = None,
                 polish: bool = False, cut_cap: int = 26) -> SolveResult:
    """Upper bound from 2-swap hill climbing off a degree-sorted greedy start.

    The climb minimizes (max per-vertex mismatch count, total mismatches)
    lexicographically, which is cheap to update per swap; swap candidates are
    biased toward the current worst vertices. With ``polish`` the climb
    finishes with full first-improvement sweeps until no 2-swap helps. The
    requested norm is evaluated once on the final alignment; the result is
    never better than the true distance, so it seeds the exact search.
    """
    g, h = _normalized_pair(g, h)
    n = g.n
    cert = BoundCertificate(0.0, "heuristic upper bound only")
    if n == 0:
        return SolveResult(0.0, Alignment((), 0), 0, cert, False)
    ag = g.adjacency_matrix()
    ah = h.adjacency_matrix()
    rng = np.random.default_rng(seed)

    # sort both sides by degree, then neighbor-degree profile, and pair in
    # order; random keys break ties differently per seed
    def sort_keys(graph: Graph) -> list:
        deg = graph.degrees()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in graph.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [(-deg[v], tuple(sorted(-deg[u] for u in adj[v])))
                for v in range(n)]

    kg, kh = sort_keys(g), sort_keys(h)
    order_g = sorted(range(n), key=lambda v: (kg[v], rng.random()))
    order_h = sorted(range(n), key=lambda w: (kh[w], rng.random()))
    mapping = np.empty(n, dtype=np.int64)
    mapping[order_g] = np.array(order_h)

    state = _SwapState(ag, ah, mapping)
    stall_limit = stall if stall is not None else max(64, 2 * n)
    no_improve = 0
    steps = 0
    while no_improve < stall_limit and steps < max_steps and state.mmc > 0:
        steps += 1
        if rng.random() < 0.7:
            hot = np.flatnonzero(state.mc >= max(1, state.mmc - 1))
            a = int(hot[rng.integers(hot.size)])
        else:
            a = int(rng.integers(n))
        b = int(rng.integers(n - 1))
        if b >= a:
            b += 1
        cand, data = state.probe(a, b, fast_reject=True)
        if cand is not None and cand < (state.mmc, state.tot):
            state.apply(a, b, data)
            no_improve = 0
        else:
            no_improve += 1

    if polish:
        improved = True
        while improved and state.mmc > 0:
            improved = False
            for a in range(n):
                for b in range(a + 1, n):
                    cand, data = state.probe(a, b)
                    if cand < (state.mmc, state.tot):
                        state.apply(a, b, data)
                        improved = True

    value = _mapping_value(ag, ah, state.mapping, spec, cut_cap)
    return SolveResult(value, Alignment(tuple(int(x) for x in state.mapping), n),
                       steps, cert, False)


def exact_distance(g: Graph, h: Graph, spec: NormSpec,
                   budget: int = DEFAULT_BUDGET, seed: int = 0,
                   cut_search_cap: int = CUT_SEARCH_CAP) -> SolveResult:
    """Minimum mismatch norm over all vertex bijections, by branch and bound.

    Returns the optimal value and a witness alignment. If the node budget is
    exhausted the best incumbent is returned with ``exact=False``. For the
    cut norm the per-leaf evaluation is exponential, so exact search is
    limited to ``cut_search_cap`` vertices.
    """
    g, h = _normalized_pair(g, h)
    n = g.n
    root_cert = _root_certificate(g, h, spec)
    if n == 0:
        return SolveResult(0.0, Alignment((), 0), 0, root_cert, True)
    if spec.kind == "cut" and n > cut_search_cap:
        raise CutNormInfeasible(
            f"exact cut-norm search infeasible for n={n} (cap {cut_search_cap})")

    ag = g.adjacency_matrix()
    ah = h.adjacency_matrix()
    agb = ag.astype(bool)
    ahb = ah.astype(bool)

    incumbent = local_search(g, h, spec, seed=seed, polish=n <= 160)
    best_value = incumbent.value
    best_map = np.array(incumbent.alignment.mapping, dtype=np.int64)
    if best_value <= 1e-12:
        return SolveResult(0.0, incumbent.alignment, 0, root_cert, True)

    dg = g.degrees()
    dh = h.degrees()
    order = sorted(range(n), key=lambda v: (-dg[v], v))
    cand_order = [sorted(range(n), key=lambda w, v=v: (abs(dg[v] - dh[w]), w))
                  for v in range(n)]
    h_rows_mask = [0] * n
    for (u, w) in h.edges:
        h_rows_mask[u] |= 1 << w
        h_rows_mask[w] |= 1 << u
    twin_mask = _twin_masks(h_rows_mask, n)

    p = spec.p
    kind = spec.kind
    lap = spec.laplacian
    use_b = kind in ("op", "absop") and not lap
    use_colsum = kind == "op" and lap and (p == 1.0 or math.isinf(p))

    gis = np.zeros(n, dtype=np.int64)
    his = np.zeros(n, dtype=np.int64)
    forced = np.zeros(n, dtype=np.int64)
    forced_pos = np.zeros(n, dtype=np.int64)
    forced_neg = np.zeros(n, dtype=np.int64)
    ugn = np.array(dg, dtype=np.int64)
    uhn = np.array(dh, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    mapping = np.full(n, -1, dtype=np.int64)

    state = {"nodes": 0, "hit": False, "best": best_value, "map": best_map,
             "maxforced": 0, "fe": 0, "maxpos": 0, "maxneg": 0}

    def child_bound(add_w: int, mm_any_max: int, cap_max: int,
                    add_pos: int, add_neg: int, pos_any: int, neg_any: int) -> float:
        fe_new = state["fe"] + add_w
        if kind == "iso":
            return 1.0 if fe_new > 0 else 0.0
        if use_b:
            c = max(state["maxforced"], add_w, mm_any_max, cap_max)
            return bound_b(p, c)
        if kind == "ew" and not lap:
            if math.isinf(p):
                return 1.0 if fe_new > 0 else 0.0
            return (2.0 * fe_new) ** (1.0 / p)
        if kind == "ew" and lap:
            if math.isinf(p):
                return 1.0 if fe_new > 0 else 0.0
            return (2.0 * fe_new) ** (1.0 / p)
        if kind == "cut" and not lap:
            return float(max(state["maxpos"], state["maxneg"],
                             add_pos, add_neg, pos_any, neg_any))
        if kind == "cut" and lap:
            return 1.0 if fe_new > 0 else 0.0
        if use_colsum:
            return float(cap_max)
        return 0.0

    sys.setrecursionlimit(max(10000, 4 * n + 100))

    track_signs = (kind == "cut" and not lap) or use_colsum

    def rec(d: int) -> bool:
        if d == n:
            val = _mapping_value(ag, ah, mapping, spec, DEFAULT_CUT_CAP)
            if val < state["best"] - 1e-12:
                state["best"] = val
                state["map"] = mapping.copy()
                if val <= 1e-12:
                    return True
            return False
        v = order[d]
        gprev = gis[:d]
        hprev = his[:d]
        gm = agb[v][gprev]
        agv = ag[v]
        reps_mask = 0
        children = []
        for rank, w in enumerate(cand_order[v]):
            if used[w]:
                continue
            if twin_mask[w] & reps_mask:
                continue
            reps_mask |= 1 << w
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["hit"] = True
                return True
            hm = ahb[w][hprev]
            mm = gm != hm
            add_w = int(mm.sum())
            hit_targets = hprev[mm]
            mm_any_max = int(forced[hit_targets].max()) + 1 if hit_targets.size else 0

            cap_max = 0
            add_pos = add_neg = pos_any = neg_any = 0
            if use_b or use_colsum:
                forced_pairs = forced[hprev] + mm
                if use_b:
                    ugn_pairs = ugn[gprev] - agv[gprev]
                    uhn_pairs = uhn[hprev] - ah[w][hprev]
                    cap_vec = forced_pairs + np.abs(ugn_pairs - uhn_pairs)
                    pair_new = add_w + abs(int(ugn[v]) - int(uhn[w]))
                    cap_max = max(int(cap_vec.max(initial=0)), pair_new)
                else:
                    sign_pairs = (forced_pos - forced_neg)[hprev]
                    pm = gm & ~hm
                    nm = hm & ~gm
                    col = forced_pairs + np.abs(sign_pairs + pm.astype(np.int64)
                                                - nm.astype(np.int64))
                    new_col = add_w + abs(int(pm.sum()) - int(nm.sum()))
                    cap_max = max(int(col.max(initial=0)), new_col)
            if kind == "cut" and not lap:
                pm = gm & ~hm
                nm = hm & ~gm
                add_pos = int(pm.sum())
                add_neg = int(nm.sum())
                pos_hit = hprev[pm]
                neg_hit = hprev[nm]
                pos_any = int(forced_pos[pos_hit].max()) + 1 if pos_hit.size else 0
                neg_any = int(forced_neg[neg_hit].max()) + 1 if neg_hit.size else 0

            lb = child_bound(add_w, mm_any_max, cap_max,
                             add_pos, add_neg, pos_any, neg_any)
            if lb >= state["best"] - 1e-12:
                continue
            children.append((lb, add_w, rank, w, mm, hit_targets, mm_any_max,
                             add_pos, add_neg, pos_any, neg_any))

        # best-first child order: cheap children lead to strong incumbents fast
        children.sort(key=lambda c: (c[0], c[1], c[2]))
        for (lb, add_w, _, w, mm, hit_targets, mm_any_max,
             add_pos, add_neg, pos_any, neg_any) in children:
            if lb >= state["best"] - 1e-12:
                continue
            mapping[v] = w
            used[w] = True
            gis[d] = v
            his[d] = w
            forced[hit_targets] += 1
            forced[w] = add_w
            old_max = state["maxforced"]
            state["maxforced"] = max(old_max, add_w, mm_any_max)
            state["fe"] += add_w
            old_pos, old_neg = state["maxpos"], state["maxneg"]
            if track_signs:
                hm = ahb[w][hprev]
                pm = gm & ~hm
                nm = hm & ~gm
                forced_pos[hprev[pm]] += 1
                forced_neg[hprev[nm]] += 1
                forced_pos[w] = int(pm.sum())
                forced_neg[w] = int(nm.sum())
                if kind == "cut" and not lap:
                    state["maxpos"] = max(old_pos, add_pos, pos_any)
                    state["maxneg"] = max(old_neg, add_neg, neg_any)
            ugn[agb[v]] -= 1
            uhn[ahb[w]] -= 1

            aborted = rec(d + 1)

            ugn[agb[v]] += 1
            uhn[ahb[w]] += 1
            if track_signs:
                hm = ahb[w][hprev]
                pm = gm & ~hm
                nm = hm & ~gm
                forced_pos[hprev[pm]] -= 1
                forced_neg[hprev[nm]] -= 1
                forced_pos[w] = 0
                forced_neg[w] = 0
                state["maxpos"], state["maxneg"] = old_pos, old_neg
            forced[hit_targets] -= 1
            forced[w] = 0
            state["maxforced"] = old_max
            state["fe"] -= add_w
            used[w] = False
            mapping[v] = -1
            if aborted:
                return True
        return False

    rec(0)
    alignment = Alignment(tuple(int(x) for x in state["map"]), n)
    return SolveResult(state["best"], alignment, state["nodes"], root_cert,
                       not state["hit"])


def decide_distance(g: Graph, h: Graph, spec: NormSpec, t: Threshold,
                    budget: int = DEFAULT_BUDGET, seed: int = 0) -> bool:
    """Decide whether the distance is at least num/den.

    Exact rational comparison whenever the optimal norm value has an integer
    power form (op:1, op:inf, iso, cut, entrywise with integer p); otherwise
    the comparison uses a 1e-9 tolerance and callers must keep the true
    distance away from the threshold by more than that margin.
    """
    res = exact_distance(g, h, spec, budget=budget, seed=seed)
    thr = t.as_fraction()
    if not res.exact:
        if res.value < float(thr) - 1e-9:
            return False
        raise RuntimeError("node budget exhausted before the threshold was decided")
    gp, hp = _normalized_pair(g, h)
    nv = optimum_norm_value(gp, hp, res.alignment, spec)
    if nv.power_value is not None and nv.power is not None:
        return nv.power_value * t.den ** nv.power >= t.num ** nv.power
    return res.value >= float(thr) - 1e-9


def optimum_norm_value(g: Graph, h: Graph, pi: Alignment, spec: NormSpec) -> NormValue:
    """Norm value (with exactness metadata) of one concrete alignment."""
    return mismatch_norm(mismatch(apply_alignment(g, pi), h), spec)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test by color refinement plus backtracking."""
    if g.n != h.n or g.m != h.m:
        return False
    n = g.n
    if n == 0:
        return True
    cg, ch = _joint_refinement(g, h)
    if cg is None:
        return False
    hist: dict[int, int] = {}
    for c in cg:
        hist[c] = hist.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (hist[cg[v]], -g.degree(v), v))
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(ch[w], []).append(w)
    adj_g = [g.neighbors(v) for v in range(n)]
    adj_h = [h.neighbors(w) for w in range(n)]
    mapping: dict[int, int] = {}
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color.get(cg[v], ()):
            if used[w]:
                continue
            ok = True
            for u, x in mapping.items():
                if (u in adj_g[v]) != (x in adj_h[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if backtrack(i + 1):
                return True
            used[w] = False
            del mapping[v]
        return False

    return backtrack(0)


def _joint_refinement(g: Graph, h: Graph):
    """Stable vertex colors comparable across the two graphs, or (None, None)."""
    n = g.n
    adj_g = [sorted(g.neighbors(v)) for v in range(n)]
    adj_h = [sorted(h.neighbors(v)) for v in range(n)]
    cg = g.degrees()
    ch = h.degrees()
    for _ in range(n):
        table: dict[tuple, int] = {}

        def recolor(colors, adj):
            out = []
            for v in range(n):
                sig = (colors[v], tuple(sorted(colors[u] for u in adj[v])))
                out.append(table.setdefault(sig, len(table)))
            return out

        ng = recolor(cg, adj_g)
        nh = recolor(ch, adj_h)
        if sorted(ng) != sorted(nh):
            return None, None
        if len(set(ng)) == len(set(cg)):
            return ng, nh
        cg, ch = ng, nh
    return cg, ch


def approx_additive(g: Graph, h: Graph, p: float, use_abs: bool = False) -> float:
    """Sum of the two graphs' operator norms: within +2d of the distance.

    d is the maximum degree of h; the output always dominates the true
    distance (triangle inequality) and exceeds it by at most 2d.
    """
    f = abs_operator_norm if use_abs else operator_norm
    return f(g.adjacency_matrix(), p).value + f(h.adjacency_matrix(), p).value


def approx_multiplicative(g: Graph, h: Graph, p: float) -> float:
    """0 when the graphs are isomorphic (equal max degree fast-path), else the
    additive approximation; multiplicative error at most 1+2d."""
    if g.max_degree() == h.max_degree() and is_isomorphic(g, h):
        return 0.0
    return approx_additive(g, h, p)
