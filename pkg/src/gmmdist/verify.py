"""Desk-scale verification suites for the reduction constructions.

Each suite rebuilds one instance family at a size where the source problem
can be brute-forced, then checks the claimed distance behaviour against the
exact solver or the explicit proof alignments. The CLI ``verify`` subcommand
runs them and reports pass/fail per suite.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bounds import bound_b, mismatch_profile
from .generators import (ThreePartitionInstance, additive_gadget_alignment,
                         brute_force_hamcycle, brute_force_maxcut,
                         choose_gadget_params, find_hamiltonian_cycle,
                         find_threepartition, gen_additive_gadget,
                         gen_color_conversion, gen_cutnorm_instance,
                         gen_hamcycle, gen_path_variant,
                         gen_threepartition_trees, partition_alignment)
from .graphs import (ColoredGraph, Graph, apply_alignment, complete_bipartite,
                     complete_graph, is_star_forest, mismatch)
from .norms import NormSpec, cut_norm_exact, mismatch_norm
from .generators import cutnorm_block_matrix
from .solver import exact_distance, local_search

_PS = (1.0, 2.0, math.inf)


def worker_threads() -> int:
    """Thread cap from the GMM_THREADS environment variable (default 1)."""
    try:
        return max(1, int(os.environ.get("GMM_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _prism() -> Graph:
    return Graph(6, edges={(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                           (0, 3), (1, 4), (2, 5)})


def suite_hamcycle() -> SuiteResult:
    graphs = [complete_graph(4), complete_bipartite(3, 3), _prism()]
    for g in graphs:
        inst = gen_hamcycle(g)
        ham = brute_force_hamcycle(g)
        if (inst.meta.answer == "yes") != ham:
            return SuiteResult("hamcycle", False, f"planted answer wrong for n={g.n}")
        for p in _PS:
            res = exact_distance(inst.left, inst.right, NormSpec("op", p))
            low, high = inst.meta.gap_at(p)
            if ham and not res.value <= low + 1e-8:
                return SuiteResult("hamcycle", False,
                                   f"YES instance above b_p(1) at p={p}")
            if not ham and not res.value >= high - 1e-8:
                return SuiteResult("hamcycle", False,
                                   f"NO instance below b_p(3) at p={p}")
    return SuiteResult("hamcycle", True, f"{len(graphs)} graphs, p in (1,2,inf)")


def suite_path_variant() -> SuiteResult:
    g = complete_graph(4)
    v = 0
    e1, e2 = (0, 1), (0, 2)
    variants = [gen_path_variant(g, v, e1), gen_path_variant(g, v, e2)]
    ham = brute_force_hamcycle(g)
    for p in _PS:
        vals = [exact_distance(i.left, i.right, NormSpec("op", p)).value
                for i in variants]
        if (min(vals) <= bound_b(p, 1) + 1e-8) != ham:
            return SuiteResult("path-variant", False, f"equivalence fails at p={p}")
    return SuiteResult("path-variant", True, "K4 variants, p in (1,2,inf)")


def suite_threepartition() -> SuiteResult:
    inst = ThreePartitionInstance(10, (4, 4, 3, 3, 3, 3))
    pair = gen_threepartition_trees(inst)
    grouping = find_threepartition(inst)
    if grouping is None or pair.meta.answer != "yes":
        return SuiteResult("threepartition", False, "expected a YES instance")
    pi = partition_alignment(pair, grouping)
    delta = mismatch(apply_alignment(pair.left, pi), pair.right)
    prof = mismatch_profile(pair.left, pair.right, pi)
    if prof.mmc != 2 or not is_star_forest(delta):
        return SuiteResult("threepartition", False,
                           f"alignment not a 2-star forest (mmc={prof.mmc})")
    for p in _PS:
        val = mismatch_norm(delta, NormSpec("op", p)).value
        if abs(val - bound_b(p, 2)) > 1e-8:
            return SuiteResult("threepartition", False, f"value != b_p(2) at p={p}")
    return SuiteResult("threepartition", True, "Fig-style YES instance checks out")


def suite_color_conversion() -> SuiteResult:
    from itertools import permutations

    pairs = [
        (ColoredGraph(Graph(3, edges={(0, 1)}), (1, 1, 2)),
         ColoredGraph(Graph(3, edges={(1, 2)}), (1, 2, 1))),
        (ColoredGraph(Graph(3, edges={(0, 1), (1, 2)}), (1, 2, 1)),
         ColoredGraph(Graph(3, edges={(0, 2)}), (2, 1, 1))),
    ]
    for cg, ch in pairs:
        inst = gen_color_conversion(cg, ch)
        for p in _PS:
            best = math.inf
            for perm in permutations(range(cg.n)):
                if any(cg.colors[v] != ch.colors[perm[v]] for v in range(cg.n)):
                    continue
                d = mismatch(apply_alignment(cg.graph, _align(perm, cg.n)), ch.graph)
                best = min(best, mismatch_norm(d, NormSpec("op", p)).value)
            res = exact_distance(inst.left, inst.right, NormSpec("op", p))
            if abs(res.value - best) > 1e-8:
                return SuiteResult("color-conversion", False,
                                   f"converted distance {res.value} != cdist {best}")
    return SuiteResult("color-conversion", True, "2 colored pairs, p in (1,2,inf)")


def _align(perm, n):
    from .graphs import Alignment

    return Alignment(tuple(perm), n)


def suite_cutnorm() -> SuiteResult:
    graphs = [Graph(2, edges={(0, 1)}), complete_graph(3), path_3()]
    for g in graphs:
        b = cutnorm_block_matrix(g)
        want = 2 * brute_force_maxcut(g)
        got = cut_norm_exact(b)
        if got.power_value != want:
            return SuiteResult("cutnorm", False,
                               f"block matrix cut norm {got.value} != {want}")
        inst = gen_cutnorm_instance(g)
        d = mismatch(inst.left, inst.right)
        val = mismatch_norm(d, NormSpec("cut"))
        if val.power_value != want:
            return SuiteResult("cutnorm", False,
                               f"identity-aligned mismatch {val.value} != {want}")
    return SuiteResult("cutnorm", True, f"{len(graphs)} source graphs")


def path_3() -> Graph:
    return Graph(3, edges={(0, 1), (1, 2)})


def suite_additive_gadget() -> SuiteResult:
    g = complete_graph(4)
    p, eps = 2.0, 1.0
    inst = gen_additive_gadget(g, p, eps)
    m, o = inst.meta.extra["m"], inst.meta.extra["o"]
    mm, oo = choose_gadget_params(p, eps)
    if (m, o) != (mm, oo):
        return SuiteResult("additive-gadget", False, "parameter selection mismatch")
    if not bound_b(p, 2 * m) > bound_b(p, m) + eps:
        return SuiteResult("additive-gadget", False, "m gap condition fails")
    if not bound_b(p, math.ceil(o / 2)) >= bound_b(p, 2 * m):
        return SuiteResult("additive-gadget", False, "o gap condition fails")
    cycle = find_hamiltonian_cycle(g)
    pi = additive_gadget_alignment(inst, cycle)
    gl, gr = inst.colored[0].graph, inst.colored[1].graph
    prof = mismatch_profile(gl, gr, pi)
    blacks = [prof.per_vertex[pi[v]] for v in range(g.n)]
    delta = mismatch(apply_alignment(gl, pi), gr)
    if blacks != [m] * g.n or not is_star_forest(delta):
        return SuiteResult("additive-gadget", False,
                           f"alignment profile wrong (black mcs {blacks})")
    val = mismatch_norm(delta, NormSpec("op", p)).value
    if abs(val - bound_b(p, m)) > 1e-8:
        return SuiteResult("additive-gadget", False, f"value {val} != b_p(m)")
    return SuiteResult("additive-gadget", True, f"K4, p=2, eps=1 (m={m}, o={o})")


def suite_local_search_floor() -> SuiteResult:
    inst = ThreePartitionInstance(16, (5, 5, 5, 5, 5, 7))
    pair = gen_threepartition_trees(inst)
    if pair.meta.answer != "no":
        return SuiteResult("local-search-floor", False, "expected a NO instance")
    for seed in range(25):
        res = local_search(pair.left, pair.right, NormSpec("op", 1.0), seed=seed)
        for p in _PS:
            pi = res.alignment
            val = mismatch_norm(
                mismatch(apply_alignment(pair.left, pi), pair.right),
                NormSpec("op", p)).value
            if val < bound_b(p, 3) - 1e-6:
                return SuiteResult("local-search-floor", False,
                                   f"found value {val} < b_p(3) at p={p}")
    return SuiteResult("local-search-floor", True, "25 restarts stayed >= b_p(3)")


ALL_SUITES = {
    "hamcycle": suite_hamcycle,
    "path": suite_path_variant,
    "3part": suite_threepartition,
    "colorconv": suite_color_conversion,
    "cut": suite_cutnorm,
    "additive": suite_additive_gadget,
    "localsearch": suite_local_search_floor,
}


def run_suites(names: list[str] | None = None) -> list[SuiteResult]:
    """Run the selected suites (all by default), possibly in parallel."""
    selected = list(ALL_SUITES) if not names else names
    unknown = [n for n in selected if n not in ALL_SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    workers = min(worker_threads(), len(selected))
    if workers <= 1:
        return [ALL_SUITES[n]() for n in selected]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(ALL_SUITES[n]) for n in selected]
        return [f.result() for f in futures]
