import math

import numpy as np
import pytest

from gmmdist import (ColoredGraph, Graph, NormSpec, ThreePartitionInstance,
                     additive_gadget_alignment, alon_naor_matrix,
                     apply_alignment, bound_b, brute_force_hamcycle,
                     brute_force_maxcut, brute_force_threepartition,
                     choose_gadget_params, complete_bipartite, complete_graph,
                     cut_norm_exact, cutnorm_block_matrix, cycle_graph,
                     exact_distance, find_hamiltonian_cycle,
                     find_hamiltonian_path, find_threepartition,
                     gen_additive_gadget, gen_color_conversion,
                     gen_cutnorm_instance, gen_hamcycle, gen_path_variant,
                     gen_threepartition_trees, is_star_forest, mismatch,
                     mismatch_norm, mismatch_profile, partition_alignment,
                     path_graph, petersen_graph)
from oracles import color_preserving_distance, random_graph


def prism():
    return Graph(6, edges={(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                           (0, 3), (1, 4), (2, 5)})


class TestHamiltonOracles:
    def test_complete4(self):
        assert brute_force_hamcycle(complete_graph(4))

    def test_cycles(self):
        for n in (3, 5, 8):
            assert brute_force_hamcycle(cycle_graph(n))

    def test_petersen_has_no_cycle_but_a_path(self):
        g = petersen_graph()
        assert not brute_force_hamcycle(g)
        assert find_hamiltonian_path(g) is not None

    def test_cycle_witness_is_valid(self):
        g = complete_bipartite(3, 3)
        cyc = find_hamiltonian_cycle(g)
        assert sorted(cyc) == list(range(6))
        for i in range(6):
            assert g.has_edge(cyc[i], cyc[(i + 1) % 6])

    def test_cap(self):
        with pytest.raises(ValueError):
            brute_force_hamcycle(cycle_graph(20))


class TestMaxcutOracle:
    def test_single_edge(self):
        assert brute_force_maxcut(Graph(2, edges={(0, 1)})) == 1

    def test_triangle(self):
        assert brute_force_maxcut(complete_graph(3)) == 2

    def test_empty(self):
        assert brute_force_maxcut(Graph(4)) == 0

    def test_bipartite_cuts_everything(self):
        g = complete_bipartite(3, 4)
        assert brute_force_maxcut(g) == g.m

    def test_exhaustive_reference(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = random_graph(rng, 6)
            best = 0
            for mask in range(1 << 6):
                cut = sum(1 for (u, v) in g.edges
                          if (mask >> u & 1) != (mask >> v & 1))
                best = max(best, cut)
            assert brute_force_maxcut(g) == best


class TestThreePartitionOracle:
    def test_known_yes(self):
        inst = ThreePartitionInstance(10, (4, 4, 3, 3, 3, 3))
        assert brute_force_threepartition(inst)
        groups = find_threepartition(inst)
        for t in groups:
            assert sum(inst.items[i] for i in t) == 10

    def test_known_no(self):
        assert not brute_force_threepartition(
            ThreePartitionInstance(16, (5, 5, 5, 5, 5, 7)))

    def test_single_group(self):
        assert brute_force_threepartition(ThreePartitionInstance(9, (3, 3, 3)))

    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            ThreePartitionInstance(10, (4, 4, 3, 3, 3))  # not 3m items
        with pytest.raises(ValueError):
            ThreePartitionInstance(10, (5, 2, 3, 4, 3, 3))  # range violated
        with pytest.raises(ValueError):
            ThreePartitionInstance(12, (4, 4, 3, 3, 3, 3))  # wrong sum


class TestHamcycleInstances:
    def test_complete4(self):
        inst = gen_hamcycle(complete_graph(4))
        assert inst.left == cycle_graph(4)
        assert inst.meta.answer == "yes"
        assert inst.meta.gap_at(2.0) == (1.0, bound_b(2.0, 3))

    def test_bipartite33(self):
        assert gen_hamcycle(complete_bipartite(3, 3)).meta.answer == "yes"

    def test_petersen_no(self):
        inst = gen_hamcycle(petersen_graph())
        assert inst.meta.answer == "no"
        res = exact_distance(inst.left, inst.right, NormSpec("op", 1.0))
        assert res.value >= bound_b(1.0, 3) - 1e-9

    def test_rejects_non_cubic(self):
        with pytest.raises(ValueError):
            gen_hamcycle(cycle_graph(5))


class TestPathVariantInstances:
    def test_shapes(self):
        inst = gen_path_variant(complete_graph(4), 0, (0, 1))
        assert inst.left == path_graph(6)
        assert inst.right.n == 6
        # endpoints of the removed edge trade it for a fresh leaf
        assert sorted(inst.right.degrees()) == [1, 1, 3, 3, 3, 3]
        assert inst.right.has_edge(0, 4) and inst.right.has_edge(1, 5)
        assert not inst.right.has_edge(0, 1)

    def test_two_variants_cover_hamiltonicity(self):
        g = complete_graph(4)
        answers = [gen_path_variant(g, 0, e).meta.answer for e in ((0, 1), (0, 2))]
        assert "yes" in answers

    def test_rejects_non_incident_edge(self):
        with pytest.raises(ValueError):
            gen_path_variant(complete_graph(4), 0, (1, 2))


class TestTreeInstances:
    def test_reference_shape(self):
        inst = ThreePartitionInstance(10, (4, 4, 3, 3, 3, 3))
        pair = gen_threepartition_trees(inst)
        assert pair.left.n == pair.right.n == 132
        assert pair.left.max_degree() == 8
        assert pair.right.max_degree() == 6
        roles = pair.meta.extra["roles_left"]
        assert roles.count("black") == 20 and roles.count("red") == 60

    def test_trees_are_trees(self):
        from oracles import is_connected_bfs

        pair = gen_threepartition_trees(ThreePartitionInstance(9, (3, 3, 3)))
        for g in (pair.left, pair.right):
            assert is_connected_bfs(g) and g.m == g.n - 1

    def test_yes_alignment_is_two_star_forest(self):
        inst = ThreePartitionInstance(12, (4, 4, 4, 4, 4, 4))
        pair = gen_threepartition_trees(inst)
        pi = partition_alignment(pair, find_threepartition(inst))
        prof = mismatch_profile(pair.left, pair.right, pi)
        delta = mismatch(apply_alignment(pair.left, pi), pair.right)
        assert prof.mmc == 2 and is_star_forest(delta)
        for p in (1.0, 2.0, math.inf):
            assert mismatch_norm(delta, NormSpec("op", p)).value \
                == pytest.approx(bound_b(p, 2), abs=1e-8)

    def test_alignment_rejects_bad_partition(self):
        inst = ThreePartitionInstance(10, (4, 4, 3, 3, 3, 3))
        pair = gen_threepartition_trees(inst)
        with pytest.raises(ValueError):
            partition_alignment(pair, [(0, 1, 2), (3, 4, 5)])

    def test_role_level_mismatch_counts(self):
        inst = ThreePartitionInstance(10, (4, 4, 3, 3, 3, 3))
        pair = gen_threepartition_trees(inst)
        pi = partition_alignment(pair, find_threepartition(inst))
        prof = mismatch_profile(pair.left, pair.right, pi)
        roles = pair.meta.extra["roles_left"]
        inner = set(pair.meta.extra["inner_blacks_left"])
        for v in range(pair.left.n):
            mc = prof.per_vertex[pi[v]]
            if v in inner:
                assert mc == 2
            elif roles[v] in ("pink", "blue"):
                assert mc == 1
            else:
                assert mc <= 1


class TestColorConversion:
    def test_uniform_color_adds_square_leaves(self):
        cg = ColoredGraph(cycle_graph(3), (1, 1, 1))
        inst = gen_color_conversion(cg, cg)
        assert inst.left.n == 3 + 3 * 9

    def test_two_color_order_formula(self):
        cg = ColoredGraph(path_graph(3), (1, 2, 2))
        ch = ColoredGraph(path_graph(3), (2, 1, 2))
        inst = gen_color_conversion(cg, ch)
        assert inst.left.n == 3 + 1 * 9 + 2 * 18

    def test_histogram_mismatch_rejected(self):
        cg = ColoredGraph(path_graph(2), (1, 1))
        ch = ColoredGraph(path_graph(2), (1, 2))
        with pytest.raises(ValueError):
            gen_color_conversion(cg, ch)

    @pytest.mark.parametrize("p", [1.0, 2.0, math.inf])
    def test_distance_matches_colored_search(self, p):
        rng = np.random.default_rng(19)
        for _ in range(3):
            n = 3
            cg = ColoredGraph(random_graph(rng, n),
                              tuple(int(c) for c in rng.integers(1, 3, n)))
            perm = rng.permutation(n)
            ch = ColoredGraph(random_graph(rng, n),
                              tuple(cg.colors[int(i)] for i in perm))
            inst = gen_color_conversion(cg, ch)
            want = color_preserving_distance(cg, ch, NormSpec("op", p))
            got = exact_distance(inst.left, inst.right, NormSpec("op", p))
            assert got.exact
            assert got.value == pytest.approx(want, abs=1e-8)


class TestAdditiveGadget:
    def test_param_scan_p2(self):
        assert choose_gadget_params(2.0, 1.0) == (6, 23)

    def test_param_scan_pinf(self):
        m, o = choose_gadget_params(math.inf, 1.0)
        assert m == 2 and math.ceil(o / 2) >= 4

    def test_shape_counts(self):
        inst = gen_additive_gadget(complete_graph(4), 2.0, 1.0)
        ex = inst.meta.extra
        assert ex["gadget_sides_left"] == ex["gadget_sides_right"] == 12
        assert ex["gadgets_left"] == ex["gadgets_right"] == 6
        cl, cr = inst.colored
        assert cl.n == cr.n
        assert cl.colors.count(2) == 2 * ex["m"] * 6  # blues
        assert cl.colors.count(3) == (ex["m"] - 1) * ex["o"] * 6  # reds

    def test_proof_alignment_profile(self):
        g = complete_graph(4)
        inst = gen_additive_gadget(g, 2.0, 1.0)
        pi = additive_gadget_alignment(inst, find_hamiltonian_cycle(g))
        gl, gr = inst.colored[0].graph, inst.colored[1].graph
        prof = mismatch_profile(gl, gr, pi)
        m = inst.meta.extra["m"]
        assert [prof.per_vertex[pi[v]] for v in range(4)] == [m] * 4
        delta = mismatch(apply_alignment(gl, pi), gr)
        assert is_star_forest(delta)
        assert mismatch_norm(delta, NormSpec("op", 2.0)).value \
            == pytest.approx(bound_b(2.0, m), abs=1e-8)

    def test_rejects_non_cubic(self):
        with pytest.raises(ValueError):
            gen_additive_gadget(cycle_graph(4), 2.0, 1.0)

    def test_gadget_internal_shape(self):
        # one gadget with m=3, o=5: 6 blues, 10 reds, every red adjacent to
        # the two consecutive blues of each side
        from gmmdist.generators import _add_gadget, _gadget_layout

        m, o = 3, 5
        edges = set()
        _add_gadget(edges, 0, m, o, None, None)
        lay = _gadget_layout(0, m, o)
        assert len(lay["side1"]) == len(lay["side2"]) == m
        assert sum(len(gp) for gp in lay["reds"]) == (m - 1) * o
        g = Graph(2 * m + (m - 1) * o, edges=edges)
        red_ids = [r for gp in lay["reds"] for r in gp]
        assert all(g.degree(r) == 4 for r in red_ids)
        # inner blues touch both red groups, end blues only one
        assert g.degree(lay["side1"][1]) == 2 * o
        assert g.degree(lay["side1"][0]) == o
        assert not any(g.has_edge(a, b) for a in lay["side1"]
                       for b in lay["side1"] if a != b)


class TestCutInstances:
    def test_single_edge(self):
        g = Graph(2, edges={(0, 1)})
        b = cutnorm_block_matrix(g)
        assert cut_norm_exact(b).power_value == 2 == 2 * brute_force_maxcut(g)

    def test_triangle(self):
        b = cutnorm_block_matrix(complete_graph(3))
        assert cut_norm_exact(b).power_value == 4

    def test_pattern_matrix_shape(self):
        a = alon_naor_matrix(complete_graph(3))
        assert a.shape == (6, 3)
        assert set(np.abs(a).sum(axis=1)) == {2}

    def test_identity_alignment_value(self):
        for g in (Graph(2, edges={(0, 1)}), complete_graph(3), path_graph(4)):
            inst = gen_cutnorm_instance(g)
            assert inst.left.n == inst.right.n
            d = mismatch(inst.left, inst.right)
            got = mismatch_norm(d, NormSpec("cut"))
            assert got.power_value == 2 * brute_force_maxcut(g)
            assert got.power_value == inst.meta.extra["claimed_distance"]

    def test_leaf_counts_scale_by_vertex(self):
        g = complete_graph(3)
        inst = gen_cutnorm_instance(g)
        unit = inst.meta.extra["leaf_unit"]
        degs_f = inst.left.degrees()
        block = inst.meta.extra["block_order"]
        for i in range(1, 4):
            v = 2 * g.m + i - 1
            in_block = sum(1 for (a, b) in inst.left.edges
                           if (a == v or b == v) and a < block and b < block)
            assert degs_f[v] - in_block == i * unit
