import random

import pytest

from coverstab.graph_core import Graph, is_connected, is_bipartite, has_twins
from coverstab.perms import Permutation
from coverstab.aut import automorphism_group, are_isomorphic
from coverstab.cover import (DoubleCover, double_cover, lift, tau,
                             expected_subgroup, is_expected,
                             is_fiber_preserving, is_cover_automorphism,
                             stability_report,
                             REASON_BIPARTITE, REASON_DISCONNECTED,
                             REASON_TWINS)
from coverstab.families import complete_graph, cycle, petersen, johnson

from oracles import naive_closure


class TestDoubleCover:
    def test_structure(self):
        g = petersen()
        d = double_cover(g)
        assert d.cover.n == 2 * g.n
        assert d.cover.edge_count() == 2 * g.edge_count()
        for x, y in g.edges():
            assert d.cover.has_edge(x, y + g.n)
            assert d.cover.has_edge(y, x + g.n)
            assert not d.cover.has_edge(x, y)

    def test_small_covers(self):
        assert are_isomorphic(double_cover(complete_graph(3)).cover, cycle(6))
        assert are_isomorphic(double_cover(cycle(5)).cover, cycle(10))
        c6c = double_cover(cycle(6)).cover
        assert not is_connected(c6c)
        two_c6 = Graph(12, [(i, (i + 1) % 6) for i in range(6)]
                       + [(6 + i, 6 + (i + 1) % 6) for i in range(6)])
        assert are_isomorphic(c6c, two_c6)

    def test_cover_connected_iff_base_connected_nonbipartite(self, graphs_by_order):
        for n in (4, 5):
            for g in graphs_by_order[n]:
                cov = double_cover(g).cover
                expected = is_connected(g) and not is_bipartite(g)
                assert is_connected(cov) == expected


class TestLiftTau:
    def test_lift_identity_and_rotation(self):
        d = double_cover(cycle(5))
        assert lift(d, Permutation.identity(5)).is_identity()
        rot = Permutation([1, 2, 3, 4, 0])
        lf = lift(d, rot)
        assert lf[0] == 1 and lf[5] == 6

    def test_tau_involution_and_commutes(self):
        d = double_cover(petersen())
        t = tau(d)
        assert (t * t).is_identity()
        for phi in automorphism_group(petersen()).generators:
            lf = lift(d, phi)
            assert t * lf == lf * t

    def test_lift_requires_automorphism(self):
        d = double_cover(Graph(3, [(0, 1)]))
        with pytest.raises(ValueError):
            lift(d, Permutation([1, 2, 0]))

    def test_lift_homomorphism(self):
        g = petersen()
        d = double_cover(g)
        gens = automorphism_group(g).generators
        for p in gens:
            for q in gens:
                assert lift(d, p * q) == lift(d, p) * lift(d, q)


class TestExpectedSubgroup:
    def test_orders(self):
        assert expected_subgroup(double_cover(complete_graph(3))).order() == 12
        assert expected_subgroup(double_cover(cycle(5))).order() == 20
        assert expected_subgroup(double_cover(petersen())).order() == 240

    def test_always_twice_base_aut(self, graphs_by_order):
        rng = random.Random(4)
        sample = rng.sample(graphs_by_order[6], 40) + graphs_by_order[3]
        for g in sample:
            d = double_cover(g)
            assert expected_subgroup(d).order() == 2 * automorphism_group(g).order()

    def test_subgroup_of_cover_aut(self, graphs_by_order):
        rng = random.Random(5)
        for g in rng.sample(graphs_by_order[5], 15):
            d = double_cover(g)
            cover_aut = automorphism_group(d.cover)
            assert 2 * automorphism_group(g).order() == expected_subgroup(d).order()
            assert cover_aut.order() % expected_subgroup(d).order() == 0
            assert cover_aut.contains(tau(d))
            for phi in automorphism_group(g).generators:
                assert cover_aut.contains(lift(d, phi))


class TestIsExpected:
    def test_tau_and_lifts_expected(self):
        d = double_cover(petersen())
        assert is_expected(d, tau(d))
        for phi in automorphism_group(petersen()).generators:
            assert is_expected(d, lift(d, phi))

    def test_rejects_non_automorphism(self):
        d = double_cover(cycle(5))
        with pytest.raises(ValueError):
            is_expected(d, Permutation.from_cycles(10, [(0, 1)]))

    def test_fiber_rule_matches_membership(self, graphs_by_order):
        # the fiber characterization coincides with expected-subgroup
        # membership for connected non-bipartite bases
        rng = random.Random(6)
        pool = [g for g in graphs_by_order[5] + rng.sample(graphs_by_order[6], 30)
                if is_connected(g) and not is_bipartite(g)]
        for g in pool:
            d = double_cover(g)
            exp = expected_subgroup(d)
            for alpha in automorphism_group(d.cover).generators:
                assert is_fiber_preserving(d, alpha) == exp.contains(alpha)

    def test_fallback_outside_lemma_hypotheses(self):
        # two isolated vertices: a swap inside one fiber preserves fibers
        # but is not expected, so the fallback must decide by membership
        g = Graph(2)
        d = double_cover(g)
        alpha = Permutation.from_cycles(4, [(0, 2)])
        assert is_cover_automorphism(d, alpha)
        assert is_fiber_preserving(d, alpha)
        assert not is_expected(d, alpha)


class TestStabilityReport:
    def test_complete_graphs(self):
        r = stability_report(complete_graph(2))
        assert not r.stable and r.instability_index == 2
        assert r.classification == "trivially_unstable"
        assert r.reasons == (REASON_BIPARTITE,)
        for n in range(3, 9):
            assert stability_report(complete_graph(n)).stable

    def test_cycles(self):
        for n in range(3, 11):
            r = stability_report(cycle(n))
            assert r.stable == (n % 2 == 1)
        r6 = stability_report(cycle(6))
        assert r6.classification == "trivially_unstable"
        assert REASON_BIPARTITE in r6.reasons

    def test_johnson_instabilities(self):
        r = stability_report(johnson(6, 2))
        assert r.classification == "nontrivially_unstable"
        assert r.instability_index == 28
        r = stability_report(johnson(6, 3))
        assert r.classification == "nontrivially_unstable"
        assert r.instability_index == 2
        r = stability_report(johnson(4, 2))
        assert r.classification == "trivially_unstable"
        assert r.reasons == (REASON_TWINS,)

    def test_disconnected_reason(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        r = stability_report(g)
        assert not r.stable and REASON_DISCONNECTED in r.reasons

    def test_multiple_reasons(self):
        # an edge plus a star: disconnected, bipartite, and the two star
        # leaves are twins
        g = Graph(5, [(0, 1), (2, 3), (2, 4)])
        r = stability_report(g)
        assert set(r.reasons) == {REASON_DISCONNECTED, REASON_BIPARTITE, REASON_TWINS}

    def test_single_vertex_stable_empty_rejected(self):
        r = stability_report(Graph(1))
        assert r.stable and r.aut_bx_order == 2
        with pytest.raises(ValueError, match="empty graph"):
            stability_report(Graph(0))
        with pytest.raises(ValueError, match="empty graph"):
            expected_subgroup(double_cover(Graph(0)))

    def test_index_multiplicativity_invariants(self, graphs_by_order):
        rng = random.Random(7)
        for g in rng.sample(graphs_by_order[6], 40):
            r = stability_report(g)
            assert r.aut_bx_order % (2 * r.aut_x_order) == 0
            assert r.stable == (r.instability_index == 1)
            if r.classification == "nontrivially_unstable":
                assert is_connected(g) and not is_bipartite(g) and not has_twins(g)

    def test_agrees_with_fiber_decision(self, graphs_by_order):
        # two independent decision procedures for connected non-bipartite
        # inputs: order comparison vs fiber-preservation of every
        # cover-automorphism generator
        rng = random.Random(8)
        pool = [g for g in graphs_by_order[4] + rng.sample(graphs_by_order[6], 40)
                if is_connected(g) and not is_bipartite(g)]
        assert pool
        for g in pool:
            d = double_cover(g)
            gens = automorphism_group(d.cover).generators
            all_fiber = all(is_fiber_preserving(d, a) for a in gens)
            assert stability_report(g).stable == all_fiber

    def test_fiber_decision_needs_connectivity(self):
        # K3 plus an isolated vertex: unstable, yet every cover
        # automorphism generator can be fiber-preserving (the unexpected
        # one swaps inside the isolated fiber), so the fiber shortcut is
        # restricted to connected non-bipartite bases
        g = Graph(4, [(0, 1), (0, 2), (1, 2)])
        d = double_cover(g)
        r = stability_report(g)
        assert not r.stable and REASON_DISCONNECTED in r.reasons
        inside_fiber_swap = Permutation.from_cycles(8, [(3, 7)])
        assert is_cover_automorphism(d, inside_fiber_swap)
        assert is_fiber_preserving(d, inside_fiber_swap)
        assert not expected_subgroup(d).contains(inside_fiber_swap)

    def test_layer_partition_shortcut(self, graphs_by_order):
        rng = random.Random(9)
        pool = [g for g in rng.sample(graphs_by_order[6], 40)
                if is_connected(g) and not is_bipartite(g)]
        for g in pool:
            fast = stability_report(g, use_layer_partition=True)
            assert fast == stability_report(g)

    def test_expected_subgroup_closure_equals_lift_tau_closure(self):
        # expected subgroup = what tau and the lifts generate, element-wise
        g = cycle(5)
        d = double_cover(g)
        gens = [tau(d)] + [lift(d, p) for p in automorphism_group(g).generators]
        closure = naive_closure([p.images for p in gens], 10)
        assert expected_subgroup(d).order() == len(closure)
