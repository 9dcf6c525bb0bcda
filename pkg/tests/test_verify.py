from isobench import (
    Hypergraph,
    identity_objective,
    power_set_hypergraph,
    singleton_hypergraph,
    zero_based_identity,
)
from isobench.verify import CheckResult, instance_checks, summarize, verify_grid


class TestInstanceChecks:
    def test_all_hold_on_triangle(self):
        H = Hypergraph.from_edges(3, [[1, 2], [1, 3], [2, 3]])
        results = instance_checks(H, 2, identity_objective(2))
        assert results and all(r.holds for r in results)
        names = {r.name for r in results}
        assert "total_ge_ta_shma" in names
        assert "witnessA_charge_bound" in names
        assert "m2_special_ge_n" in names

    def test_proven_classes_are_tagged_theorem(self):
        H = singleton_hypergraph(3)  # linear, so conjecture 2 is proven here
        kinds = {r.name: r.kind for r in instance_checks(H, 3, identity_objective(3))}
        assert kinds["layer1_ge_conjecture2"] == "theorem"

    def test_open_instances_are_tagged_conjecture(self):
        # complement singletons on 4 vertices: not linear, not 1-degenerate
        H = Hypergraph.from_edges(4, [[2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3]])
        kinds = {r.name: r.kind for r in instance_checks(H, 3, identity_objective(3))}
        assert kinds["layer1_ge_conjecture2"] == "conjecture"

    def test_zero_allowed_gets_only_the_zero_bound(self):
        results = instance_checks(power_set_hypergraph(2), 2, zero_based_identity(2))
        assert [r.name for r in results] == ["total_ge_zero_weight_bound"]
        assert results[0].holds

    def test_single_edge_m2_formula_check_present(self):
        H = Hypergraph.from_edges(3, [[1, 2]])
        names = {r.name for r in instance_checks(H, 2, identity_objective(2))}
        assert "m2_single_edge_count" in names


class TestSummaries:
    def test_summarize_flags_failures(self):
        good = CheckResult("x", "theorem", 2, 1, True, {})
        bad = CheckResult("y", "conjecture", 0, 1, False, {})
        summary = summarize([good, bad], instances=1)
        assert not summary.ok
        assert summary.conjecture_violations() == (bad,)
        assert summary.theorem_violations() == ()

    def test_small_grid_clean(self):
        summary = verify_grid([1, 2], [2])
        assert summary.ok
        assert summary.instances == (2 + 5) * 3
        assert summary.checks_run > 0
