"""Named inequality checks binding the exact counts to every applicable
closed-form bound, witness-graph invariant, injection property, and
two-valued-weight result on an instance or a grid.

Each check is tagged ``theorem`` or ``conjecture``: a failing theorem
check is a bug, a failing conjecture check is a discovery; both carry the
witness instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .bounds import (
    bounded_edge_bound,
    conjectured_Y,
    conjectured_Y1,
    corollary_Y_bound,
    main_theorem_bound,
    ta_shma_bound,
    zero_weight_Y,
)
from .constructions import build_witness_graph_A, build_witness_graph_B, tashma_injection
from .counting import DEFAULT_BUDGET, count_isolating
from .hypergraph import Hypergraph, enumerate_hypergraphs, is_inclusion_free, is_linear
from .special_m2 import check_min_cardinality_reduction, special_isolating_weights
from .weights import Objective, is_isolating, layer, preset_objectives
from .hypergraph import one_degenerate_order


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: str  # "theorem" | "conjecture"
    lhs: object
    rhs: object
    holds: bool
    instance: dict

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "instance": self.instance,
        }


def _instance_doc(H: Hypergraph, M: int, f: Objective) -> dict:
    return {"hypergraph": H.to_json_dict(), "M": M, "objective": f.to_json_dict()}


def instance_checks(
    H: Hypergraph,
    M: int,
    f: Objective,
    *,
    budget: int = DEFAULT_BUDGET,
    with_witness: bool = True,
    with_injection: bool = True,
) -> list[CheckResult]:
    """Every applicable check for one (H, M, f) instance.

    For zero-allowed objectives or hypergraphs with nested edges only the
    universal (M-1)^n bound is claimed; the remaining machinery assumes an
    inclusion-free hypergraph and strictly positive objective.
    """
    doc = _instance_doc(H, M, f)
    report = count_isolating(H, M, f, budget=budget)
    total, layer1 = report.total, report.layer1
    n = H.n
    results: list[CheckResult] = []

    def add(name: str, kind: str, lhs, rhs, holds: bool) -> None:
        results.append(CheckResult(name, kind, lhs, rhs, holds, doc))

    if f.zero_allowed or not is_inclusion_free(H):
        rhs = zero_weight_Y(M, n)
        add("total_ge_zero_weight_bound", "theorem", total, rhs, total >= rhs)
        return results

    add("total_ge_ta_shma", "theorem", total, ta_shma_bound(M, n), total >= ta_shma_bound(M, n))
    rhs = corollary_Y_bound(M, n)
    add("total_ge_layered_bound", "theorem", total, rhs, total >= rhs)
    if M >= 2:
        rhs = main_theorem_bound(M, n)
        add("layer1_ge_main_theorem", "theorem", layer1, rhs, layer1 >= rhs)
        r_eff = max(2, max((e.bit_count() for e in H.edges), default=2))
        rhs = bounded_edge_bound(M, n, r_eff)
        add("layer1_ge_bounded_edge", "theorem", layer1, rhs, layer1 >= rhs)

    proven = M <= 2 or is_linear(H) or one_degenerate_order(H) is not None
    kind = "theorem" if proven else "conjecture"
    rhs = conjectured_Y1(M, n)
    add("layer1_ge_conjecture2", kind, layer1, rhs, layer1 >= rhs)
    rhs = conjectured_Y(M, n)
    add("total_ge_conjecture1", kind, total, rhs, total >= rhs)

    if with_witness and M >= 2:
        G = build_witness_graph_A(H, M, f)
        ok_count = sum(1 for u in G.right if is_isolating(H, f, u) and layer(u) == 1)
        add(
            "witnessA_right_isolating_layer1",
            "theorem",
            ok_count,
            len(G.right),
            ok_count == len(G.right),
        )
        total_charge = G.total_charge()
        add(
            "witnessA_charge_identity",
            "theorem",
            total_charge,
            len(G.right),
            total_charge == len(G.right),
        )
        rhs = main_theorem_bound(M, n)
        add("witnessA_charge_bound", "theorem", total_charge, rhs, total_charge >= rhs)
        if is_linear(H) and all(e.bit_count() >= 2 for e in H.edges):
            GB = build_witness_graph_B(H, M, f)
            min_charge = min(GB.charges, default=Fraction(1))
            add("witnessB_per_node_charge", "theorem", min_charge, 1, min_charge >= 1)
            rhs = conjectured_Y1(M, n)
            add(
                "witnessB_charge_bound",
                "theorem",
                GB.total_charge(),
                rhs,
                GB.total_charge() >= rhs,
            )

    if with_injection and M >= 2:
        mapping = tashma_injection(H, M, f, budget=budget)
        image = set(mapping.values())
        rhs = (M - 1) ** n
        add("injection_image_size", "theorem", len(image), rhs, len(image) == rhs)
        iso_count = sum(1 for u in image if is_isolating(H, f, u))
        add("injection_images_isolating", "theorem", iso_count, len(image), iso_count == len(image))

    if M == 2:
        subset = check_min_cardinality_reduction(H, f, budget=budget)
        add(
            "m2_special_subset_of_Z",
            "theorem",
            len(subset.counterexamples),
            0,
            subset.holds,
        )
        add("m2_layer1_ge_n", "theorem", layer1, n, layer1 >= n)
        if H.edges:
            cards = {e.bit_count() for e in H.edges}
            if len(cards) == 1:
                specials = special_isolating_weights(H, budget=budget)
                add("m2_special_ge_n", "theorem", len(specials), n, len(specials) >= n)
                if H.m == 1:
                    r = next(iter(cards))
                    rhs = 2**r + 2 ** (n - r) - 1
                    add(
                        "m2_single_edge_count",
                        "theorem",
                        len(specials),
                        rhs,
                        len(specials) == rhs,
                    )
    return results


@dataclass(frozen=True)
class VerifySummary:
    checks_run: int
    instances: int
    violations: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def theorem_violations(self) -> tuple[CheckResult, ...]:
        return tuple(v for v in self.violations if v.kind == "theorem")

    def conjecture_violations(self) -> tuple[CheckResult, ...]:
        return tuple(v for v in self.violations if v.kind == "conjecture")

    def to_json_dict(self) -> dict:
        return {
            "checks_run": self.checks_run,
            "instances": self.instances,
            "ok": self.ok,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def summarize(results: Iterable[CheckResult], instances: int) -> VerifySummary:
    results = list(results)
    return VerifySummary(
        checks_run=len(results),
        instances=instances,
        violations=tuple(r for r in results if not r.holds),
    )


def grid_instances(
    n_values: Sequence[int],
    M_values: Sequence[int],
    objective_factory: Optional[Callable[[int, int], Sequence[Objective]]] = None,
    *,
    inclusion_free: bool = True,
    enum_budget: int = 1_000_000,
) -> Iterator[tuple[Hypergraph, int, Objective]]:
    """All (H, M, f) instances of a sweep, in deterministic order."""
    factory = objective_factory or preset_objectives
    for n in n_values:
        families = {M: list(factory(M, n)) for M in M_values}
        for H in enumerate_hypergraphs(n, inclusion_free=inclusion_free, max_count=enum_budget):
            for M in M_values:
                for f in families[M]:
                    yield H, M, f


def verify_grid(
    n_values: Sequence[int],
    M_values: Sequence[int],
    objective_factory: Optional[Callable[[int, int], Sequence[Objective]]] = None,
    *,
    budget: int = DEFAULT_BUDGET,
    enum_budget: int = 1_000_000,
    with_witness: bool = True,
    with_injection: bool = True,
) -> VerifySummary:
    """Run every instance check over an exhaustive inclusion-free grid."""
    all_results: list[CheckResult] = []
    instances = 0
    for H, M, f in grid_instances(
        n_values, M_values, objective_factory, enum_budget=enum_budget
    ):
        instances += 1
        all_results.extend(
            instance_checks(
                H,
                M,
                f,
                budget=budget,
                with_witness=with_witness,
                with_injection=with_injection,
            )
        )
    return summarize(all_results, instances)
