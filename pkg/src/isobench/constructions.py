"""Constructive maps from arbitrary weights to isolating weights, the
bipartite witness graphs they support, and exact checkers for the
vertex-removal / disjoint-union counting inequalities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .counting import DEFAULT_BUDGET, count_isolating, count_layer1
from .errors import BudgetExceededError
from .hypergraph import (
    Hypergraph,
    disjoint_union,
    edge_vertices,
    is_inclusion_free,
    is_linear,
    remove_vertex,
)
from .weights import (
    Objective,
    check_weight,
    isolating_edge,
    min_weight_edges,
    subtract_indicator,
)


def _require_inclusion_free(H: Hypergraph) -> None:
    if not is_inclusion_free(H):
        raise ValueError("construction requires an inclusion-free hypergraph")


def descend(H: Hypergraph, f: Objective, w: Sequence[int], e: int) -> tuple[int, ...]:
    """Subtract the indicator of a min-weight edge e, producing an isolating
    weight whose isolated edge is e.

    Requires every entry of w on e to be >= 2 (in particular any
    w in {2..M}^n qualifies) and an inclusion-free hypergraph.  The result
    is re-verified; a failure would indicate a broken precondition check.
    """
    _require_inclusion_free(H)
    check_weight(w, H.n, f.M)
    if e not in H.edges:
        raise ValueError(f"{edge_vertices(e)} is not an edge of H")
    if e not in min_weight_edges(H, f, w):
        raise ValueError(f"{edge_vertices(e)} is not a min-weight edge for w")
    out = subtract_indicator(w, e)
    assert isolating_edge(H, f, out) == e, "descent failed to isolate its edge"
    return out


def pivot_descend(
    H: Hypergraph, f: Objective, w: Sequence[int], pivot: int, e: int
) -> tuple[int, ...]:
    """Subtract the indicator of e minus the pivot vertex.

    Valid when every min-weight edge of w contains the pivot, e is one of
    them, and all entries of w except possibly the pivot's are >= 2; the
    result isolates e.
    """
    _require_inclusion_free(H)
    check_weight(w, H.n, f.M)
    if not 1 <= pivot <= H.n:
        raise ValueError(f"pivot {pivot} out of range 1..{H.n}")
    mins = min_weight_edges(H, f, w)
    bit = 1 << (pivot - 1)
    if any(not (m & bit) for m in mins):
        raise ValueError("every min-weight edge must contain the pivot")
    if e not in mins:
        raise ValueError(f"{edge_vertices(e)} is not a min-weight edge for w")
    if any(x < 2 for i, x in enumerate(w, start=1) if i != pivot):
        raise ValueError("all entries except the pivot's must be >= 2")
    out = subtract_indicator(w, e & ~bit)
    assert isolating_edge(H, f, out) == e, "pivot descent failed to isolate its edge"
    return out


def next_vertex(i: int, e: int) -> int:
    """Cyclically next vertex of edge e after i: the smallest j in e with
    j > i, else the smallest element of e."""
    vs = edge_vertices(e)
    if i not in vs:
        raise ValueError(f"vertex {i} is not in edge {vs}")
    for j in vs:
        if j > i:
            return j
    return vs[0]


def tashma_injection(
    H: Hypergraph, M: int, f: Objective, *, budget: int = DEFAULT_BUDGET
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """The injection {2..M}^n -> Z(H, M, f): subtract the indicator of the
    lexicographically smallest min-weight edge (identity on weights that
    are already isolating because H has no edges).

    Every image is verified isolating; the inverse adds the isolated
    edge's indicator back.
    """
    if M < 2:
        raise ValueError("injection requires M >= 2")
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    _require_inclusion_free(H)
    domain_size = (M - 1) ** H.n
    if domain_size > budget:
        raise BudgetExceededError(f"domain size {domain_size} exceeds budget {budget}")
    mapping: dict[tuple[int, ...], tuple[int, ...]] = {}
    for w in itertools.product(range(2, M + 1), repeat=H.n):
        if not H.edges:
            mapping[w] = w
            continue
        e = min_weight_edges(H, f, w)[0]
        image = subtract_indicator(w, e)
        assert isolating_edge(H, f, image) == e, "injection image failed to isolate"
        mapping[w] = image
    assert len(set(mapping.values())) == len(mapping), "injection collision"
    return mapping


# ---------------------------------------------------------------------------
# Witness graphs


@dataclass(frozen=True)
class WitnessGraph:
    """Bipartite counting gadget: left nodes are the weights with exactly
    one entry equal to 1; right nodes are the isolating weights they were
    charged to.  ``adjacency[k]`` lists right indices adjacent to left
    node k (coincident targets merged), and ``charges[k]`` is
    R(w) = sum over neighbors u of 1/deg(u).
    """

    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]
    charges: tuple[Fraction, ...]

    @property
    def right_degrees(self) -> tuple[int, ...]:
        deg = [0] * len(self.right)
        for nbrs in self.adjacency:
            for u in nbrs:
                deg[u] += 1
        return tuple(deg)

    def total_charge(self) -> Fraction:
        return sum(self.charges, Fraction(0))

    def to_json_dict(self) -> dict:
        return {
            "left": [list(w) for w in self.left],
            "right": [list(w) for w in self.right],
            "adjacency": [list(nbrs) for nbrs in self.adjacency],
            "charges": [str(c) for c in self.charges],
        }


def _left_nodes(n: int, M: int):
    """Weights with exactly one entry 1, in (position, remainder) order."""
    for pos in range(n):
        for rest in itertools.product(range(2, M + 1), repeat=n - 1):
            yield pos + 1, rest[:pos] + (1,) + rest[pos:]


def _assemble(left_nodes, targets_per_left) -> WitnessGraph:
    right_index: dict[tuple[int, ...], int] = {}
    adjacency = []
    for targets in targets_per_left:
        nbrs = []
        for t in targets:
            if t not in right_index:
                right_index[t] = len(right_index)
            idx = right_index[t]
            if idx not in nbrs:
                nbrs.append(idx)
        adjacency.append(tuple(nbrs))
    right = tuple(right_index)
    deg = [0] * len(right)
    for nbrs in adjacency:
        for u in nbrs:
            deg[u] += 1
    charges = tuple(
        sum((Fraction(1, deg[u]) for u in nbrs), Fraction(0)) for nbrs in adjacency
    )
    return WitnessGraph(tuple(left_nodes), right, tuple(adjacency), charges)


def build_witness_graph_A(H: Hypergraph, M: int, f: Objective) -> WitnessGraph:
    """The general witness graph.

    For a left node w whose unique 1 sits at vertex i: if some min-weight
    edge avoids i, charge the descent along the lexicographically smallest
    such edge; otherwise charge w itself (when already isolating) plus the
    pivot descent, or the pivot descents along the two lexicographically
    smallest min-weight edges.  Coincident targets merge into one simple
    edge.
    """
    if M < 2:
        raise ValueError("witness graph requires M >= 2")
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    _require_inclusion_free(H)
    lefts = []
    targets_per_left = []
    for i, w in _left_nodes(H.n, M):
        lefts.append(w)
        if not H.edges:
            targets_per_left.append([w])
            continue
        mins = min_weight_edges(H, f, w)
        bit = 1 << (i - 1)
        avoiding = [e for e in mins if not (e & bit)]
        if avoiding:
            targets = [subtract_indicator(w, avoiding[0])]
        elif len(mins) == 1:
            targets = [w, pivot_descend(H, f, w, i, mins[0])]
        else:
            targets = [
                pivot_descend(H, f, w, i, mins[0]),
                pivot_descend(H, f, w, i, mins[1]),
            ]
        targets_per_left.append(targets)
    return _assemble(lefts, targets_per_left)


def build_witness_graph_B(H: Hypergraph, M: int, f: Objective) -> WitnessGraph:
    """The witness graph for linear hypergraphs whose edges all have
    cardinality at least two; pivot descents are replaced by single-vertex
    descents at the next vertex of the charged edge.
    """
    if M < 2:
        raise ValueError("witness graph requires M >= 2")
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    _require_inclusion_free(H)
    if not is_linear(H):
        raise ValueError("witness graph B requires a linear hypergraph")
    if any(e.bit_count() < 2 for e in H.edges):
        raise ValueError("witness graph B requires every edge cardinality >= 2")

    def single_descend(w, i, e):
        j = next_vertex(i, e)
        out = subtract_indicator(w, 1 << (j - 1))
        assert isolating_edge(H, f, out) == e, "next-vertex descent failed to isolate"
        return out

    lefts = []
    targets_per_left = []
    for i, w in _left_nodes(H.n, M):
        lefts.append(w)
        if not H.edges:
            targets_per_left.append([w])
            continue
        mins = min_weight_edges(H, f, w)
        bit = 1 << (i - 1)
        avoiding = [e for e in mins if not (e & bit)]
        if avoiding:
            targets = [subtract_indicator(w, avoiding[0])]
        elif len(mins) == 1:
            targets = [w, single_descend(w, i, mins[0])]
        else:
            targets = [single_descend(w, i, mins[0]), single_descend(w, i, mins[1])]
        targets_per_left.append(targets)
    return _assemble(lefts, targets_per_left)


# ---------------------------------------------------------------------------
# Vertex-removal and disjoint-union inequalities


@dataclass(frozen=True)
class ReductionCheck:
    """Both sides of one counting inequality, so violations are diagnosable."""

    name: str
    lhs: int
    rhs: int
    holds: bool
    parts: tuple[tuple[str, int], ...]

    def __bool__(self) -> bool:
        return self.holds


def check_degree_zero_reduction(
    H: Hypergraph, v: int, M: int, f: Objective, *, budget: int = DEFAULT_BUDGET
) -> ReductionCheck:
    """|Z_1(H)| >= M |Z_1(H-v)| + sum_{j>=2} |Z_j(H-v)| for degree-0 v."""
    if H.degree(v) != 0:
        raise ValueError(f"vertex {v} has degree {H.degree(v)}, expected 0")
    sub = count_isolating(remove_vertex(H, v), M, f, budget=budget)
    lhs = count_layer1(H, M, f, budget=budget)
    upper_layers = sum(sub.per_layer[1:])
    rhs = M * sub.layer1 + upper_layers
    return ReductionCheck(
        name="degree_zero_reduction",
        lhs=lhs,
        rhs=rhs,
        holds=lhs >= rhs,
        parts=(("Z1_sub", sub.layer1), ("upper_layers_sub", upper_layers)),
    )


def check_degree_one_reduction(
    H: Hypergraph, v: int, M: int, f: Objective, *, budget: int = DEFAULT_BUDGET
) -> ReductionCheck:
    """|Z_1(H)| >= (M-1) |Z_1(H-v)| + (M-1)^(n-1) for degree-1 v."""
    if H.degree(v) != 1:
        raise ValueError(f"vertex {v} has degree {H.degree(v)}, expected 1")
    sub_layer1 = count_layer1(remove_vertex(H, v), M, f, budget=budget)
    lhs = count_layer1(H, M, f, budget=budget)
    rhs = (M - 1) * sub_layer1 + (M - 1) ** (H.n - 1)
    return ReductionCheck(
        name="degree_one_reduction",
        lhs=lhs,
        rhs=rhs,
        holds=lhs >= rhs,
        parts=(("Z1_sub", sub_layer1),),
    )


def check_disjoint_union_reduction(
    H1: Hypergraph, H2: Hypergraph, M: int, f: Objective, *, budget: int = DEFAULT_BUDGET
) -> ReductionCheck:
    """|Z_1(H1 + H2)| >= (M-1)^n2 |Z_1(H1)| + (M-1)^n1 |Z_1(H2)|."""
    union = disjoint_union(H1, H2)
    lhs = count_layer1(union, M, f, budget=budget)
    z1_a = count_layer1(H1, M, f, budget=budget)
    z1_b = count_layer1(H2, M, f, budget=budget)
    rhs = (M - 1) ** H2.n * z1_a + (M - 1) ** H1.n * z1_b
    return ReductionCheck(
        name="disjoint_union_reduction",
        lhs=lhs,
        rhs=rhs,
        holds=lhs >= rhs,
        parts=(("Z1_H1", z1_a), ("Z1_H2", z1_b)),
    )
