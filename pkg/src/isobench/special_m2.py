"""Two-valued weight machinery: special isolating weights, the reduction
to minimum-cardinality subhypergraphs, exact minimum vertex covers, and
per-edge richness reports for uniform hypergraphs.

A weight w: [n] -> {1, 2} is special isolating when some edge e is the
unique min-weight edge under unit weights and every vertex of e weighs no
more than every vertex outside e.  The objective function plays no role.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .counting import DEFAULT_BUDGET
from .errors import BudgetExceededError
from .hypergraph import Hypergraph, edge_vertices
from .weights import Objective, is_isolating


def _two_weight_tuple(T: int, n: int) -> tuple[int, ...]:
    """Weight tuple for the set T of weight-2 vertices."""
    return tuple(1 + ((T >> i) & 1) for i in range(n))


def _special_scan(H: Hypergraph) -> tuple[list[int], np.ndarray]:
    """Scan [2]^n; return the weight-2 sets of the special weights plus a
    per-edge histogram of their unique min-weight edges."""
    n = H.n
    size = 1 << n
    full = size - 1
    T = np.arange(size, dtype=np.int64)
    m = H.m
    if m == 0:
        return list(range(size)), np.zeros(0, dtype=np.int64)
    edges = np.array(H.edges, dtype=np.int64)
    cards = np.array([e.bit_count() for e in H.edges], dtype=np.int64)
    # w(e) = |e| + #(weight-2 vertices in e) under unit weights
    sums = np.empty((m, size), dtype=np.int64)
    cond1 = np.empty((m, size), dtype=bool)
    for t, e in enumerate(H.edges):
        in2 = np.bitwise_count(T & e).astype(np.int64)
        sums[t] = cards[t] + in2
        ones_outside = (~T & full) & ~e & full
        cond1[t] = (in2 == 0) | (ones_outside == 0)
    lo = sums.min(axis=0)
    at_min = sums == lo
    unique = at_min.sum(axis=0) == 1
    argmin = at_min.argmax(axis=0)
    ok = unique & np.take_along_axis(cond1, argmin[None, :], axis=0)[0]
    specials = [int(t) for t in T[ok]]
    hist = np.bincount(argmin[ok], minlength=m)
    return specials, hist


def special_isolating_weights(
    H: Hypergraph, *, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All special isolating weights, sorted lexicographically.  An empty
    hypergraph returns all of [2]^n by convention."""
    if (1 << H.n) > budget:
        raise BudgetExceededError(f"2^{H.n} weight evaluations exceed budget {budget}")
    specials, _ = _special_scan(H)
    return sorted(_two_weight_tuple(t, H.n) for t in specials)


def min_cardinality_subgraph(H: Hypergraph) -> tuple[int, Hypergraph]:
    """The minimum edge cardinality r and the subhypergraph of all
    cardinality-r edges."""
    if not H.edges:
        raise ValueError("hypergraph has no edges")
    r = min(e.bit_count() for e in H.edges)
    kept = tuple(e for e in H.edges if e.bit_count() == r)
    return r, Hypergraph(H.n, kept, H.allow_empty_edge, H.require_inclusion_free)


@dataclass(frozen=True)
class SubsetCheck:
    """Result of the special-weights containment check."""

    holds: bool
    special_count: int
    counterexamples: tuple[tuple[int, ...], ...]

    def __bool__(self) -> bool:
        return self.holds


def check_min_cardinality_reduction(
    H: Hypergraph, f: Objective, *, budget: int = DEFAULT_BUDGET
) -> SubsetCheck:
    """Verify Z'(H_r) is contained in Z(H, 2, f) by direct enumeration."""
    if f.M != 2:
        raise ValueError("this reduction is specific to M = 2")
    if not H.edges:
        return SubsetCheck(holds=True, special_count=2**H.n, counterexamples=())
    _, H_r = min_cardinality_subgraph(H)
    bad = []
    specials = special_isolating_weights(H_r, budget=budget)
    for w in specials:
        if not is_isolating(H, f, w):
            bad.append(w)
    return SubsetCheck(holds=not bad, special_count=len(specials), counterexamples=tuple(bad))


def min_vertex_cover(G: Hypergraph, *, max_used: int = 20) -> tuple[int, ...]:
    """Exact minimum vertex cover by smallest-first exhaustive search over
    the vertices that occur in edges; ties broken to the lexicographically
    smallest cover.  Rejects hypergraphs with an empty edge (uncoverable).
    """
    if any(e == 0 for e in G.edges):
        raise ValueError("empty edge cannot be covered")
    if not G.edges:
        return ()
    used = sorted({v for e in G.edges for v in edge_vertices(e)})
    if len(used) > max_used:
        raise BudgetExceededError(f"exact cover search limited to {max_used} vertices")
    for k in range(1, len(used) + 1):
        for combo in itertools.combinations(used, k):
            mask = 0
            for v in combo:
                mask |= 1 << (v - 1)
            if all(e & mask for e in G.edges):
                return combo
    return tuple(used)


@dataclass(frozen=True)
class EdgeRichness:
    """Per-edge data for an r-uniform hypergraph: minimum covers of the
    difference hypergraphs, the guaranteed special-weight count, the exact
    count, richness, and the single-swap indicators."""

    edge: int
    cover1: tuple[int, ...]
    cover2: tuple[int, ...]
    s_lower: int
    s_exact: int
    rich: bool
    swaps: tuple[tuple[int, int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "edge": list(edge_vertices(self.edge)),
            "C1": list(self.cover1),
            "C2": list(self.cover2),
            "C1_size": len(self.cover1),
            "C2_size": len(self.cover2),
            "S_lower": self.s_lower,
            "S_exact": self.s_exact,
            "rich": self.rich,
            "K": [{"i": i, "j": j, "value": v} for i, j, v in self.swaps],
        }


@dataclass(frozen=True)
class RichEdgeReport:
    n: int
    r: int
    total_special: int
    edges: tuple[EdgeRichness, ...]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "total_special": self.total_special,
            "edges": [e.to_json_dict() for e in self.edges],
        }


def rich_edge_report(H: Hypergraph, *, budget: int = DEFAULT_BUDGET) -> RichEdgeReport:
    """Full per-edge richness report for a nonempty r-uniform hypergraph.

    The difference hypergraphs H1(e) = {e - e'} and H2(e) = {e' - e} range
    over the other edges e' != e (including e' = e would add the empty,
    uncoverable set), with duplicate difference sets collapsed.
    """
    if not H.edges:
        raise ValueError("hypergraph has no edges")
    cards = {e.bit_count() for e in H.edges}
    if len(cards) != 1:
        raise ValueError(f"hypergraph is not uniform (cardinalities {sorted(cards)})")
    r = cards.pop()
    if r == 0:
        raise ValueError("uniform cardinality must be >= 1")
    if (1 << H.n) > budget:
        raise BudgetExceededError(f"2^{H.n} weight evaluations exceed budget {budget}")
    specials, hist = _special_scan(H)
    reports = []
    for t, e in enumerate(H.edges):
        others = [o for o in H.edges if o != e]
        h1_edges = tuple(sorted({e & ~o for o in others}, key=edge_vertices))
        h2_edges = tuple(sorted({o & ~e for o in others}, key=edge_vertices))
        c1 = min_vertex_cover(Hypergraph(H.n, h1_edges, require_inclusion_free=False))
        c2 = min_vertex_cover(Hypergraph(H.n, h2_edges, require_inclusion_free=False))
        s_lower = 2 ** (H.n - r - len(c2)) + 2 ** (r - len(c1)) - 1
        rich = len(c2) < H.n - r or len(c1) < r
        swaps = []
        e_vs = edge_vertices(e)
        out_vs = [v for v in range(1, H.n + 1) if v not in e_vs]
        edge_set = set(H.edges)
        for i in e_vs:
            for j in out_vs:
                swapped = e ^ (1 << (i - 1)) ^ (1 << (j - 1))
                swaps.append((i, j, 1 if swapped in edge_set else 0))
        reports.append(
            EdgeRichness(
                edge=e,
                cover1=c1,
                cover2=c2,
                s_lower=s_lower,
                s_exact=int(hist[t]),
                rich=rich,
                swaps=tuple(swaps),
            )
        )
    return RichEdgeReport(
        n=H.n, r=r, total_special=len(specials), edges=tuple(reports)
    )
