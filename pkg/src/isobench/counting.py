"""Exact brute-force counts of isolating weight vectors.

Every count here comes from a full scan of the weight space (chunked and
vectorized, optionally partitioned across worker processes by the first
coordinate); there are no counting shortcuts.  All edge-weight comparisons
use the objective's denominator-cleared integer values, so ties are
detected exactly.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .errors import BudgetExceededError
from .hypergraph import Hypergraph, edge_vertices
from .weights import (
    Objective,
    generic_high_objective,
    generic_low_objective,
    identity_objective,
    random_objective,
)

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 15


@dataclass(frozen=True)
class CountReport:
    """Exact isolating-weight counts for one (H, M, f) instance.

    ``per_layer[j-1]`` counts isolating weights with minimum entry j;
    ``per_edge`` maps each isolated edge (bitmask) to its count and is
    empty for the empty hypergraph, whose weights are all isolating by
    convention.
    """

    n: int
    M: int
    total: int
    per_layer: tuple[int, ...]
    per_edge: tuple[tuple[int, int], ...]

    @property
    def layer1(self) -> int:
        return self.per_layer[0]

    def per_edge_dict(self) -> dict[int, int]:
        return dict(self.per_edge)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "M": self.M,
            "total": self.total,
            "per_layer": list(self.per_layer),
            "per_edge": [
                {"edge": list(edge_vertices(e)), "count": c} for e, c in self.per_edge
            ],
        }


def _edge_index_lists(H: Hypergraph) -> list[np.ndarray]:
    return [
        np.array([v - 1 for v in edge_vertices(e)], dtype=np.intp) for e in H.edges
    ]


def _int64_safe(f: Objective, n: int) -> bool:
    return max(abs(s) for s in f.scaled) * max(n, 1) < (1 << 62)


def _decode_rows(n: int, M: int, start: int, stop: int) -> np.ndarray:
    """Rows [start, stop) of [M]^n in lexicographic order (first coordinate
    most significant), as an int64 array of shape (stop-start, n)."""
    idx = np.arange(start, stop, dtype=np.int64)
    cols = np.empty((stop - start, n), dtype=np.int64)
    for pos in range(n):
        div = M ** (n - 1 - pos)
        cols[:, pos] = (idx // div) % M + 1
    return cols


def _scan_rows(
    W: np.ndarray,
    table: np.ndarray,
    edges_idx: list[np.ndarray],
    M: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-row isolation over a block of weight rows.

    Returns (isolating mask, layer per row, argmin edge index per row).
    For an empty edge list everything is isolating and edge index is 0.
    """
    rows = W.shape[0]
    if not edges_idx:
        return (
            np.ones(rows, dtype=bool),
            W.min(axis=1),
            np.zeros(rows, dtype=np.int64),
        )
    vals = table[W]
    sums = np.empty((len(edges_idx), rows), dtype=np.int64)
    for t, idx in enumerate(edges_idx):
        if idx.size:
            sums[t] = vals[:, idx].sum(axis=1)
        else:
            sums[t] = 0
    lo = sums.min(axis=0)
    at_min = sums == lo
    iso = at_min.sum(axis=0) == 1
    return iso, W.min(axis=1), at_min.argmax(axis=0)


def _accumulate(
    H: Hypergraph,
    f: Objective,
    M: int,
    row_blocks: Iterator[np.ndarray],
) -> tuple[int, np.ndarray, np.ndarray]:
    table = np.array(f.int_table(), dtype=np.int64)
    edges_idx = _edge_index_lists(H)
    total = 0
    per_layer = np.zeros(M + 1, dtype=np.int64)
    per_edge = np.zeros(max(H.m, 1), dtype=np.int64)
    for W in row_blocks:
        iso, layers, edge_id = _scan_rows(W, table, edges_idx, M)
        total += int(iso.sum())
        per_layer += np.bincount(layers[iso], minlength=M + 1)
        if H.m:
            per_edge += np.bincount(edge_id[iso], minlength=H.m)
    return total, per_layer, per_edge


def _row_blocks(n: int, M: int, start: int, stop: int) -> Iterator[np.ndarray]:
    pos = start
    while pos < stop:
        end = min(pos + _CHUNK, stop)
        yield _decode_rows(n, M, pos, end)
        pos = end


def _count_range(H: Hypergraph, f: Objective, M: int, start: int, stop: int):
    return _accumulate(H, f, M, _row_blocks(H.n, M, start, stop))


def _count_range_py(H: Hypergraph, f: Objective, M: int, start: int, stop: int):
    """Pure-Python fallback for objectives whose scaled values overflow
    int64.  Same enumeration order, arbitrary-precision integers."""
    table = f.int_table()
    edges = [edge_vertices(e) for e in H.edges]
    total = 0
    per_layer = np.zeros(M + 1, dtype=np.int64)
    per_edge = np.zeros(max(H.m, 1), dtype=np.int64)
    n = H.n
    for rank in range(start, stop):
        w = []
        r = rank
        for pos in range(n):
            div = M ** (n - 1 - pos)
            w.append((r // div) % M + 1)
        if edges:
            sums = [sum(table[w[v - 1]] for v in e) for e in edges]
            lo = min(sums)
            if sums.count(lo) != 1:
                continue
            per_edge[sums.index(lo)] += 1
        total += 1
        per_layer[min(w)] += 1
    return total, per_layer, per_edge


def count_isolating(
    H: Hypergraph,
    M: int,
    f: Objective,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> CountReport:
    """Exact |Z(H, M, f)| with per-layer and per-isolated-edge breakdowns,
    by full enumeration of [M]^n."""
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    rows = M**H.n
    if rows > budget:
        raise BudgetExceededError(f"{M}^{H.n} = {rows} weight evaluations exceed budget {budget}")
    use_py = not _int64_safe(f, H.n)
    if workers > 1 and M >= 2:
        # partition by the first coordinate; merge in coordinate order
        block = M ** (H.n - 1)
        jobs = [(H, f, M, k * block, (k + 1) * block, use_py) for k in range(M)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_worker, jobs))
    else:
        fn = _count_range_py if use_py else _count_range
        parts = [fn(H, f, M, 0, rows)]
    total = sum(p[0] for p in parts)
    per_layer = sum(p[1] for p in parts)
    per_edge = sum(p[2] for p in parts)
    pairs = tuple((e, int(c)) for e, c in zip(H.edges, per_edge) if c)
    return CountReport(
        n=H.n,
        M=M,
        total=total,
        per_layer=tuple(int(x) for x in per_layer[1:]),
        per_edge=pairs,
    )


def _count_worker(args):
    H, f, M, a, b, use_py = args
    fn = _count_range_py if use_py else _count_range
    return fn(H, f, M, a, b)


def _layer1_blocks(n: int, M: int) -> Iterator[np.ndarray]:
    """Rows of [M]^n having at least one entry 1, generated directly.

    Block p holds the rows whose first 1 sits at position p: earlier
    positions range over {2..M}, later ones over the full [M].
    """
    for p in range(n):
        size = (M - 1) ** p * M ** (n - 1 - p)
        right_span = M ** (n - 1 - p)
        pos = 0
        while pos < size:
            end = min(pos + _CHUNK, size)
            idx = np.arange(pos, end, dtype=np.int64)
            left = idx // right_span
            right = idx % right_span
            W = np.empty((end - pos, n), dtype=np.int64)
            for t in range(p):
                div = (M - 1) ** (p - 1 - t)
                W[:, t] = (left // div) % (M - 1) + 2
            W[:, p] = 1
            for t in range(p + 1, n):
                div = M ** (n - 1 - t)
                W[:, t] = (right // div) % M + 1
            yield W
            pos = end


def count_layer1(
    H: Hypergraph,
    M: int,
    f: Objective,
    *,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Exact |Z_1(H, M, f)|, scanning only weights with some entry 1."""
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    rows = M**H.n - (M - 1) ** H.n
    if rows > budget:
        raise BudgetExceededError(f"{rows} weight evaluations exceed budget {budget}")
    if not _int64_safe(f, H.n):
        total, per_layer, _ = _count_range_py(H, f, M, 0, M**H.n)
        return int(per_layer[1])
    table = np.array(f.int_table(), dtype=np.int64)
    edges_idx = _edge_index_lists(H)
    total = 0
    for W in _layer1_blocks(H.n, M):
        iso, _, _ = _scan_rows(W, table, edges_idx, M)
        total += int(iso.sum())
    return total


def isolating_weights(
    H: Hypergraph,
    M: int,
    f: Objective,
    *,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[int, ...]]:
    """Materialize Z(H, M, f) as a lexicographically ordered list."""
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    rows = M**H.n
    if rows > budget:
        raise BudgetExceededError(f"{rows} weight evaluations exceed budget {budget}")
    table = np.array(f.int_table(), dtype=np.int64)
    edges_idx = _edge_index_lists(H)
    out: list[tuple[int, ...]] = []
    for W in _row_blocks(H.n, M, 0, rows):
        iso, _, _ = _scan_rows(W, table, edges_idx, M)
        for row in W[iso]:
            out.append(tuple(int(x) for x in row))
    return out


# ---------------------------------------------------------------------------
# Minimization over a finite objective family


@dataclass(frozen=True)
class ObjectiveStrategy:
    """A finite, reportable family of objectives standing in for the
    minimization over all strictly increasing f.

    kinds: ``presets`` (identity + the two generic presets),
    ``random_rational`` (``count`` seeded random objectives), and
    ``exhaustive_integer`` (all strictly increasing integer objectives
    with values in 1..bound).
    """

    kind: str
    count: int = 0
    seed: int = 0
    bound: int = 0

    def __post_init__(self):
        if self.kind not in ("presets", "random_rational", "exhaustive_integer"):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.kind == "random_rational" and self.count < 1:
            raise ValueError("random_rational strategy needs count >= 1")
        if self.kind == "exhaustive_integer" and self.bound < 1:
            raise ValueError("exhaustive_integer strategy needs bound >= 1")

    def candidates(self, M: int, n: int) -> list[Objective]:
        if self.kind == "presets":
            return [
                identity_objective(M),
                generic_high_objective(M, n),
                generic_low_objective(M, n),
            ]
        if self.kind == "random_rational":
            rng = np.random.default_rng([self.seed, M, n])
            return [random_objective(M, rng) for _ in range(self.count)]
        cands = [
            Objective(M, tuple(Fraction(v) for v in combo))
            for combo in itertools.combinations(range(1, self.bound + 1), M)
        ]
        if not cands:
            raise ValueError(
                f"exhaustive_integer bound {self.bound} admits no strictly increasing objective on {M} labels"
            )
        return cands

    def to_json_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.kind == "random_rational":
            doc["count"] = self.count
            doc["seed"] = self.seed
        if self.kind == "exhaustive_integer":
            doc["bound"] = self.bound
        return doc


@dataclass(frozen=True)
class MinimizationResult:
    """Minimum counts over a strategy's objective family (an upper bound
    on the true minimum over all strictly increasing objectives)."""

    report: CountReport
    objective: Objective
    min_layer1: int
    layer1_objective: Objective
    candidates: int


def count_min_over_objectives(
    H: Hypergraph,
    M: int,
    strategy: ObjectiveStrategy,
    *,
    budget: int = DEFAULT_BUDGET,
) -> MinimizationResult:
    """Minimum |Z| (and, separately, minimum |Z_1|) over the strategy's
    finite objective family, deterministic given the strategy seed."""
    family = strategy.candidates(M, H.n)
    best: Optional[CountReport] = None
    best_f: Optional[Objective] = None
    best_l1: Optional[int] = None
    best_l1_f: Optional[Objective] = None
    for f in family:
        report = count_isolating(H, M, f, budget=budget)
        if best is None or report.total < best.total:
            best, best_f = report, f
        if best_l1 is None or report.layer1 < best_l1:
            best_l1, best_l1_f = report.layer1, f
    assert best is not None and best_f is not None
    assert best_l1 is not None and best_l1_f is not None
    return MinimizationResult(
        report=best,
        objective=best_f,
        min_layer1=best_l1,
        layer1_objective=best_l1_f,
        candidates=len(family),
    )
