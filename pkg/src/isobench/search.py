"""Counterexample hunting over exhaustive small-hypergraph families, the
seeded Monte Carlo samplers, and the asymptotic comparison table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .bounds import conjectured_Y, conjectured_Y1, h_eval
from .counting import (
    DEFAULT_BUDGET,
    ObjectiveStrategy,
    _edge_index_lists,
    _int64_safe,
    _scan_rows,
    count_isolating,
    count_layer1,
)
from .hypergraph import Hypergraph, enumerate_hypergraphs
from .weights import Objective


@dataclass(frozen=True)
class InstanceRecord:
    """One (H, M, f) instance together with its exact counts and ratios."""

    hypergraph: dict
    M: int
    objective: dict
    total: int
    layer1: int
    ratio_total: Optional[Fraction]
    ratio_layer1: Optional[Fraction]

    def to_json_dict(self) -> dict:
        return {
            "hypergraph": self.hypergraph,
            "M": self.M,
            "objective": self.objective,
            "total": self.total,
            "layer1": self.layer1,
            "ratio_total": None if self.ratio_total is None else str(self.ratio_total),
            "ratio_layer1": None if self.ratio_layer1 is None else str(self.ratio_layer1),
        }


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a conjecture sweep.  ``violations`` must stay empty
    unless a conjecture actually falls on the searched grid."""

    n_max: int
    M_values: tuple[int, ...]
    strategy: dict
    prune: bool
    seed: int
    instances: int
    min_ratio_total: Optional[Fraction]
    min_ratio_layer1: Optional[Fraction]
    witness_total: Optional[InstanceRecord]
    witness_layer1: Optional[InstanceRecord]
    violations: tuple[InstanceRecord, ...]

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "M_values": list(self.M_values),
            "strategy": self.strategy,
            "prune": self.prune,
            "seed": self.seed,
            "instances": self.instances,
            "min_ratio_total": None if self.min_ratio_total is None else str(self.min_ratio_total),
            "min_ratio_layer1": None
            if self.min_ratio_layer1 is None
            else str(self.min_ratio_layer1),
            "witness_total": None if self.witness_total is None else self.witness_total.to_json_dict(),
            "witness_layer1": None
            if self.witness_layer1 is None
            else self.witness_layer1.to_json_dict(),
            "violations": [v.to_json_dict() for v in self.violations],
        }


def conjecture_search(
    n_max: int,
    M_values: Sequence[int],
    strategy: ObjectiveStrategy,
    *,
    prune: bool = False,
    seed: int = 0,
    enum_budget: int = 1_000_000,
    count_budget: int = DEFAULT_BUDGET,
) -> SearchReport:
    """Exhaustive sweep of inclusion-free hypergraphs on up to n_max
    vertices against both conjectured minima.

    ``prune`` restricts to connected hypergraphs with minimum degree two,
    the shape any minimal counterexample must have.  Deterministic given
    the seed (which feeds the strategy's random objectives).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    M_values = tuple(M_values)
    if not M_values or any(M < 1 for M in M_values):
        raise ValueError("M_values must be a nonempty list of positive integers")
    if strategy.kind == "random_rational" and strategy.seed != seed:
        strategy = ObjectiveStrategy(
            kind=strategy.kind, count=strategy.count, seed=seed, bound=strategy.bound
        )

    instances = 0
    min_total: Optional[tuple[Fraction, InstanceRecord]] = None
    min_layer1: Optional[tuple[Fraction, InstanceRecord]] = None
    violations: list[InstanceRecord] = []
    for n in range(1, n_max + 1):
        families = {M: strategy.candidates(M, n) for M in M_values}
        for H in enumerate_hypergraphs(
            n,
            inclusion_free=True,
            connected=prune,
            min_degree_at_least=2 if prune else 0,
            max_count=enum_budget,
        ):
            for M in M_values:
                for f in families[M]:
                    report = count_isolating(H, M, f, budget=count_budget)
                    instances += 1
                    denom_total = conjectured_Y(M, n)
                    denom_layer1 = conjectured_Y1(M, n)
                    ratio_total = (
                        Fraction(report.total, denom_total) if denom_total else None
                    )
                    ratio_layer1 = (
                        Fraction(report.layer1, denom_layer1) if denom_layer1 else None
                    )
                    record = InstanceRecord(
                        hypergraph=H.to_json_dict(),
                        M=M,
                        objective=f.to_json_dict(),
                        total=report.total,
                        layer1=report.layer1,
                        ratio_total=ratio_total,
                        ratio_layer1=ratio_layer1,
                    )
                    if ratio_total is not None and (
                        min_total is None or ratio_total < min_total[0]
                    ):
                        min_total = (ratio_total, record)
                    if ratio_layer1 is not None and (
                        min_layer1 is None or ratio_layer1 < min_layer1[0]
                    ):
                        min_layer1 = (ratio_layer1, record)
                    if (ratio_total is not None and ratio_total < 1) or (
                        ratio_layer1 is not None and ratio_layer1 < 1
                    ):
                        violations.append(record)
    return SearchReport(
        n_max=n_max,
        M_values=M_values,
        strategy=strategy.to_json_dict(),
        prune=prune,
        seed=seed,
        instances=instances,
        min_ratio_total=None if min_total is None else min_total[0],
        min_ratio_layer1=None if min_layer1 is None else min_layer1[0],
        witness_total=None if min_total is None else min_total[1],
        witness_layer1=None if min_layer1 is None else min_layer1[1],
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# Seeded samplers


@dataclass(frozen=True)
class SampleReport:
    """A Monte Carlo estimate with its exact counterpart (when affordable)
    and the h-function predictions at phi = n/M."""

    kind: str  # "uniform" | "layer1"
    n: int
    M: int
    trials: int
    seed: int
    successes: int
    draws: int
    estimate: float
    exact: Optional[Fraction]
    phi: Fraction
    h0: float
    h1: float
    h2: float

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "M": self.M,
            "trials": self.trials,
            "seed": self.seed,
            "successes": self.successes,
            "draws": self.draws,
            "estimate": self.estimate,
            "exact": None if self.exact is None else str(self.exact),
            "phi": str(self.phi),
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
        }


def _isolating_mask_for_rows(H: Hypergraph, f: Objective, W: np.ndarray) -> np.ndarray:
    table = np.array(f.int_table(), dtype=np.int64)
    iso, _, _ = _scan_rows(W, table, _edge_index_lists(H), f.M)
    return iso


def _h_values(n: int, M: int) -> tuple[Fraction, float, float, float]:
    phi = Fraction(n, M)
    return (
        phi,
        float(h_eval("h0", phi)),
        float(h_eval("h1", phi)),
        float(h_eval("h2", phi)),
    )


def sample_uniform(
    H: Hypergraph,
    M: int,
    f: Objective,
    trials: int,
    seed: int,
    *,
    exact_budget: int = 1_000_000,
    batch: int = 1 << 14,
) -> SampleReport:
    """Estimate p = |Z|/M^n from seeded uniform draws over [M]^n."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    if not _int64_safe(f, H.n):
        raise ValueError("objective values too large for the sampling path")
    rng = np.random.default_rng(seed)
    successes = 0
    done = 0
    while done < trials:
        take = min(batch, trials - done)
        W = rng.integers(1, M + 1, size=(take, H.n), dtype=np.int64)
        successes += int(_isolating_mask_for_rows(H, f, W).sum())
        done += take
    exact = None
    if M**H.n <= exact_budget:
        exact = Fraction(count_isolating(H, M, f, budget=exact_budget).total, M**H.n)
    phi, h0, h1, h2 = _h_values(H.n, M)
    return SampleReport(
        kind="uniform",
        n=H.n,
        M=M,
        trials=trials,
        seed=seed,
        successes=successes,
        draws=trials,
        estimate=successes / trials,
        exact=exact,
        phi=phi,
        h0=h0,
        h1=h1,
        h2=h2,
    )


def sample_layer1(
    H: Hypergraph,
    M: int,
    f: Objective,
    trials: int,
    seed: int,
    *,
    exact_budget: int = 1_000_000,
    batch: int = 1 << 14,
) -> SampleReport:
    """Estimate q = |Z_1|/(M^n - (M-1)^n) from uniform draws over the
    layer-1 weights, implemented by rejecting draws with no entry 1.

    Acceptance probability is 1 - (1 - 1/M)^n, so the expected number of
    rejections stays small for phi = n/M bounded away from 0.  The total
    number of raw draws is reported.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if f.M != M:
        raise ValueError(f"objective range {f.M} does not match M={M}")
    if not _int64_safe(f, H.n):
        raise ValueError("objective values too large for the sampling path")
    rng = np.random.default_rng(seed)
    successes = 0
    accepted = 0
    draws = 0
    while accepted < trials:
        W = rng.integers(1, M + 1, size=(batch, H.n), dtype=np.int64)
        draws += batch
        keep = (W == 1).any(axis=1)
        W = W[keep]
        if W.shape[0] > trials - accepted:
            W = W[: trials - accepted]
        if W.shape[0]:
            successes += int(_isolating_mask_for_rows(H, f, W).sum())
            accepted += W.shape[0]
    exact = None
    if M**H.n <= exact_budget:
        denom = M**H.n - (M - 1) ** H.n
        z1 = count_layer1(H, M, f, budget=exact_budget)
        exact = Fraction(z1, denom) if denom else Fraction(1)
    phi, h0, h1, h2 = _h_values(H.n, M)
    return SampleReport(
        kind="layer1",
        n=H.n,
        M=M,
        trials=trials,
        seed=seed,
        successes=successes,
        draws=draws,
        estimate=successes / trials,
        exact=exact,
        phi=phi,
        h0=h0,
        h1=h1,
        h2=h2,
    )


# ---------------------------------------------------------------------------
# Asymptotic comparison


@dataclass(frozen=True)
class AsymptoticRow:
    quantity: str  # "p" | "q"
    n: int
    M: int
    phi: Fraction
    value: float
    exact: Optional[Fraction]
    h0: float
    h1: float
    h2: float
    margin_h2: float
    h2_applicable: bool

    def to_json_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "n": self.n,
            "M": self.M,
            "phi": str(self.phi),
            "value": self.value,
            "exact": None if self.exact is None else str(self.exact),
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "margin_h2": self.margin_h2,
            "h2_applicable": self.h2_applicable,
        }


CSV_COLUMNS_ASYMPTOTIC = (
    "quantity,n,M,phi,value,exact,h0,h1,h2,margin_h2,h2_applicable"
)


def compare_to_asymptotics(
    n: int,
    M: int,
    p: Optional[Fraction] = None,
    q: Optional[Fraction] = None,
) -> tuple[AsymptoticRow, ...]:
    """Rows comparing exact or estimated p and q to h0/h1/h2 at phi = n/M.

    The q >= h2 guarantee applies only for phi <= 1; the flag records
    whether the comparison is in force for that row.
    """
    phi, h0, h1, h2 = _h_values(n, M)
    rows = []
    for name, value in (("p", p), ("q", q)):
        if value is None:
            continue
        val = float(value)
        rows.append(
            AsymptoticRow(
                quantity=name,
                n=n,
                M=M,
                phi=phi,
                value=val,
                exact=value if isinstance(value, Fraction) else None,
                h0=h0,
                h1=h1,
                h2=h2,
                margin_h2=val - h2,
                h2_applicable=(name == "q" and phi <= 1),
            )
        )
    return tuple(rows)


def asymptotic_rows_to_csv(rows: Iterable[AsymptoticRow]) -> str:
    lines = [CSV_COLUMNS_ASYMPTOTIC]
    for r in rows:
        lines.append(
            f"{r.quantity},{r.n},{r.M},{r.phi},{r.value!r},"
            f"{'' if r.exact is None else r.exact},{r.h0!r},{r.h1!r},{r.h2!r},"
            f"{r.margin_h2!r},{int(r.h2_applicable)}"
        )
    return "\n".join(lines) + "\n"
