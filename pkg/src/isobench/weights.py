"""Objective functions and weight-vector operations.

A weight vector is a plain tuple ``w`` with ``w[i-1]`` in ``1..M`` giving
the weight of vertex ``i``.  An Objective maps labels ``1..M`` to exact
rationals; all isolation decisions are made in exact arithmetic by
clearing denominators once and comparing integers (never floats).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .hypergraph import Hypergraph, edge_vertices


@dataclass(frozen=True)
class Objective:
    """A strictly increasing map f: {1..M} -> rationals.

    Values must be strictly positive unless ``zero_allowed`` is set, in
    which case f(1) = 0 is permitted (strict monotonicity is still
    enforced).  ``scaled`` holds the values times the lcm of their
    denominators; comparisons of edge weights use these exact integers.
    """

    M: int
    values: tuple[Fraction, ...]
    zero_allowed: bool = False
    kind: str = "explicit"
    scaled: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.M, int) or self.M < 1:
            raise ValueError("M must be a positive integer")
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != self.M:
            raise ValueError(f"expected {self.M} values, got {len(values)}")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("objective values must be strictly increasing")
        if self.zero_allowed:
            if values[0] < 0:
                raise ValueError("objective values must be nonnegative")
        elif values[0] <= 0:
            raise ValueError("objective values must be strictly positive")
        if self.kind not in ("identity", "explicit", "generic_high", "generic_low"):
            raise ValueError(f"unknown objective kind {self.kind!r}")
        object.__setattr__(self, "values", values)
        denom = math.lcm(*(v.denominator for v in values))
        object.__setattr__(
            self, "scaled", tuple(int(v * denom) for v in values)
        )

    def __call__(self, label: int) -> Fraction:
        if not 1 <= label <= self.M:
            raise ValueError(f"label {label} out of range 1..{self.M}")
        return self.values[label - 1]

    def int_table(self) -> list[int]:
        """Scaled values 1-indexed by label (slot 0 is a dummy)."""
        return [0, *self.scaled]

    def to_json_dict(self) -> dict:
        doc: dict = {"kind": self.kind, "M": self.M}
        if self.kind == "explicit":
            doc["values"] = [str(v) for v in self.values]
        if self.zero_allowed:
            doc["zero_allowed"] = True
        return doc


def identity_objective(M: int) -> Objective:
    return Objective(M, tuple(Fraction(k) for k in range(1, M + 1)), kind="identity")


def generic_high_objective(M: int, n: int) -> Objective:
    """f(k) = (n+1)^k: comparisons become lexicographic on the counts of
    each weight label from M downward (no edge has more than n vertices).
    """
    return Objective(M, tuple(Fraction((n + 1) ** k) for k in range(1, M + 1)), kind="generic_high")


def generic_low_objective(M: int, n: int) -> Objective:
    """f(k) = 1 + k/(n(M+1)): comparisons become edge cardinality first,
    then sum of weight labels.
    """
    d = n * (M + 1)
    return Objective(M, tuple(1 + Fraction(k, d) for k in range(1, M + 1)), kind="generic_low")


def explicit_objective(values: Iterable, *, zero_allowed: bool = False) -> Objective:
    vals = tuple(Fraction(v) for v in values)
    return Objective(len(vals), vals, zero_allowed=zero_allowed)


def random_objective(M: int, rng, *, zero_allowed: bool = False) -> Objective:
    """Seeded random strictly increasing rational objective.

    Built as cumulative sums of random positive fractions with small
    numerators/denominators; with ``zero_allowed`` the first value is 0
    half the time.
    """
    values = []
    current = Fraction(0)
    start_at_zero = zero_allowed and int(rng.integers(0, 2)) == 0
    for k in range(M):
        if k == 0 and start_at_zero:
            values.append(Fraction(0))
            continue
        num = int(rng.integers(1, 8))
        den = int(rng.integers(1, 8))
        current += Fraction(num, den)
        values.append(current)
    return Objective(M, tuple(values), zero_allowed=zero_allowed)


def objective_from_json(doc: dict, *, n: Optional[int] = None) -> Objective:
    """Rebuild an objective from its JSON document.

    Generic kinds need the intended vertex count ``n`` (taken from the
    accompanying hypergraph when deserializing a full run config).
    """
    kind = doc.get("kind")
    M = doc.get("M")
    if not isinstance(M, int):
        raise ValueError("objective document missing integer 'M'")
    if kind == "identity":
        return identity_objective(M)
    if kind in ("generic_high", "generic_low"):
        if n is None:
            raise ValueError(f"{kind} objective needs the vertex count n")
        return generic_high_objective(M, n) if kind == "generic_high" else generic_low_objective(M, n)
    if kind == "explicit":
        values = [Fraction(s) for s in doc["values"]]
        return Objective(M, tuple(values), zero_allowed=bool(doc.get("zero_allowed", False)))
    raise ValueError(f"unknown objective kind {kind!r}")


def preset_objectives(M: int, n: int) -> tuple[Objective, ...]:
    """The three preset objectives used throughout the verification suites."""
    return (identity_objective(M), generic_high_objective(M, n), generic_low_objective(M, n))


# ---------------------------------------------------------------------------
# Weight-vector operations


def check_weight(w: Sequence[int], n: int, M: int) -> None:
    if len(w) != n:
        raise ValueError(f"weight vector has {len(w)} entries, expected {n}")
    for x in w:
        if not 1 <= x <= M:
            raise ValueError(f"weight entry {x} out of range 1..{M}")


def edge_weight(f: Objective, w: Sequence[int], e: int) -> Fraction:
    """Sum of f(w(i)) over the vertices of edge bitmask ``e``; 0 for the
    empty edge."""
    total = Fraction(0)
    for v in edge_vertices(e):
        total += f(w[v - 1])
    return total


def _scaled_edge_weights(H: Hypergraph, f: Objective, w: Sequence[int]) -> list[int]:
    table = f.int_table()
    out = []
    for e in H.edges:
        s = 0
        for v in edge_vertices(e):
            s += table[w[v - 1]]
        out.append(s)
    return out


def min_weight_edges(H: Hypergraph, f: Objective, w: Sequence[int]) -> tuple[int, ...]:
    """All edges attaining the minimum edge weight, in canonical order.

    Raises ValueError for a hypergraph with no edges (there is no minimum
    to speak of; the empty hypergraph is handled by ``is_isolating``).
    """
    if not H.edges:
        raise ValueError("hypergraph has no edges")
    check_weight(w, H.n, f.M)
    sums = _scaled_edge_weights(H, f, w)
    lo = min(sums)
    return tuple(e for e, s in zip(H.edges, sums) if s == lo)


def is_isolating(H: Hypergraph, f: Objective, w: Sequence[int]) -> bool:
    """True iff exactly one min-weight edge exists.  By convention every
    weight is isolating for an empty hypergraph."""
    if not H.edges:
        check_weight(w, H.n, f.M)
        return True
    return len(min_weight_edges(H, f, w)) == 1


def isolating_edge(H: Hypergraph, f: Objective, w: Sequence[int]) -> Optional[int]:
    """The unique min-weight edge, or None (not isolating, or empty H)."""
    if not H.edges:
        return None
    mins = min_weight_edges(H, f, w)
    return mins[0] if len(mins) == 1 else None


def layer(w: Sequence[int]) -> int:
    """Minimum entry of the weight vector."""
    if not w:
        raise ValueError("weight vector is empty")
    return min(w)


def subtract_indicator(w: Sequence[int], S: int) -> tuple[int, ...]:
    """w - chi_S for a vertex-set bitmask S; entries in S must be >= 2."""
    out = list(w)
    for v in edge_vertices(S):
        if v > len(out):
            raise ValueError(f"vertex {v} beyond weight vector length {len(out)}")
        if out[v - 1] < 2:
            raise ValueError(f"entry {v} is 1; subtracting would leave the range")
        out[v - 1] -= 1
    return tuple(out)


def shift_objective_down(f: Objective, j: int) -> Objective:
    """Restriction g(k) = f(k + j - 1) on labels 1..M-j+1."""
    if not 1 <= j <= f.M:
        raise ValueError(f"layer index {j} out of range 1..{f.M}")
    return Objective(f.M - j + 1, f.values[j - 1 :], zero_allowed=f.zero_allowed)


def shift_objective_up(f: Objective, j: int, M: int) -> Objective:
    """Extension of f (on labels 1..M-j+1) to labels 1..M so that weights of
    layer j compare exactly like shifted layer-1 weights under f.

    New labels below j get alpha*k with alpha = f(1)/(2M); any alpha in
    (0, f(1)/M) works, this choice makes results deterministic.
    """
    if not 1 <= j <= M:
        raise ValueError(f"layer index {j} out of range 1..{M}")
    if f.M != M - j + 1:
        raise ValueError(f"objective has {f.M} labels, expected {M - j + 1}")
    if f.values[0] <= 0:
        raise ValueError("shift_objective_up needs a strictly positive objective")
    if j == 1:
        return f
    alpha = f.values[0] / (2 * M)
    values = tuple(alpha * k for k in range(1, j)) + f.values
    return Objective(M, values)
