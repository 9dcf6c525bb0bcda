"""Closed-form lower bounds, conjectured values, and asymptotic h-functions.

Integer formulas are evaluated exactly; the h-functions use mpmath at a
working precision comfortably above 30 significant digits.  Isolation
decisions never depend on the h-functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .counting import CountReport
from .hypergraph import Hypergraph
from .weights import Objective

_DPS = 40


def ta_shma_bound(M: int, n: int) -> int:
    """(M-1)^n, the classical injection lower bound on |Z(H, M, f)|."""
    _check_mn(M, n)
    return (M - 1) ** n


def conjectured_Y(M: int, n: int) -> int:
    """n * sum_{i=0}^{M-1} i^(n-1), the conjectured exact minimum of |Z|.

    0^0 is taken as 1, which only matters at n = 1 and keeps the value
    consistent with the singleton hypergraph count there.
    """
    _check_mn(M, n)
    return n * sum(i ** (n - 1) for i in range(M))


def conjectured_Y1(M: int, n: int) -> int:
    """n (M-1)^(n-1), the conjectured exact minimum of |Z_1|."""
    _check_mn(M, n)
    return n * (M - 1) ** (n - 1)


def singleton_count(M: int, n: int) -> int:
    """Exact |Z(S_n, M, f)| = |Z(complement of S_n, M, f)| for every f."""
    _check_mn(M, n)
    return n * sum(i ** (n - 1) for i in range(1, M))


def main_theorem_bound(M: int, n: int) -> int:
    """2(M-1)^n - 2(M-2)^n - n(M-2)^(n-1): the witness-graph lower bound
    on |Z_1|.  May be non-positive for small M; returned verbatim."""
    if M < 2:
        raise ValueError("main theorem bound requires M >= 2")
    _check_mn(M, n)
    return 2 * (M - 1) ** n - 2 * (M - 2) ** n - n * (M - 2) ** (n - 1)


def corollary_Y_bound(M: int, n: int) -> int:
    """2(M-1)^n - n * sum_{i=1}^{M-2} i^(n-1): the layer-summed (telescoped)
    lower bound on |Z|."""
    if M < 1:
        raise ValueError("corollary bound requires M >= 1")
    _check_mn(M, n)
    return 2 * (M - 1) ** n - n * sum(i ** (n - 1) for i in range(1, M - 1))


def bounded_edge_bound(M: int, n: int, r: int) -> Fraction:
    """(2/r) n (M-1)^(n-1): lower bound on |Z_1| when every edge has
    cardinality at most r (requires r >= 2)."""
    if r < 2:
        raise ValueError("bounded-edge bound requires r >= 2")
    _check_mn(M, n)
    return Fraction(2, r) * n * (M - 1) ** (n - 1)


def zero_weight_Y(M: int, n: int) -> int:
    """(M-1)^n: the exact minimum of |Z| once zero objective values are
    allowed (tight on the power-set hypergraph)."""
    _check_mn(M, n)
    return (M - 1) ** n


def _check_mn(M: int, n: int) -> None:
    if M < 1:
        raise ValueError("M must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")


def h_eval(which: str, phi) -> mpmath.mpf:
    """h0(x) = e^-x, h1(x) = x/(e^x - 1), h2(x) = (2(e^x - 1) - x)/(e^x (e^x - 1)),
    evaluated to at least 30 significant digits.  All three are 1 at x = 0.
    """
    if which not in ("h0", "h1", "h2"):
        raise ValueError(f"unknown h-function {which!r}")
    with mpmath.workdps(_DPS):
        x = _to_mpf(phi)
        if x < 0:
            raise ValueError("phi must be nonnegative")
        if x == 0:
            return mpmath.mpf(1)
        if which == "h0":
            return mpmath.exp(-x)
        em1 = mpmath.expm1(x)
        if which == "h1":
            return x / em1
        return (2 * em1 - x) / (mpmath.exp(x) * em1)


def _to_mpf(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / mpmath.mpf(value.denominator)
    return mpmath.mpf(value)


def success_probabilities(
    H: Hypergraph, M: int, f: Objective, report: CountReport
) -> tuple[Fraction, Fraction]:
    """Exact (p, q): p = |Z| / M^n and q = |Z_1| / (M^n - (M-1)^n)."""
    if report.n != H.n or report.M != M or f.M != M:
        raise ValueError("report does not match the given (H, M, f)")
    p = Fraction(report.total, M**H.n)
    denom = M**H.n - (M - 1) ** H.n
    q = Fraction(report.layer1, denom) if denom else Fraction(1)
    return p, q


@dataclass(frozen=True)
class BoundSet:
    """All closed-form bound values at one (M, n), keyed by their usual
    names; ``bounded_edge`` is present only when an r was supplied."""

    M: int
    n: int
    ta_shma: int
    theorem_main: Optional[int]
    corollary_Y: int
    conjecture_1: int
    conjecture_2: int
    zero_weight: int
    bounded_edge_r: Optional[int] = None
    bounded_edge: Optional[Fraction] = None

    def to_json_dict(self) -> dict:
        doc = {
            "M": self.M,
            "n": self.n,
            "ta_shma": self.ta_shma,
            "theorem_main": self.theorem_main,
            "corollary_Y": self.corollary_Y,
            "conjecture_1": self.conjecture_1,
            "conjecture_2": self.conjecture_2,
            "zero_weight": self.zero_weight,
        }
        if self.bounded_edge is not None:
            doc["bounded_edge"] = {"r": self.bounded_edge_r, "value": str(self.bounded_edge)}
        return doc


def bound_set(M: int, n: int, r: Optional[int] = None) -> BoundSet:
    return BoundSet(
        M=M,
        n=n,
        ta_shma=ta_shma_bound(M, n),
        theorem_main=main_theorem_bound(M, n) if M >= 2 else None,
        corollary_Y=corollary_Y_bound(M, n),
        conjecture_1=conjectured_Y(M, n),
        conjecture_2=conjectured_Y1(M, n),
        zero_weight=zero_weight_Y(M, n),
        bounded_edge_r=r,
        bounded_edge=bounded_edge_bound(M, n, r) if r is not None else None,
    )
