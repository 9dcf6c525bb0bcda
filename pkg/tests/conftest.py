"""Shared hypothesis strategies and helpers for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from isobench import Hypergraph, Objective


@st.composite
def small_hypergraphs(draw, max_n=4, max_edges=5):
    """Inclusion-free hypergraphs on up to max_n vertices.

    Drawn edge lists are pruned greedily to an antichain, so shrinking
    stays well-behaved.
    """
    n = draw(st.integers(1, max_n))
    picks = draw(
        st.lists(st.integers(1, 2**n - 1), max_size=max_edges, unique=True)
    )
    chosen = []
    for e in picks:
        if all((e & o) != e and (e & o) != o for o in chosen):
            chosen.append(e)
    return Hypergraph(n, tuple(chosen))


@st.composite
def increasing_objectives(draw, M, zero_allowed=False):
    """Strictly increasing rational objectives on 1..M."""
    start_zero = zero_allowed and draw(st.booleans())
    values = []
    current = Fraction(0)
    for k in range(M):
        if k == 0 and start_zero:
            values.append(Fraction(0))
            continue
        num = draw(st.integers(1, 9))
        den = draw(st.integers(1, 9))
        current += Fraction(num, den)
        values.append(current)
    return Objective(M, tuple(values), zero_allowed=zero_allowed)


@st.composite
def counting_instances(draw, max_n=3, max_M=3):
    """(H, M, f) triples small enough for the pure-Fraction oracle."""
    H = draw(small_hypergraphs(max_n=max_n))
    M = draw(st.integers(1, max_M))
    f = draw(increasing_objectives(M))
    return H, M, f
