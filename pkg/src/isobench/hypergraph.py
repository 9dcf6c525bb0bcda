"""Hypergraphs on vertex set {1..n} with bitmask edge storage.

Vertices are 1-based.  An edge is stored as an integer bitmask with bit
``i - 1`` set when vertex ``i`` belongs to the edge; Python integers are
unbounded, so the same representation works for any ``n``.  Edges are kept
in a canonical order (lexicographic by sorted vertex tuple), and every
"lexicographically smallest edge" tie-break in this package refers to that
order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceededError


def edge_mask(vertices: Iterable[int], n: int) -> int:
    """Build an edge bitmask from 1-based vertices, validating the range."""
    mask = 0
    for v in vertices:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def edge_vertices(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertex tuple of an edge bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """An immutable hypergraph: ``n`` vertices plus distinct edge bitmasks.

    ``allow_empty_edge`` admits the empty edge (needed only for power-set
    style instances); ``require_inclusion_free`` makes construction reject
    any pair of nested edges.
    """

    n: int
    edges: tuple[int, ...]
    allow_empty_edge: bool = False
    require_inclusion_free: bool = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("vertex count must be a positive integer")
        full = (1 << self.n) - 1
        seen = set()
        for e in self.edges:
            if not isinstance(e, int) or e < 0 or e & ~full:
                raise ValueError(f"edge {e!r} is not a subset of 1..{self.n}")
            if e == 0 and not self.allow_empty_edge:
                raise ValueError("empty edge requires allow_empty_edge")
            if e in seen:
                raise ValueError(f"duplicate edge {edge_vertices(e)}")
            seen.add(e)
        normalized = tuple(sorted(seen, key=edge_vertices))
        object.__setattr__(self, "edges", normalized)
        if self.require_inclusion_free and not is_inclusion_free(self):
            raise ValueError("edge set is not inclusion-free")

    @classmethod
    def from_edges(
        cls,
        n: int,
        vertex_sets: Iterable[Iterable[int]],
        *,
        allow_empty_edge: bool = False,
        require_inclusion_free: bool = True,
    ) -> "Hypergraph":
        masks = tuple(edge_mask(vs, n) for vs in vertex_sets)
        return cls(n, masks, allow_empty_edge, require_inclusion_free)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(edge_vertices(e) for e in self.edges)

    def degree(self, v: int) -> int:
        """Number of edges containing vertex ``v``."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        bit = 1 << (v - 1)
        return sum(1 for e in self.edges if e & bit)

    def cardinalities(self) -> tuple[int, ...]:
        return tuple(e.bit_count() for e in self.edges)

    def to_json_dict(self) -> dict:
        doc: dict = {"n": self.n, "edges": [list(edge_vertices(e)) for e in self.edges]}
        if self.allow_empty_edge:
            doc["allow_empty_edge"] = True
        if not self.require_inclusion_free:
            doc["require_inclusion_free"] = False
        return doc

    @classmethod
    def from_json_dict(cls, doc: dict) -> "Hypergraph":
        try:
            n = doc["n"]
            edges = doc["edges"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed hypergraph document: {exc}") from exc
        return cls.from_edges(
            n,
            edges,
            allow_empty_edge=bool(doc.get("allow_empty_edge", False)),
            require_inclusion_free=bool(doc.get("require_inclusion_free", True)),
        )


def is_inclusion_free(H: Hypergraph) -> bool:
    """True iff no edge is a strict subset of another edge."""
    for a, b in itertools.combinations(H.edges, 2):
        inter = a & b
        if inter == a or inter == b:
            return False
    return True


def is_linear(H: Hypergraph) -> bool:
    """True iff every pair of distinct edges meets in at most one vertex."""
    return all((a & b).bit_count() <= 1 for a, b in itertools.combinations(H.edges, 2))


def is_connected(H: Hypergraph) -> bool:
    """Connectivity over the 'share an edge' vertex graph.

    Degree-zero vertices count as separate components, so any uncovered
    vertex makes the hypergraph disconnected.
    """
    covered = 0
    for e in H.edges:
        covered |= e
    if covered != (1 << H.n) - 1:
        return False
    parent = list(range(H.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        vs = edge_vertices(e)
        for v in vs[1:]:
            ra, rb = find(vs[0]), find(v)
            if ra != rb:
                parent[rb] = ra
    roots = {find(v) for v in range(1, H.n + 1)}
    return len(roots) == 1


def min_degree(H: Hypergraph) -> int:
    return min((H.degree(v) for v in range(1, H.n + 1)), default=0)


def singleton_hypergraph(n: int) -> Hypergraph:
    """The hypergraph with the n singleton edges {1}, ..., {n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Hypergraph(n, tuple(1 << i for i in range(n)))


def complement_singleton_hypergraph(n: int) -> Hypergraph:
    """The n edges {1..n} - {i}, each of cardinality n - 1."""
    if n < 2:
        raise ValueError("n must be >= 2 (edges would be empty)")
    full = (1 << n) - 1
    return Hypergraph(n, tuple(full ^ (1 << i) for i in range(n)))


def power_set_hypergraph(n: int, *, max_edges: int = 1 << 16) -> Hypergraph:
    """All 2^n subsets of {1..n} including the empty edge."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if 1 << n > max_edges:
        raise BudgetExceededError(f"2^{n} edges exceeds budget {max_edges}")
    return Hypergraph(
        n,
        tuple(range(1 << n)),
        allow_empty_edge=True,
        require_inclusion_free=False,
    )


def remove_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """Induced subhypergraph on {1..n} - {v}: keeps edges avoiding ``v``.

    Vertices above ``v`` are relabeled down by one.
    """
    if not 1 <= v <= H.n:
        raise ValueError(f"vertex {v} out of range 1..{H.n}")
    if H.n == 1:
        raise ValueError("cannot remove the only vertex")
    bit = 1 << (v - 1)
    low = bit - 1
    kept = []
    for e in H.edges:
        if e & bit:
            continue
        kept.append((e & low) | ((e >> 1) & ~low))
    return Hypergraph(H.n - 1, tuple(kept), H.allow_empty_edge, H.require_inclusion_free)


def disjoint_union(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    """Place H2 on fresh vertices n1+1..n1+n2 and take the edge union."""
    if 0 in H1.edges and 0 in H2.edges:
        raise ValueError("both operands contain the empty edge; union would collapse them")
    shifted = tuple(e << H1.n for e in H2.edges)
    return Hypergraph(
        H1.n + H2.n,
        H1.edges + shifted,
        H1.allow_empty_edge or H2.allow_empty_edge,
        H1.require_inclusion_free and H2.require_inclusion_free,
    )


def one_degenerate_order(H: Hypergraph) -> Optional[tuple[int, ...]]:
    """A vertex order v1..vn where each vi has degree <= 1 among the edges
    contained in {vi..vn}, or None if no such order exists.

    Greedy elimination is complete here: dropping a vertex only removes
    edges, so degrees in later induced subhypergraphs never grow.
    """
    remaining_mask = (1 << H.n) - 1
    remaining = list(range(1, H.n + 1))
    order = []
    while remaining:
        inside = [e for e in H.edges if e & ~remaining_mask == 0]
        chosen = None
        for v in remaining:
            bit = 1 << (v - 1)
            if sum(1 for e in inside if e & bit) <= 1:
                chosen = v
                break
        if chosen is None:
            return None
        order.append(chosen)
        remaining.remove(chosen)
        remaining_mask ^= 1 << (chosen - 1)
    return tuple(order)


def canonical_key(H: Hypergraph, *, max_n: int = 7) -> tuple[int, ...]:
    """Isomorphism-class key: the minimum relabeled edge tuple over all
    vertex permutations.  Intended only for small-n deduplication.
    """
    if H.n > max_n:
        raise BudgetExceededError(f"canonical form limited to n <= {max_n}")
    best = None
    for perm in itertools.permutations(range(H.n)):
        relabeled = []
        for e in H.edges:
            mask = 0
            rest = e
            i = 0
            while rest:
                if rest & 1:
                    mask |= 1 << perm[i]
                rest >>= 1
                i += 1
            relabeled.append(mask)
        key = tuple(sorted(relabeled))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def enumerate_hypergraphs(
    n: int,
    *,
    inclusion_free: bool = False,
    linear: bool = False,
    uniform_r: Optional[int] = None,
    connected: bool = False,
    min_degree_at_least: int = 0,
    max_count: int = 1_000_000,
) -> Iterator[Hypergraph]:
    """Yield every labeled hypergraph on n vertices passing the filters.

    Each hypergraph is yielded exactly once, in a deterministic order
    (depth-first over the canonical candidate-edge order, empty edge set
    first).  Edges are nonempty.  ``inclusion_free`` and ``linear`` prune
    the recursion; ``connected`` and ``min_degree_at_least`` filter at
    yield time.  Raises BudgetExceededError if more than ``max_count``
    hypergraphs would be produced.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    candidates = sorted(range(1, 1 << n), key=edge_vertices)
    if uniform_r is not None:
        if not 1 <= uniform_r <= n:
            raise ValueError(f"uniform_r must be in 1..{n}")
        candidates = [c for c in candidates if c.bit_count() == uniform_r]
    if not (inclusion_free or linear) and len(candidates) < 63:
        if 1 << len(candidates) > max_count:
            raise BudgetExceededError(
                f"2^{len(candidates)} hypergraphs exceeds budget {max_count}"
            )

    def compatible(e: int, chosen: list[int]) -> bool:
        for other in chosen:
            inter = e & other
            if inclusion_free and (inter == e or inter == other):
                return False
            if linear and inter.bit_count() > 1:
                return False
        return True

    yielded = 0
    chosen: list[int] = []

    def emit() -> Optional[Hypergraph]:
        H = Hypergraph(n, tuple(chosen), require_inclusion_free=inclusion_free)
        if connected and not is_connected(H):
            return None
        if min_degree_at_least and min_degree(H) < min_degree_at_least:
            return None
        return H

    # Explicit stack DFS: (next candidate index to try).  Preorder emission
    # keeps the stream ordering independent of the filters.
    def walk(start: int) -> Iterator[Hypergraph]:
        nonlocal yielded
        H = emit()
        if H is not None:
            yielded += 1
            if yielded > max_count:
                raise BudgetExceededError(f"enumeration exceeds budget {max_count}")
            yield H
        for k in range(start, len(candidates)):
            e = candidates[k]
            if compatible(e, chosen):
                chosen.append(e)
                yield from walk(k + 1)
                chosen.pop()

    yield from walk(0)


def random_hypergraph(
    n: int,
    max_edges: int,
    rng,
    *,
    inclusion_free: bool = True,
    allow_empty_edge: bool = False,
) -> Hypergraph:
    """Seeded random hypergraph with at most ``max_edges`` edges.

    Candidate edges are drawn in a random order and taken greedily while
    they respect the inclusion-free constraint, so the result may have
    fewer than ``max_edges`` edges.  ``rng`` is a numpy Generator.
    """
    lo = 0 if allow_empty_edge else 1
    candidates = list(range(lo, 1 << n))
    order = rng.permutation(len(candidates))
    chosen: list[int] = []
    for idx in order:
        if len(chosen) >= max_edges:
            break
        e = candidates[int(idx)]
        if inclusion_free and any(
            (e & o) == e or (e & o) == o for o in chosen
        ):
            continue
        chosen.append(e)
    return Hypergraph(
        n,
        tuple(chosen),
        allow_empty_edge=allow_empty_edge,
        require_inclusion_free=inclusion_free,
    )


def random_uniform_hypergraph(n: int, r: int, m: int, rng) -> Hypergraph:
    """Seeded random r-uniform hypergraph with exactly m distinct edges."""
    if not 1 <= r <= n:
        raise ValueError(f"r must be in 1..{n}")
    candidates = sorted(
        (edge_mask(c, n) for c in itertools.combinations(range(1, n + 1), r)),
        key=edge_vertices,
    )
    if m > len(candidates):
        raise ValueError(f"only {len(candidates)} distinct {r}-edges exist on {n} vertices")
    picked = rng.choice(len(candidates), size=m, replace=False)
    return Hypergraph(n, tuple(candidates[int(i)] for i in picked))
