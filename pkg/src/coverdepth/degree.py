"""Cover-ideal combinatorics: membership in symbolic powers, the cover
complex, independence complexes and degree complexes.

For a graph G the cover ideal is the intersection of the edge primes
(x_u, x_v); a monomial x^a lies in the n-th symbolic power exactly when
a_u + a_v >= n on every edge.  The degree complex of (n, a) records, for
supports away from the negative part of a, which localizations miss x^a:
its facets are the complements of the "qualifying" edges, those with
exponent sum at most n - 1 inside the subgraph induced away from the
negative support.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .complexes import SimplicialComplex
from .graphs import Graph, GraphError


def _check_alpha(G: Graph, alpha: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in alpha)
    if len(a) != G.vertex_count:
        raise GraphError(f"exponent vector has length {len(a)}, expected {G.vertex_count}")
    return a


def negative_support(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i, x in enumerate(alpha) if x < 0)


def cover_complex(G: Graph) -> SimplicialComplex:
    """Facets are the edge complements V minus {u, v}."""
    if G.is_edgeless:
        raise GraphError("the cover complex needs at least one edge")
    full = set(G.vertices())
    return SimplicialComplex.make(full, [full - set(e) for e in G.edge_list])


def independence_complex(G: Graph) -> SimplicialComplex:
    """Faces are the independent sets; Alexander dual of the cover complex."""
    return _independence_complex(tuple(G.vertices()), G.edge_list)


def _independence_complex(vertices: tuple[int, ...], edges: Iterable[tuple[int, int]]) -> SimplicialComplex:
    verts = tuple(sorted(vertices))
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [0] * n
    for u, v in edges:
        nbr[idx[u]] |= 1 << idx[v]
        nbr[idx[v]] |= 1 << idx[u]
    full = (1 << n) - 1
    facets: list[frozenset[int]] = []

    def rec(i: int, chosen: int, dominated: int) -> None:
        if i == n:
            if chosen | dominated == full:  # maximal: everything else has a chosen neighbor
                facets.append(frozenset(verts[j] for j in range(n) if chosen >> j & 1))
            return
        bit = 1 << i
        if not (nbr[i] & chosen):
            rec(i + 1, chosen | bit, dominated | nbr[i])
        rec(i + 1, chosen, dominated)

    rec(0, 0, 0)
    return SimplicialComplex.make(verts, facets)


def symbolic_membership(G: Graph, n: int, alpha: Sequence[int]) -> bool:
    """x^alpha lies in the n-th symbolic power iff every edge sum reaches n."""
    a = _check_alpha(G, alpha)
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if any(x < 0 for x in a):
        raise GraphError("membership expects a nonnegative exponent vector")
    return all(a[u - 1] + a[v - 1] >= n for u, v in G.edges)


def qualifying_edges(G: Graph, n: int, alpha: Sequence[int]) -> list[tuple[int, int]]:
    """Edges avoiding the negative support whose exponent sum is at most n - 1."""
    a = _check_alpha(G, alpha)
    neg = set(negative_support(a))
    return [
        (u, v)
        for u, v in G.edge_list
        if u not in neg and v not in neg and a[u - 1] + a[v - 1] <= n - 1
    ]


def degree_complex(G: Graph, n: int, alpha: Sequence[int]) -> SimplicialComplex:
    """Degree complex on the host labels V minus the negative support.

    Void exactly when the restricted exponent vector lies in the localized
    ideal (no qualifying edge); otherwise the facets are the complements of
    the qualifying edges.  Only the negative support matters below zero, so
    negative entries are canonicalized to -1 before processing.
    """
    a = _check_alpha(G, alpha)
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    neg = set(negative_support(a))
    rest = [v for v in G.vertices() if v not in neg]
    quals = qualifying_edges(G, n, a)
    if not quals:
        return SimplicialComplex.make(rest, [])
    rest_set = set(rest)
    return SimplicialComplex.make(rest, [rest_set - set(e) for e in quals])


def qualifying_graph(G: Graph, n: int, alpha: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph of qualifying edges on V minus the negative support.

    Returned relabeled 1..m with the label map, like induced subgraphs; its
    independence complex is the Alexander dual of the degree complex.
    """
    a = _check_alpha(G, alpha)
    neg = set(negative_support(a))
    rest = [v for v in G.vertices() if v not in neg]
    if not rest:
        raise GraphError("negative support covers every vertex")
    pos = {v: i + 1 for i, v in enumerate(rest)}
    edges = [(pos[u], pos[v]) for u, v in qualifying_edges(G, n, a)]
    return Graph.make(len(rest), edges, allow_edgeless=True), tuple(rest)
