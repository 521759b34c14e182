"""Matching invariants: plain, induced and ordered matching numbers.

An ordered matching is an indexed list of oriented pairs (u_i, v_i) whose
free side {u_1..u_s} is independent and whose cross edges {u_i, v_j} only
run forward (i <= j).  Orientation + pair set determine the object; a
canonical (lexicographically smallest) valid index order is stored.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .graphs import Graph, _normalize_edge

Edge = tuple[int, int]
Pair = tuple[int, int]  # oriented: (free, partner)


class MatchingError(ValueError):
    pass


class FreeSideDependentError(MatchingError):
    """The chosen free side is not an independent set."""


@dataclass(frozen=True)
class OrderedMatching:
    """Oriented pairs in a valid index order."""

    pairs: tuple[Pair, ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def free_side(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.pairs)

    @property
    def partner_side(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.pairs)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(_normalize_edge(u, v) for u, v in self.pairs)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for p in self.pairs for v in p)

    def to_json(self) -> list[list[int]]:
        return [[u, v] for u, v in self.pairs]


# -- enumeration of plain matchings ---------------------------------------

def _lowest_active(G: Graph, avail: int) -> int:
    """Lowest available vertex with an available neighbor; 0 if none."""
    masks = G.neighbor_masks
    m = avail
    while m:
        bit = m & -m
        v = bit.bit_length()
        if masks[v] & avail:
            return v
        m ^= bit
    return 0


@lru_cache(maxsize=None)
def _matching_number_mask(G: Graph, avail: int) -> int:
    v = _lowest_active(G, avail)
    if v == 0:
        return 0
    vbit = 1 << (v - 1)
    best = _matching_number_mask(G, avail ^ vbit)  # leave v unmatched
    nbrs = G.neighbor_masks[v] & avail
    while nbrs:
        wbit = nbrs & -nbrs
        nbrs ^= wbit
        best = max(best, 1 + _matching_number_mask(G, avail ^ vbit ^ wbit))
    return best


def matching_number(G: Graph) -> int:
    return _matching_number_mask(G, (1 << G.vertex_count) - 1)


def iter_matchings(G: Graph, size: int) -> Iterator[frozenset[Edge]]:
    """All matchings with exactly ``size`` edges, each yielded once."""
    if size == 0:
        yield frozenset()
        return
    full = (1 << G.vertex_count) - 1

    def rec(avail: int, chosen: list[Edge]) -> Iterator[frozenset[Edge]]:
        need = size - len(chosen)
        if need == 0:
            yield frozenset(chosen)
            return
        if _matching_number_mask(G, avail) < need:
            return
        v = _lowest_active(G, avail)
        if v == 0:
            return
        vbit = 1 << (v - 1)
        nbrs = G.neighbor_masks[v] & avail
        while nbrs:
            wbit = nbrs & -nbrs
            nbrs ^= wbit
            w = wbit.bit_length()
            chosen.append(_normalize_edge(v, w))
            yield from rec(avail ^ vbit ^ wbit, chosen)
            chosen.pop()
        yield from rec(avail ^ vbit, chosen)  # leave v unmatched

    yield from rec(full, [])


def perfect_matchings(G: Graph) -> list[frozenset[Edge]]:
    if G.vertex_count % 2:
        return []
    return sorted(iter_matchings(G, G.vertex_count // 2), key=sorted)


def induced_matching_number(G: Graph) -> int:
    masks = G.neighbor_masks

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        v = _lowest_active(G, avail)
        if v == 0:
            return 0
        vbit = 1 << (v - 1)
        out = best(avail ^ vbit)
        nbrs = masks[v] & avail
        while nbrs:
            wbit = nbrs & -nbrs
            nbrs ^= wbit
            w = wbit.bit_length()
            # taking (v, w) evicts both closed neighborhoods
            out = max(out, 1 + best(avail & ~(masks[v] | masks[w] | vbit | wbit)))
        return out

    return best((1 << G.vertex_count) - 1)


def is_cameron_walker(G: Graph) -> bool:
    """Induced matching number equals matching number."""
    return induced_matching_number(G) == matching_number(G)


# -- ordered matchings -----------------------------------------------------

def ordered_matching_violation(G: Graph, pairs: Sequence[Sequence[int]]) -> Optional[str]:
    """None when ``pairs`` is a valid ordered matching, else the violated clause."""
    ps: list[Pair] = [(int(p[0]), int(p[1])) for p in pairs]
    seen: set[int] = set()
    for u, v in ps:
        if not G.has_edge(u, v):
            return f"pair ({u},{v}) is not an edge"
        if u in seen or v in seen or u == v:
            return f"pair ({u},{v}) reuses a covered vertex"
        seen.update((u, v))
    free = [u for u, _ in ps]
    for i in range(len(free)):
        for j in range(i + 1, len(free)):
            if G.has_edge(free[i], free[j]):
                return f"free side not independent: edge ({free[i]},{free[j]})"
    partners = [v for _, v in ps]
    for i, u in enumerate(free):
        for j, v in enumerate(partners):
            if i > j and G.has_edge(u, v):
                return f"index condition fails on edge ({u},{v}): pair {i + 1} > {j + 1}"
    return None


def is_ordered_matching(G: Graph, pairs: Sequence[Sequence[int]]) -> bool:
    return ordered_matching_violation(G, pairs) is None


def ordering_feasibility(
    G: Graph, matching: Iterable[Sequence[int]], free_vertices: Iterable[int]
) -> Optional[tuple[Pair, ...]]:
    """Valid canonical index order for the oriented pair set, if one exists.

    The pair digraph has an arc p -> q whenever free(p) is adjacent to
    partner(q); valid orders are exactly its topological orders.  Raises
    :class:`FreeSideDependentError` when the free side is not independent,
    returns None when the digraph is cyclic.
    """
    free = set(int(v) for v in free_vertices)
    oriented: list[Pair] = []
    for raw in matching:
        u, v = int(raw[0]), int(raw[1])
        if not G.has_edge(u, v):
            raise MatchingError(f"({u},{v}) is not an edge")
        if u in free and v in free:
            raise MatchingError(f"both endpoints of ({u},{v}) marked free")
        if u in free:
            oriented.append((u, v))
        elif v in free:
            oriented.append((v, u))
        else:
            raise MatchingError(f"no endpoint of ({u},{v}) marked free")
    if len(set(p for pr in oriented for p in pr)) != 2 * len(oriented):
        raise MatchingError("pairs are not vertex-disjoint")
    frees = [u for u, _ in oriented]
    for i in range(len(frees)):
        for j in range(i + 1, len(frees)):
            if G.has_edge(frees[i], frees[j]):
                raise FreeSideDependentError(
                    f"free side not independent: edge ({frees[i]},{frees[j]})"
                )
    return _canonical_order(G, tuple(sorted(oriented)))


def _canonical_order(G: Graph, oriented: tuple[Pair, ...]) -> Optional[tuple[Pair, ...]]:
    """Lexicographically smallest topological order of the pair digraph, or None."""
    n = len(oriented)
    succ: list[set[int]] = [set() for _ in range(n)]
    indeg = [0] * n
    for a, (u, _) in enumerate(oriented):
        for b, (_, w) in enumerate(oriented):
            if a != b and G.has_edge(u, w):
                if b not in succ[a]:
                    succ[a].add(b)
                    indeg[b] += 1
    heap = [(oriented[i], i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out: list[Pair] = []
    while heap:
        pair, i = heapq.heappop(heap)
        out.append(pair)
        for b in succ[i]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (oriented[b], b))
    if len(out) != n:
        return None
    return tuple(out)


@lru_cache(maxsize=None)
def _ordered_matchings_of_pair_set(G: Graph, edges: frozenset[Edge]) -> tuple[OrderedMatching, ...]:
    """All valid orientations of one matching, each with its canonical order."""
    edge_list = sorted(edges)
    masks = G.neighbor_masks
    found: list[OrderedMatching] = []

    def rec(idx: int, free_mask: int, oriented: list[Pair]) -> None:
        if idx == len(edge_list):
            order = _canonical_order(G, tuple(sorted(oriented)))
            if order is not None:
                found.append(OrderedMatching(order))
            return
        u, v = edge_list[idx]
        for f, p in ((u, v), (v, u)):
            fbit = 1 << (f - 1)
            if masks[f] & free_mask:
                continue  # f adjacent to an already chosen free vertex
            oriented.append((f, p))
            rec(idx + 1, free_mask | fbit, oriented)
            oriented.pop()

    rec(0, 0, [])
    return tuple(sorted(found, key=lambda om: om.pairs))


def _pair_set_orientable(G: Graph, edges: frozenset[Edge]) -> bool:
    return bool(_ordered_matchings_of_pair_set(G, edges))


def ordered_matching_number(G: Graph) -> int:
    if G.is_edgeless:
        return 0
    for s in range(matching_number(G), 0, -1):
        for m in iter_matchings(G, s):
            if _pair_set_orientable(G, m):
                return s
    return 0


def enumerate_max_ordered_matchings(G: Graph) -> tuple[OrderedMatching, ...]:
    """Every maximum ordered matching as a (pair set, orientation) object.

    Distinct valid orders of one oriented pair set are the same object; the
    canonical order is stored.  Output is sorted for determinism.
    """
    s = ordered_matching_number(G)
    if s == 0:
        return ()
    out: list[OrderedMatching] = []
    for m in iter_matchings(G, s):
        out.extend(_ordered_matchings_of_pair_set(G, m))
    return tuple(sorted(out, key=lambda om: om.pairs))


def max_ordered_pair_sets(G: Graph) -> tuple[frozenset[Edge], ...]:
    """Pair sets (ignoring orientation) of the maximum ordered matchings."""
    s = ordered_matching_number(G)
    if s == 0:
        return ()
    out = [m for m in iter_matchings(G, s) if _pair_set_orientable(G, m)]
    return tuple(sorted(out, key=sorted))


def has_perfect_ordered_matching(G: Graph) -> Optional[OrderedMatching]:
    """A perfect ordered matching when 2 * ordered_matching_number == r."""
    if G.vertex_count % 2:
        return None
    for m in perfect_matchings(G):
        oms = _ordered_matchings_of_pair_set(G, m)
        if oms:
            return oms[0]
    return None


def unique_perfect_matching_check(G: Graph) -> bool:
    return len(perfect_matchings(G)) == 1
