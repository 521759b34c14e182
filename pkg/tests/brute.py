"""Independent brute-force oracles for the test suite.

These deliberately avoid the library's own code paths: matchings by subset
scan, ordered matchings by trying every orientation and permutation against
the raw definition, alternating walks by unpruned recursion, and matrix rank
by Fraction-based elimination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

from coverdepth.graphs import Graph


def edges_disjoint(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def brute_matchings(G: Graph, size: int):
    for combo in combinations(G.edge_list, size):
        if edges_disjoint(combo):
            yield combo


def brute_matching_number(G: Graph) -> int:
    for s in range(len(G.edges), 0, -1):
        if any(True for _ in brute_matchings(G, s)):
            return s
    return 0


def brute_induced_matching_number(G: Graph) -> int:
    best = 0
    for s in range(1, len(G.edges) + 1):
        for combo in brute_matchings(G, s):
            covered = {v for e in combo for v in e}
            inside = [e for e in G.edge_list if e[0] in covered and e[1] in covered]
            if len(inside) == s:
                best = s
    return best


def is_ordered_by_definition(G: Graph, pairs) -> bool:
    """Direct transcription of the ordered-matching conditions."""
    if not edges_disjoint(pairs):
        return False
    if not all(G.has_edge(u, v) for u, v in pairs):
        return False
    free = [u for u, _ in pairs]
    partners = [v for _, v in pairs]
    for a, b in combinations(free, 2):
        if G.has_edge(a, b):
            return False
    for i, u in enumerate(free):
        for j, v in enumerate(partners):
            if G.has_edge(u, v) and i > j:
                return False
    return True


def brute_ordered_matching_number(G: Graph) -> int:
    best = 0
    for s in range(1, brute_matching_number(G) + 1):
        for combo in brute_matchings(G, s):
            for orient in product((0, 1), repeat=s):
                oriented = [
                    (e[o], e[1 - o]) for e, o in zip(combo, orient)
                ]
                if any(
                    is_ordered_by_definition(G, list(perm))
                    for perm in permutations(oriented)
                ):
                    best = max(best, s)
                    break
            else:
                continue
    return best


def brute_walk_length(G: Graph, pairs, cap: int = 200) -> int:
    """Longest strictly alternating walk, plain recursion without pruning."""
    matched = {}
    for u, v in pairs:
        matched[u] = v
        matched[v] = u
    best = 0

    def go(v: int, want_matching: bool, length: int) -> None:
        nonlocal best
        best = max(best, length)
        if length >= cap:
            raise RuntimeError("walk exceeded the brute cap")
        for w in G.neighbors[v]:
            in_matching = matched.get(v) == w
            if in_matching == want_matching:
                go(w, not want_matching, length + 1)

    for v in G.vertices():
        go(v, True, 0)
        go(v, False, 0)
    return best


def naive_rank(rows) -> int:
    """Fraction-based Gaussian elimination, the reference for exact ranks."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def naive_rank_mod(rows, p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][col] % p:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def brute_independent_sets(G: Graph):
    verts = list(G.vertices())
    for size in range(0, len(verts) + 1):
        for combo in combinations(verts, size):
            if all(not G.has_edge(a, b) for a, b in combinations(combo, 2)):
                yield frozenset(combo)


def brute_symbolic_depth(G: Graph, n: int, field=None) -> int:
    """Depth by direct degree-complex homology: every support, every grid,
    no dual shortcut, no cone pruning, no deduplication."""
    from itertools import product as iproduct

    from coverdepth.complexes import reduced_homology
    from coverdepth.degree import degree_complex
    from coverdepth.linalg import Rationals

    field = field or Rationals()
    r = G.vertex_count
    verts = list(G.vertices())
    best = None
    for mask in range(2 ** r):
        support = [v for v in verts if mask >> (v - 1) & 1]
        rest = [v for v in verts if v not in support]
        for grid in iproduct(range(n), repeat=len(rest)):
            alpha = [0] * r
            for v in support:
                alpha[v - 1] = -1
            for v, val in zip(rest, grid):
                alpha[v - 1] = val
            cx = degree_complex(G, n, alpha)
            if cx.is_void:
                continue
            for d, h in reduced_homology(cx, field).items():
                if h:
                    i = d + len(support) + 1
                    best = i if best is None else min(best, i)
    return best


def random_small_graph(rng, max_r: int = 6) -> Graph:
    r = rng.randint(2, max_r)
    edges = [(u, v) for u in range(1, r + 1) for v in range(u + 1, r + 1)
             if rng.random() < 0.5]
    if not edges:
        edges = [(1, 2)]
    return Graph.make(r, edges)
