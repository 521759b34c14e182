"""Ground-truth algebra for cover ideals: depth of symbolic powers through
the graded local-cohomology criterion, edge-ideal regularity through link
homology, stability indices, and the fast perfect-matching certificate.

Oracle layout.  depth R/J^(n) is the least i with a nonvanishing graded
piece of the i-th local cohomology.  Gradings split into a negative support
S (only the support matters, entries normalized to -1) and a nonnegative
rest vector a' capped at n - 1: any vertex with a'_v >= n sits on no
qualifying edge, so its complex is a cone or void and contributes nothing.
Each (S, a') yields the degree complex whose facets are complements of the
qualifying edges; its homology is read off the Alexander-dual side, the
independence complex of the qualifying graph Q.  With m' = r - |S| and
nonzero dual homology in degree j, the contribution is

    i = (m' - 3 - j) + |S| + 1 = r - 2 - j,

so the depth is r - 2 - max(j) over all supports, grids and degrees.  The
grid scan is vectorized with numpy and the homology of each distinct
qualifying edge set is memoized (the edge set determines the complex).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Optional

import numpy as np

from .altpaths import alt_path_length, stability_bound
from .complexes import nonzero_degrees, reduced_homology
from .degree import _independence_complex, independence_complex
from .graphs import Graph, GraphError
from .linalg import FieldSpec, Rationals
from .matchings import (
    OrderedMatching,
    has_perfect_ordered_matching,
    ordered_matching_number,
    perfect_matchings,
)

DEFAULT_BUDGET = 1_000_000_000
HARD_VERTEX_LIMIT = 13
CROSS_CHECK_ESTIMATE_LIMIT = 10_000_000
_GRID_CHUNK = 1 << 16


class BudgetRefusal(RuntimeError):
    """The oracle declined an instance; carries the cost estimate."""

    def __init__(self, message: str, estimate: int, budget: int):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


class CertificateInapplicableError(ValueError):
    """The perfect-matching certificate cannot decide this graph."""


class DepthEngineError(RuntimeError):
    """An internal cross-check failed; something believed proven did not hold."""


def oracle_cost_estimate(r: int, n: int) -> int:
    return (n ** r) * (2 ** r)


def _check_budget(G: Graph, n: int, budget: int, force: bool) -> None:
    r = G.vertex_count
    if force:
        return
    if r >= HARD_VERTEX_LIMIT:
        raise BudgetRefusal(
            f"refusing r={r} >= {HARD_VERTEX_LIMIT} vertices (pass force=True to override)",
            oracle_cost_estimate(r, n), budget,
        )
    est = oracle_cost_estimate(r, n)
    if est > budget:
        raise BudgetRefusal(
            f"estimated cost {est} exceeds budget {budget} (r={r}, n={n})",
            est, budget,
        )


# -- memoized homology of qualifying graphs --------------------------------

_MAX_DEGREE_CACHE: dict[tuple[frozenset, FieldSpec], Optional[int]] = {}


def _max_nonzero_degree(edge_key: frozenset, field: FieldSpec) -> Optional[int]:
    """Largest degree with nonzero homology of the independence complex of the
    given edge set (vertices = covered vertices); None when acyclic."""
    key = (edge_key, field)
    if key not in _MAX_DEGREE_CACHE:
        verts = tuple(sorted({v for e in edge_key for v in e}))
        cx = _independence_complex(verts, sorted(edge_key))
        nz = nonzero_degrees(reduced_homology(cx, field))
        _MAX_DEGREE_CACHE[key] = max(nz) if nz else None
    return _MAX_DEGREE_CACHE[key]


def _qualifying_subsets(rest: list[int], induced: list[tuple[int, int]],
                        n: int, cap: int) -> list[tuple[tuple[int, int], ...]]:
    """Distinct nonempty qualifying edge sets over the grid {0..cap}^rest.

    An edge qualifies when its two exponents sum to at most n - 1.  The grid
    is scanned in chunks with a mixed-radix decode; only the distinct edge
    subsets survive, since the complex depends on nothing else.
    """
    m = len(rest)
    base = cap + 1
    pos = {v: i for i, v in enumerate(rest)}
    a_idx = np.array([pos[u] for u, _ in induced], dtype=np.int64)
    b_idx = np.array([pos[v] for _, v in induced], dtype=np.int64)
    total = base ** m
    radix = base ** np.arange(m, dtype=np.int64)
    nedges = len(induced)
    wide = nedges > 62
    weights = None if wide else (np.int64(1) << np.arange(nedges, dtype=np.int64))
    found: set = set()
    for start in range(0, total, _GRID_CHUNK):
        idx = np.arange(start, min(start + _GRID_CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // radix[None, :]) % base
        qual = (digits[:, a_idx] + digits[:, b_idx]) <= (n - 1)
        if wide:
            for row in np.unique(qual, axis=0):
                found.add(tuple(bool(x) for x in row))
        else:
            found.update(int(c) for c in np.unique(qual @ weights))
    subsets: list[tuple[tuple[int, int], ...]] = []
    for code in found:
        if wide:
            chosen = tuple(e for e, bit in zip(induced, code) if bit)
        else:
            chosen = tuple(induced[i] for i in range(nedges) if code >> i & 1)
        if chosen:
            subsets.append(chosen)
    return subsets


def depth_symbolic(G: Graph, n: int, field: FieldSpec = Rationals(), *,
                   budget: int = DEFAULT_BUDGET, force: bool = False,
                   _alpha_cap: Optional[int] = None) -> int:
    """depth of R modulo the n-th symbolic power of the cover ideal.

    Exhausts supports by ascending size (a support of size k can only
    contribute i >= k, so the loop stops once it cannot beat the best value)
    and all capped exponent grids; the private cap override exists for the
    capped-versus-uncapped consistency test.
    """
    if G.is_edgeless:
        raise GraphError("depth of a cover ideal needs at least one edge")
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    _check_budget(G, n, budget, force)
    r = G.vertex_count
    cap = (n - 1) if _alpha_cap is None else _alpha_cap
    edges = G.edge_list
    lower = 0 if r == 2 else 1  # the maximal ideal is associated only when r = 2
    best: Optional[int] = None
    for size in range(0, r):
        if best is not None and size > best:
            break
        for support in combinations(G.vertices(), size):
            sset = set(support)
            induced = [(u, v) for u, v in edges if u not in sset and v not in sset]
            if not induced:
                continue
            rest = [v for v in G.vertices() if v not in sset]
            for subset in _qualifying_subsets(rest, induced, n, cap):
                covered = {v for e in subset for v in e}
                if len(covered) != len(rest):
                    continue  # a vertex misses every qualifying edge: cone, acyclic
                jmax = _max_nonzero_degree(frozenset(subset), field)
                if jmax is None:
                    continue
                i = r - 2 - jmax
                if best is None or i < best:
                    best = i
                    if best <= lower:
                        return best
    if best is None:
        raise DepthEngineError("no local cohomology contribution found")
    return best


def reg_edge_ideal(G: Graph, field: FieldSpec = Rationals(), *, force: bool = False) -> int:
    """Regularity of the edge ideal from link homology of the independence
    complex: 1 + max degree d with some link having homology in degree d - 1."""
    if G.is_edgeless:
        raise GraphError("the edge ideal of an edgeless graph is zero")
    if G.vertex_count >= HARD_VERTEX_LIMIT and not force:
        raise BudgetRefusal(
            f"refusing r={G.vertex_count} >= {HARD_VERTEX_LIMIT} vertices for the link scan",
            2 ** G.vertex_count, 0,
        )
    cx = independence_complex(G)
    best = 0
    for face in cx.all_faces():
        prof = reduced_homology(cx.link(face), field)
        for d in nonzero_degrees(prof):
            best = max(best, d + 1)
    return best + 1


# -- stability index --------------------------------------------------------

@dataclass
class DepthReport:
    graph: dict
    field: FieldSpec
    nu0: int
    limit_depth: int
    profile: dict[int, int]
    stability_index: int
    method: str
    witnesses: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "field": self.field.label,
            "nu0": self.nu0,
            "limit_depth": self.limit_depth,
            "profile": {str(n): d for n, d in sorted(self.profile.items())},
            "sdstab": self.stability_index,
            "method": self.method,
            "witnesses": self.witnesses,
        }


def limit_depth(G: Graph) -> int:
    return G.vertex_count - ordered_matching_number(G) - 1


def depth_profile(G: Graph, field: FieldSpec = Rationals(), *,
                  budget: int = DEFAULT_BUDGET, force: bool = False) -> DepthReport:
    """Symbolic depth values for n = 1 .. 2*nu0 - 1, their limit and the
    first index at which the limit is reached.

    The profile must be non-increasing and end at r - nu0 - 1; a violation
    would contradict known behavior of these depth functions and raises.
    On bipartite graphs symbolic and ordinary powers coincide, so the same
    report describes the ordinary depth function as well.
    """
    if G.is_edgeless:
        raise GraphError("depth profile needs at least one edge")
    nu0 = ordered_matching_number(G)
    limit = G.vertex_count - nu0 - 1
    profile: dict[int, int] = {}
    for n in range(1, max(2 * nu0 - 1, 1) + 1):
        profile[n] = depth_symbolic(G, n, field, budget=budget, force=force)
    values = [profile[n] for n in sorted(profile)]
    if any(a < b for a, b in zip(values, values[1:])):
        raise DepthEngineError(f"profile {profile} is not non-increasing")
    if values[-1] != limit:
        raise DepthEngineError(f"profile ends at {values[-1]}, expected {limit}")
    if any(v < limit for v in values):
        raise DepthEngineError(f"profile {profile} dips below its limit {limit}")
    stab = min(n for n in sorted(profile) if profile[n] <= limit)
    return DepthReport(G.to_json(), field, nu0, limit, profile, stab, "oracle")


def stability_index_oracle(G: Graph, field: FieldSpec = Rationals(), *,
                           budget: int = DEFAULT_BUDGET, force: bool = False) -> int:
    """Least n with depth R/J^(n) <= r - nu0 - 1, scanning n upward."""
    if G.is_edgeless:
        raise GraphError("stability index needs at least one edge")
    nu0 = ordered_matching_number(G)
    limit = G.vertex_count - nu0 - 1
    for n in range(1, max(2 * nu0 - 1, 1) + 1):
        if depth_symbolic(G, n, field, budget=budget, force=force) <= limit:
            return n
    raise DepthEngineError(f"depth never reached its limit {limit} by n = {2 * nu0 - 1}")


# -- perfect-matching certificate -------------------------------------------

@dataclass
class CertificateOutcome:
    value: int
    witness: dict[int, int]
    pairs: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "sdstab": self.value,
            "alpha": {str(v): a for v, a in sorted(self.witness.items())},
            "pairs": [list(p) for p in self.pairs],
        }


def feasible_exponents(G: Graph, om: OrderedMatching, n: int) -> Optional[dict[int, int]]:
    """A nonnegative vector with pair sums <= n - 1 and all other covered-edge
    sums >= n, or None.  Deterministic: pairs are assigned in reverse index
    order with lexicographic value choices, so cross constraints to already
    assigned pairs check immediately."""
    pairs = om.pairs
    covered = om.covered
    pair_edges = om.edge_set
    # per pair: edges from its endpoints into later pairs (assigned before it)
    later_edges: list[list[tuple[int, int]]] = []
    position = {}
    for i, (u, v) in enumerate(pairs):
        position[u] = i
        position[v] = i
    for i, (u, v) in enumerate(pairs):
        lst = []
        for x in (u, v):
            for w in G.neighbors[x]:
                if w in covered and position[w] > i and tuple(sorted((x, w))) not in pair_edges:
                    lst.append((x, w))
        later_edges.append(lst)
    values: dict[int, int] = {}

    def assign(i: int) -> bool:
        if i < 0:
            return True
        u, v = pairs[i]
        for total in range(0, n):
            for au in range(0, total + 1):
                values[u] = au
                values[v] = total - au
                if all(values[x] + values[w] >= n for x, w in later_edges[i]):
                    if assign(i - 1):
                        return True
        values.pop(u, None)
        values.pop(v, None)
        return False

    if assign(len(pairs) - 1):
        return dict(values)
    return None


def stability_certificate(G: Graph) -> CertificateOutcome:
    """Stability index of a graph with a perfect ordered matching, by integer
    feasibility search over exponent vectors.

    Feasibility at n holds exactly when the ordered matching number equals
    half the vertex count and n is at least the stability index, so the
    least feasible n is the index itself; the search is capped by the
    alternating-path bound, which is always feasible.
    """
    if not perfect_matchings(G):
        raise CertificateInapplicableError("graph has no perfect matching")
    om = has_perfect_ordered_matching(G)
    if om is None:
        raise CertificateInapplicableError(
            "graph has a perfect matching but no perfect ordered matching; "
            "the exponent search would never become feasible"
        )
    upper = (alt_path_length(G, om) + 1) // 2
    for n in range(1, upper + 1):
        witness = feasible_exponents(G, om, n)
        if witness is not None:
            return CertificateOutcome(n, witness, om.pairs)
    raise DepthEngineError(
        f"no feasible exponent vector up to the path bound {upper}; "
        "this contradicts the bound's construction"
    )


@dataclass
class StabilityResult:
    value: int
    method: str
    cross_checked: bool = False
    witness: Optional[dict[int, int]] = None


def stability_index(G: Graph, field: FieldSpec = Rationals(), mode: str = "auto", *,
                    budget: int = DEFAULT_BUDGET, force: bool = False) -> StabilityResult:
    """Stability index of the symbolic depth function.

    mode 'oracle' always runs the homology search; 'certificate' demands the
    perfect-matching route; 'auto' prefers the certificate where it applies,
    cross-checks against the oracle when the instance is cheap enough, and
    otherwise falls back to the oracle, then to the class equalities
    (forests; matched graphs without pentagons) when the budget refuses.
    """
    if G.is_edgeless:
        raise GraphError("stability index needs at least one edge")
    if mode == "oracle":
        return StabilityResult(stability_index_oracle(G, field, budget=budget, force=force), "oracle")
    if mode == "certificate":
        out = stability_certificate(G)
        return StabilityResult(out.value, "certificate", witness=out.witness)
    if mode != "auto":
        raise ValueError(f"unknown mode {mode!r}")
    try:
        out = stability_certificate(G)
    except CertificateInapplicableError:
        out = None
    if out is not None:
        est = oracle_cost_estimate(G.vertex_count, out.value)
        if est <= CROSS_CHECK_ESTIMATE_LIMIT and G.vertex_count < HARD_VERTEX_LIMIT:
            oracle_value = stability_index_oracle(G, field, budget=budget, force=force)
            if oracle_value != out.value:
                raise DepthEngineError(
                    f"certificate value {out.value} disagrees with oracle {oracle_value}"
                )
            return StabilityResult(out.value, "certificate+oracle", True, out.witness)
        return StabilityResult(out.value, "certificate", witness=out.witness)
    try:
        return StabilityResult(stability_index_oracle(G, field, budget=budget, force=force), "oracle")
    except BudgetRefusal:
        from .graphs import has_cycle_of_length, is_forest
        from .matchings import matching_number
        if is_forest(G) or (
            matching_number(G) == ordered_matching_number(G)
            and not has_cycle_of_length(G, 5)
        ):
            return StabilityResult(stability_bound(G), "equality-class")
        raise
