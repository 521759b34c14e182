"""Simplicial complexes given by facets: links, cones, Alexander duality and
reduced homology over an exact field.

A complex is stored as (ground set, facet antichain).  Two degenerate values
are kept distinct: the void complex (no faces at all, empty facet tuple) and
the irrelevant complex {{}} whose single facet is the empty face.  The empty
face is a first-class chain generator in degree -1, so the irrelevant complex
has one-dimensional homology there; the void complex has none anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, Optional

from .linalg import FieldSpec, Rationals, rank

Face = FrozenSet[int]


class ComplexError(ValueError):
    pass


def _canonical_facets(facets: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    sets = {frozenset(int(v) for v in f) for f in facets}
    maximal = [f for f in sets if not any(f < g for g in sets)]
    return tuple(sorted(maximal, key=lambda f: (len(f), sorted(f))))


@dataclass(frozen=True)
class SimplicialComplex:
    ground: tuple[int, ...]
    facets: tuple[Face, ...]

    @staticmethod
    def make(ground: Iterable[int], facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        gtuple = tuple(sorted(set(int(v) for v in ground)))
        gset = set(gtuple)
        canon = _canonical_facets(facets)
        for f in canon:
            if not f <= gset:
                raise ComplexError(f"facet {sorted(f)} not inside the ground set")
        return SimplicialComplex(gtuple, canon)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return len(self.facets) == 1 and not next(iter(self.facets))

    @property
    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex.  Undefined (raises) on void."""
        if self.is_void:
            raise ComplexError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def vertices_used(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def faces_of_dim(self, d: int) -> list[Face]:
        """d-faces, enumerated from facets on demand (no global face table)."""
        if self.is_void or d < -1 or d > self.dim:
            return []
        if d == -1:
            return [frozenset()]
        out: set[Face] = set()
        for f in self.facets:
            if len(f) >= d + 1:
                out.update(frozenset(c) for c in combinations(sorted(f), d + 1))
        return sorted(out, key=sorted)

    def all_faces(self) -> Iterator[Face]:
        if self.is_void:
            return
        for d in range(-1, self.dim + 1):
            yield from self.faces_of_dim(d)

    def has_face(self, face: Iterable[int]) -> bool:
        fs = frozenset(face)
        return not self.is_void and any(fs <= f for f in self.facets)

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        fs = frozenset(face)
        if not self.has_face(fs):
            raise ComplexError(f"{sorted(fs)} is not a face")
        ground = tuple(v for v in self.ground if v not in fs)
        return SimplicialComplex.make(ground, [f - fs for f in self.facets if fs <= f])

    def is_cone(self) -> Optional[int]:
        """A vertex lying in every facet, if one exists (cones are acyclic)."""
        if self.is_void:
            return None
        common = set(self.facets[0])
        for f in self.facets[1:]:
            common &= f
            if not common:
                return None
        return min(common) if common else None

    def alexander_dual(self) -> "SimplicialComplex":
        """Complements of the non-faces, over the same ground set."""
        gset = set(self.ground)
        non_faces = _minimal_non_faces(self)
        return SimplicialComplex.make(self.ground, [gset - nf for nf in non_faces])

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex.make(
            [mapping[v] for v in self.ground],
            [[mapping[v] for v in f] for f in self.facets],
        )

    def to_json(self) -> dict:
        out = {"m": len(self.ground), "facets": [sorted(f) for f in self.facets]}
        if self.ground != tuple(range(1, len(self.ground) + 1)):
            out["labels"] = list(self.ground)
        return out


def from_facets(ground_size: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Classic constructor on ground set {1..m}; [] is void, [[]] is {{}}."""
    return SimplicialComplex.make(range(1, ground_size + 1), facets)


def _minimal_non_faces(cx: SimplicialComplex) -> list[Face]:
    if cx.is_void:
        # every subset is a non-face; the empty set is the minimal one
        return [frozenset()]
    ground = cx.ground
    minimal: list[Face] = []
    for size in range(1, len(ground) + 1):
        for sub in combinations(ground, size):
            fs = frozenset(sub)
            if cx.has_face(fs):
                continue
            if any(nf <= fs for nf in minimal):
                continue
            minimal.append(fs)
    return minimal


def _boundary_rank(cx: SimplicialComplex, d: int, field: FieldSpec,
                   faces_d: list[Face], faces_dm1: list[Face]) -> int:
    """Rank of the boundary map from d-chains to (d-1)-chains."""
    if not faces_d or not faces_dm1:
        return 0
    index = {f: i for i, f in enumerate(faces_dm1)}
    rows = [[0] * len(faces_d) for _ in faces_dm1]
    for j, f in enumerate(faces_d):
        verts = sorted(f)
        for pos, v in enumerate(verts):
            sub = frozenset(f - {v})
            rows[index[sub]][j] = -1 if pos % 2 else 1
    return rank(rows, field)


def reduced_homology(cx: SimplicialComplex, field: FieldSpec = Rationals()) -> dict[int, int]:
    """Reduced homology dimensions by degree, from boundary-matrix ranks.

    dim H_d = (#d-faces) - rank(boundary_d) - rank(boundary_{d+1}); the empty
    face sits in degree -1.  The alternating face count is checked against
    the alternating homology dimensions on every call.
    """
    if cx.is_void:
        return {}
    top = cx.dim
    faces = {d: cx.faces_of_dim(d) for d in range(-1, top + 1)}
    ranks = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        ranks[d] = _boundary_rank(cx, d, field, faces[d], faces[d - 1])
    profile = {}
    for d in range(-1, top + 1):
        profile[d] = len(faces[d]) - ranks[d] - ranks[d + 1]
        if profile[d] < 0:
            raise AssertionError(f"negative homology dimension in degree {d}")
    euler_faces = sum((-1) ** d * len(faces[d]) for d in range(-1, top + 1))
    euler_hom = sum((-1) ** d * h for d, h in profile.items())
    if euler_faces != euler_hom:
        raise AssertionError("Euler characteristic mismatch between faces and homology")
    return profile


def nonzero_degrees(profile: dict[int, int]) -> list[int]:
    return sorted(d for d, h in profile.items() if h)


def dual_homology_check(cx: SimplicialComplex, field: FieldSpec = Rationals()) -> bool:
    """Dimension identity H_{i-1}(dual) = H_{m-2-i}(complex) across all i."""
    m = len(cx.ground)
    prof = reduced_homology(cx, field)
    dual_prof = reduced_homology(cx.alexander_dual(), field)
    degrees = set(prof) | {m - 3 - d for d in dual_prof}
    for d in degrees:
        if prof.get(d, 0) != dual_prof.get(m - 3 - d, 0):
            return False
    return True
