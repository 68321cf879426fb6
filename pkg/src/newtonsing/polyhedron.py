"""Exact lattice geometry of Newton polyhedra in 2 and 3 variables.

A Newton polyhedron is conv{p + R_+^n : p in P} for a finite set P of
lattice points with non-negative coordinates.  The builder enumerates a
complete halfspace description by brute force over candidate normals
(supports are tiny), extracts the minimal vertex set, and assembles the
compact face lattice (the Newton boundary).  All arithmetic is integer or
Fraction; there is no floating point in this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from ._exact import cross, det2, det3, dot, primitive, rank, unit, vsub
from .errors import DomainError

Point = tuple[int, ...]

AXIS_NAMES = ("x", "y", "z")


@dataclass(frozen=True, order=True)
class SupportForm:
    """A valid inequality <normal, p> >= offset with primitive normal >= 0."""

    normal: tuple[int, ...]
    offset: int

    def value(self, point) -> int:
        return dot(self.normal, point)

    def is_tight(self, point) -> bool:
        return self.value(point) == self.offset

    @property
    def strictly_positive(self) -> bool:
        return all(c > 0 for c in self.normal)


@dataclass(frozen=True, order=True)
class Face:
    """A compact face of a Newton polyhedron.

    ``support`` is a witnessing form: the face is exactly the subset of
    the polyhedron where the form is tight, and the normal is strictly
    positive (compactness witness).
    """

    dim: int
    vertices: tuple[Point, ...]
    support: SupportForm

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    def touches_hyperplane(self, axis: int) -> bool:
        """Does the face meet the coordinate hyperplane {x_axis = 0}?

        Vertex membership suffices: all coordinates are >= 0, so an edge
        cannot cross the hyperplane without an endpoint on it.
        """
        return any(v[axis] == 0 for v in self.vertices)


class _Facet:
    """Internal: a facet of the halfspace description (maybe non-compact)."""

    __slots__ = ("form", "tight_vertices", "free_axes")

    def __init__(self, form: SupportForm, tight_vertices: tuple[Point, ...],
                 free_axes: frozenset[int]):
        self.form = form
        self.tight_vertices = tight_vertices
        self.free_axes = free_axes


class NewtonPolyhedron:
    """Immutable Newton polyhedron with its compact face lattice."""

    def __init__(self, n: int, generators, vertices, halfspaces, faces_by_dim,
                 facet_forms=()):
        self.n = n
        self.generators: tuple[Point, ...] = tuple(sorted(generators))
        self.vertices: tuple[Point, ...] = tuple(sorted(vertices))
        self.halfspaces: tuple[SupportForm, ...] = tuple(sorted(halfspaces))
        # irredundant facet inequalities (compact and non-compact facets)
        self.facet_forms: tuple[SupportForm, ...] = tuple(sorted(facet_forms))
        self._faces_by_dim: dict[int, tuple[Face, ...]] = {
            k: tuple(sorted(v)) for k, v in faces_by_dim.items()
        }

    def contains(self, point) -> bool:
        """Exact membership test via the facet description."""
        if any(c < 0 for c in point):
            return False
        return all(h.value(point) >= h.offset for h in self.facet_forms)

    def compact_faces(self, k: int) -> tuple[Face, ...]:
        if not 0 <= k <= self.n - 1:
            raise DomainError(f"face dimension {k} out of range for n={self.n}")
        return self._faces_by_dim.get(k, ())

    def facets(self) -> tuple[Face, ...]:
        """Compact facets (the (n-1)-dimensional Newton-boundary faces)."""
        return self.compact_faces(self.n - 1)

    def all_compact_faces(self) -> tuple[Face, ...]:
        out = []
        for k in range(self.n):
            out.extend(self._faces_by_dim.get(k, ()))
        return tuple(out)

    def find_face(self, face: Face) -> Face:
        """Return the canonical face equal to ``face`` (by dimension and
        vertex set), or raise DomainError."""
        for cand in self.compact_faces(face.dim):
            if cand.vertices == face.vertices:
                return cand
        raise DomainError("not a compact face of this polyhedron")

    def __eq__(self, other):
        return (isinstance(other, NewtonPolyhedron)
                and self.n == other.n and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.n, self.vertices))

    def __repr__(self):
        return f"NewtonPolyhedron(n={self.n}, vertices={list(self.vertices)})"


def _candidate_normals(points: list[Point], n: int) -> set[tuple[int, ...]]:
    """All primitive normals >= 0 from spanning (n-1)-subsets of difference
    vectors and coordinate directions.  Superset of the facet normals."""
    normals: set[tuple[int, ...]] = {tuple(unit(n, i)) for i in range(n)}
    diffs = [vsub(p, q) for p, q in itertools.combinations(points, 2)]
    spanners = [d for d in diffs if any(d)] + [unit(n, i) for i in range(n)]
    if n == 2:
        for d in spanners:
            w = (-d[1], d[0])
            for cand in (w, tuple(-c for c in w)):
                if all(c >= 0 for c in cand) and any(cand):
                    normals.add(primitive(cand))
    else:
        for u, v in itertools.combinations(spanners, 2):
            w = cross(u, v)
            if not any(w):
                continue
            for cand in (w, tuple(-c for c in w)):
                if all(c >= 0 for c in cand):
                    normals.add(primitive(cand))
                    break
    return normals


def build_newton_polyhedron(points, n: int) -> NewtonPolyhedron:
    """Build Gamma_+ of a finite support set with its compact face lattice.

    A point is kept as a vertex iff it is not in the hull of the others
    plus the positive orthant.
    """
    pts = sorted({tuple(p) for p in points})
    if not pts:
        raise DomainError("empty support")
    if n not in (2, 3):
        raise DomainError(f"dimension {n} not supported (n must be 2 or 3)")
    for p in pts:
        if len(p) != n:
            raise DomainError(f"point {p} does not have {n} coordinates")
        if any(c < 0 for c in p):
            raise DomainError(f"point {p} has a negative coordinate")

    halfspaces = []
    for w in _candidate_normals(pts, n):
        d = min(dot(w, p) for p in pts)
        halfspaces.append(SupportForm(w, d))
    halfspaces = sorted(set(halfspaces))

    # vertices: tight valid normals span R^n
    vertices = []
    for p in pts:
        tight = [h.normal for h in halfspaces if h.is_tight(p)]
        if rank(tight) == n:
            vertices.append(p)
    vertices = sorted(vertices)

    # facets of the halfspace description (compact and not)
    facets: list[_Facet] = []
    for h in halfspaces:
        tv = tuple(v for v in vertices if h.is_tight(v))
        free = frozenset(i for i in range(n) if h.normal[i] == 0)
        vecs = [unit(n, i) for i in free]
        if tv:
            vecs.extend(vsub(v, tv[0]) for v in tv[1:])
        elif not free:
            continue
        if rank(vecs) == n - 1 and tv:
            facets.append(_Facet(h, tv, free))

    faces_by_dim: dict[int, list[Face]] = {k: [] for k in range(n)}

    def witness(face_vertices: tuple[Point, ...]) -> SupportForm:
        """Sum of the normals of all facets containing the given vertices;
        tight exactly on the face, strictly positive for compact faces."""
        containing = [ft.form for ft in facets
                      if all(ft.form.is_tight(v) for v in face_vertices)]
        w = tuple(sum(f.normal[i] for f in containing) for i in range(n))
        w = primitive(w)
        return SupportForm(w, dot(w, face_vertices[0]))

    for v in vertices:
        faces_by_dim[0].append(Face(0, (v,), witness((v,))))

    if n == 2:
        for ft in facets:
            if not ft.free_axes and len(ft.tight_vertices) == 2:
                faces_by_dim[1].append(Face(1, ft.tight_vertices, ft.form))
    else:
        seen_edges: set[tuple[Point, ...]] = set()
        for f1, f2 in itertools.combinations(facets, 2):
            common = tuple(v for v in f1.tight_vertices if v in f2.tight_vertices)
            if len(common) != 2:
                continue
            if f1.free_axes & f2.free_axes:
                continue  # non-compact edge
            if common in seen_edges:
                continue
            seen_edges.add(common)
            faces_by_dim[1].append(Face(1, common, witness(common)))
        for ft in facets:
            if not ft.free_axes:
                faces_by_dim[2].append(Face(2, ft.tight_vertices, ft.form))

    return NewtonPolyhedron(n, pts, vertices, halfspaces, faces_by_dim,
                            facet_forms=[ft.form for ft in facets])


def compact_faces(polyhedron: NewtonPolyhedron, k: int) -> list[Face]:
    """The k-dimensional compact boundary faces."""
    return list(polyhedron.compact_faces(k))


def facet_intercepts(face: Face) -> dict[str, Fraction]:
    """Axis intercepts of the supporting hyperplane of a facet.

    Exact rationals; the normal of a compact facet is strictly positive,
    so every intercept is finite.
    """
    n = face.n
    if face.dim != n - 1:
        raise DomainError("intercepts are defined for facets only")
    form = face.support
    return {AXIS_NAMES[i]: Fraction(form.offset, form.normal[i]) for i in range(n)}


def m_value(face: Face) -> Fraction:
    """Largest axis intercept of a facet's supporting hyperplane."""
    return max(facet_intercepts(face).values())


def _polygon_cycle(verts: list[Point], normal) -> list[Point]:
    """Vertices of a convex planar polygon in boundary order (exact)."""
    base = min(verts)
    rest = [v for v in verts if v != base]

    def cmp(a, b):
        s = dot(normal, cross(vsub(a, base), vsub(b, base)))
        return -1 if s > 0 else (1 if s < 0 else 0)

    return [base] + sorted(rest, key=cmp_to_key(cmp))


def _cone_volume(sub: NewtonPolyhedron, base_index: int = 0) -> Fraction:
    """Volume under the Newton boundary: cones over compact facets from 0.

    ``base_index`` selects the fan base vertex inside each facet; the
    total is independent of this choice (triangulation invariance).
    """
    k = sub.n
    total = Fraction(0)
    for face in sub.facets():
        if k == 2:
            u, v = face.vertices
            total += Fraction(abs(det2(u, v)), 2)
        else:
            cyc = _polygon_cycle(list(face.vertices), face.support.normal)
            base = cyc[base_index % len(cyc)]
            others = [v for v in cyc if v != base]
            for a, b in zip(others, others[1:]):
                total += Fraction(abs(det3(base, a, b)), 6)
    return total


@lru_cache(maxsize=65536)
def _under_volume_cached(vertices: tuple[Point, ...], n: int,
                         axes: tuple[int, ...], base_index: int) -> Fraction:
    outside = [i for i in range(n) if i not in axes]
    restricted = sorted({tuple(p[i] for i in axes)
                         for p in vertices
                         if all(p[i] == 0 for i in outside)})
    k = len(axes)
    for pos in range(k):
        if not any(all(q[j] == 0 for j in range(k) if j != pos) for q in restricted):
            raise DomainError("unbounded under-region: restriction misses an axis")
    if k == 1:
        return Fraction(min(q[0] for q in restricted))
    sub = _cached_build(tuple(restricted), k)
    return _cone_volume(sub, base_index)


def under_volume(polyhedron: NewtonPolyhedron, axes, *, _base_index: int = 0) -> Fraction:
    """Exact |I|-dimensional volume of the region of R_+^I below the Newton
    boundary of the restriction of the support to the coordinate subspace I.

    ``axes`` is an iterable of 0-based axis indices.  The restriction must
    meet every axis of I, otherwise the region is unbounded.  The volume
    depends only on the vertex set (generators restricted to the subspace
    span the same hull as vertices restricted to it), which keys the cache.
    """
    axes = tuple(sorted(set(axes)))
    n = polyhedron.n
    if not axes or any(a < 0 or a >= n for a in axes):
        raise DomainError(f"invalid axis subset {axes}")
    return _under_volume_cached(polyhedron.vertices, n, axes, _base_index)


@lru_cache(maxsize=8192)
def _cached_build(points: tuple[Point, ...], n: int) -> NewtonPolyhedron:
    return build_newton_polyhedron(points, n)


def polyhedron_of_support(support, n: int) -> NewtonPolyhedron:
    """Cached builder keyed by the (sorted) support set."""
    return _cached_build(tuple(sorted(set(map(tuple, support)))), n)
