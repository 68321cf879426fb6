"""Classification of compact facets: exceptional and proximate axes.

A facet is exceptional with respect to an axis when some partial
derivative of its face polynomial (in a different variable) is a pure
power of that axis variable; geometrically the facet is a pyramid with
base in a coordinate hyperplane through the axis and apex at lattice
distance 1 from the axis.  Both tests are implemented and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalError
from .poly import Poly, face_polynomial, newton_polyhedron
from .polyhedron import Face

Point = tuple[int, ...]


@dataclass(frozen=True)
class FaceClassification:
    face: Face
    exceptional_for: frozenset[int]
    proximate_for: frozenset[int]


def is_pure_power_of(g: Poly, axis: int) -> bool:
    """Is g a single term c*z_axis^m (m >= 0)?"""
    if len(g.terms) != 1:
        return False
    exp = g.terms[0].exponent
    return all(e == 0 for i, e in enumerate(exp) if i != axis)


def _derivative_exceptional(f_s: Poly, axis: int) -> bool:
    for j in range(f_s.n):
        if j == axis:
            continue
        d = f_s.diff(j)
        if not d.is_zero and is_pure_power_of(d, axis):
            return True
    return False


def _axis_distance_one(vertex: Point, axis: int) -> bool:
    """Complementary coordinates of the vertex are a permutation of (1,0)
    (in 2 variables: the single complementary coordinate equals 1)."""
    comp = sorted(e for i, e in enumerate(vertex) if i != axis)
    return comp == [1] or comp == [0, 1]


def _on_axis(vertex: Point, axis: int) -> bool:
    return all(e == 0 for i, e in enumerate(vertex) if i != axis)


def _geometric_exceptional(face: Face, axis: int) -> bool:
    n = face.n
    for j in range(n):
        if j == axis:
            continue
        off_plane = [v for v in face.vertices if v[j] != 0]
        if len(off_plane) != 1:
            continue
        apex = off_plane[0]
        if apex[j] == 1 and _axis_distance_one(apex, axis):
            return True
    return False


def is_exceptional(f: Poly, face: Face, axis: int) -> bool:
    """Is a facet exceptional with respect to the given axis (0-based)?

    Runs both the derivative test and the geometric pyramid test; a
    disagreement indicates a bug in the face machinery.
    """
    n = f.n
    if face.dim != n - 1:
        raise DomainError("exceptionality is defined for facets only")
    if not 0 <= axis < n:
        raise DomainError(f"axis {axis} out of range")
    f_s = face_polynomial(f, face)
    derivative = _derivative_exceptional(f_s, axis)
    geometric = _geometric_exceptional(face, axis)
    if derivative != geometric:
        raise InternalError(
            f"exceptionality tests disagree on {face} axis {axis}: "
            f"derivative={derivative} geometric={geometric}")
    return derivative


def exceptional_axes(f: Poly, face: Face) -> frozenset[int]:
    return frozenset(i for i in range(f.n) if is_exceptional(f, face, i))


def exceptional_faces(f: Poly) -> set[Face]:
    """E(f): compact facets exceptional with respect to at least one axis."""
    p = newton_polyhedron(f)
    return {s for s in p.facets() if exceptional_axes(f, s)}


def is_proximate(f: Poly, face: Face, axis: int) -> bool:
    """Is a 2-face proximate for the given axis (n = 3 only)?

    Requires: not exceptional w.r.t. the axis, a vertex on the axis or at
    lattice distance 1 from it, and contact with both coordinate planes
    containing the axis.
    """
    if f.n != 3:
        raise DomainError("proximate faces are defined for n=3 only")
    if face.dim != 2:
        raise DomainError("proximity is defined for facets only")
    if is_exceptional(f, face, axis):
        return False
    if not any(_on_axis(v, axis) or _axis_distance_one(v, axis)
               for v in face.vertices):
        return False
    others = [j for j in range(3) if j != axis]
    return all(face.touches_hyperplane(j) for j in others)


def proximate_faces(f: Poly, axis: int) -> list[Face]:
    """All facets proximate for the axis (possibly empty)."""
    p = newton_polyhedron(f)
    return [s for s in p.facets() if is_proximate(f, s, axis)]


def classify_facets(f: Poly) -> list[FaceClassification]:
    """Exceptional/proximate axis sets for every compact facet."""
    p = newton_polyhedron(f)
    out = []
    for s in p.facets():
        exc = exceptional_axes(f, s)
        if f.n == 3:
            prox = frozenset(i for i in range(3) if is_proximate(f, s, i))
        else:
            prox = frozenset()
        out.append(FaceClassification(s, exc, prox))
    return out
