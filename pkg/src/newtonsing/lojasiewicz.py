"""Lojasiewicz exponent of the gradient from the Newton boundary.

Dispatch:

* n=2: max of m(S)-1 over non-exceptional compact edges, else 1.
* n=3 with a non-exceptional facet: max of m(S)-1 over those facets.
* n=3 with only exceptional facets: there is exactly one edge joining a
  vertex of the form z_a*z_b and a vertex z_c^k (up to permutation of the
  variables), and the exponent is k-1.

An independent second route for n=3 computes the same value from one
proximate face per axis (the facet-intercept maximum along each axis).
All formulas require a non-degenerate isolated singularity; degeneracy
is checked first unless explicitly skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import exceptional_axes, is_exceptional, proximate_faces
from .errors import DegenerateInputError, DomainError, InternalError, StabilizationError
from .newton_number import newton_number, newton_number_stabilized
from .nondegeneracy import NONDEGENERATE, GenericSampler, NondegeneracyVerdict, check_all
from .poly import Poly, is_convenient, newton_polyhedron, order_and_hessian_rank
from .polyhedron import AXIS_NAMES, Face, facet_intercepts, m_value

LENARCIK_2D = "Lenarcik2D"
ALL_FACES_3D = "AllFaces3D"
PROXIMATE_3D = "Proximate3D"
SEGMENT_CASE = "SegmentCase"
HESSIAN_SHORTCUT = "HessianShortcut"


@dataclass(frozen=True)
class LojaResult:
    value: Fraction
    method: str
    witnesses: tuple[Face, ...] = ()


def _require_singular(f: Poly) -> None:
    if f.is_zero:
        raise DomainError("zero polynomial is not a singularity")
    if f.order() < 2:
        raise DomainError(
            "order < 2: the gradient does not vanish at 0 (not a singularity)")


def ensure_formula_preconditions(
    f: Poly,
    *,
    skip_nondegeneracy: bool = False,
    assume_isolated: bool = False,
    sampler: GenericSampler | None = None,
    verdict: NondegeneracyVerdict | None = None,
) -> NondegeneracyVerdict | None:
    """Check the standing hypotheses of the boundary formulas.

    Non-degeneracy is decided exactly (unless skipped).  Isolatedness is
    not decidable here; the accepted evidence is convenience plus
    non-degeneracy (finite Newton number), or convergence of the
    stabilized Newton number, or the explicit assume_isolated flag.
    """
    _require_singular(f)
    if skip_nondegeneracy:
        return verdict
    if verdict is None:
        verdict = check_all(f, sampler)
    if not verdict.ok:
        raise DegenerateInputError(
            f"formula requires non-degeneracy: {verdict.detail or verdict.status}",
            verdict)
    if assume_isolated:
        return verdict
    convenient, _ = is_convenient(f)
    try:
        if convenient:
            newton_number(f)
        else:
            newton_number_stabilized(f)
    except StabilizationError:
        raise DomainError(
            "cannot certify an isolated singularity (Newton number does not "
            "stabilize); pass assume_isolated to proceed") from None
    return verdict


def _max_over_faces(faces_with_m) -> tuple[Fraction, tuple[Face, ...]]:
    best = max(m for _, m in faces_with_m)
    witnesses = tuple(sorted(face for face, m in faces_with_m if m == best))
    return best, witnesses


def _segment_case(f: Poly) -> LojaResult:
    """Boundary with only exceptional facets: find the z_a*z_b -- z_c^k edge."""
    p = newton_polyhedron(f)
    hits = []
    for edge in p.compact_faces(1):
        u, v = edge.vertices
        for prod, power in ((u, v), (v, u)):
            pos = [i for i, e in enumerate(prod) if e > 0]
            if sorted(prod[i] for i in pos) != [1, 1]:
                continue
            axis = [i for i, e in enumerate(power) if e > 0]
            if len(axis) != 1 or axis[0] in pos:
                continue
            k = power[axis[0]]
            if k >= 2:
                hits.append((edge, k))
    if len(hits) != 1:
        raise DomainError(
            "boundary shape violates the exceptional-only case: expected exactly "
            f"one edge joining z_a*z_b and z_c^k, found {len(hits)}")
    edge, k = hits[0]
    return LojaResult(Fraction(k - 1), SEGMENT_CASE, (edge,))


def lojasiewicz_exponent(
    f: Poly,
    *,
    skip_nondegeneracy: bool = False,
    assume_isolated: bool = False,
    sampler: GenericSampler | None = None,
    verdict: NondegeneracyVerdict | None = None,
) -> LojaResult:
    """Exact Lojasiewicz exponent of an isolated non-degenerate singularity."""
    ensure_formula_preconditions(
        f, skip_nondegeneracy=skip_nondegeneracy, assume_isolated=assume_isolated,
        sampler=sampler, verdict=verdict)
    p = newton_polyhedron(f)
    facets = p.facets()
    plain = [s for s in facets if not exceptional_axes(f, s)]
    if f.n == 2:
        if not plain:
            return LojaResult(Fraction(1), LENARCIK_2D)
        value, wit = _max_over_faces([(s, m_value(s)) for s in plain])
        return LojaResult(value - 1, LENARCIK_2D, wit)
    if plain:
        value, wit = _max_over_faces([(s, m_value(s)) for s in plain])
        return LojaResult(value - 1, ALL_FACES_3D, wit)
    return _segment_case(f)


def lojasiewicz_via_proximate(
    f: Poly,
    *,
    skip_nondegeneracy: bool = False,
    assume_isolated: bool = False,
    sampler: GenericSampler | None = None,
    verdict: NondegeneracyVerdict | None = None,
) -> LojaResult:
    """Same value as the all-faces route, from one proximate face per axis."""
    if f.n != 3:
        raise DomainError("proximate-face route is defined for n=3 only")
    ensure_formula_preconditions(
        f, skip_nondegeneracy=skip_nondegeneracy, assume_isolated=assume_isolated,
        sampler=sampler, verdict=verdict)
    p = newton_polyhedron(f)
    if not any(not exceptional_axes(f, s) for s in p.facets()):
        raise DomainError("no non-exceptional facets: proximate route not applicable")
    best: Fraction | None = None
    witnesses: list[Face] = []
    for axis in range(3):
        prox = proximate_faces(f, axis)
        if not prox:
            raise InternalError(f"no proximate face for axis {AXIS_NAMES[axis]} "
                                "although a non-exceptional facet exists")
        intercepts = {facet_intercepts(s)[AXIS_NAMES[axis]] for s in prox}
        if len(intercepts) != 1:
            raise InternalError("proximate faces of one axis with distinct intercepts")
        m = intercepts.pop()
        if best is None or m > best:
            best, witnesses = m, list(prox)
        elif m == best:
            witnesses.extend(prox)
    return LojaResult(best - 1, PROXIMATE_3D, tuple(sorted(set(witnesses))))


def hessian_shortcut(f: Poly, mu: int,
                     sampler: GenericSampler | None = None) -> Fraction | None:
    """The exponent equals the Milnor number iff the Hessian rank at 0 is
    at least n-1; returns mu in that case, None otherwise."""
    _, hrank = order_and_hessian_rank(f, sampler)
    if hrank >= f.n - 1:
        return Fraction(mu)
    return None
