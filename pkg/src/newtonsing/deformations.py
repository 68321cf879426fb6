"""Monomial deformations f_t = f_0 + t*z^alpha: Newton-number constancy,
the pyramid certificate for polyhedron growth, and verification that the
Lojasiewicz exponent is unchanged in non-degenerate mu-constant families.

The certificate characterizes when the polyhedron can grow without
changing the Newton number: the new vertex alpha lies in a coordinate
plane H, and the closure of Gamma_+(f_t) \\ Gamma_+(f_0) is a pyramid
whose base is the in-plane difference region and whose apex is a vertex
of Gamma_+(f_0) at lattice height 1 over H.  Both polyhedra are made
convenient first by adding the same large pure powers on the missing
axes, so the difference region is compact.  The pyramid test is exact:
base triangles are carved out between the two in-plane Newton
boundaries, every cone simplex must avoid the interior of Gamma_+(f_0)
(Fourier-Motzkin feasibility), and the pyramid volume area(base)/3 must
equal the exact loss of under-boundary volume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._exact import fm_feasible
from .classify import exceptional_axes
from .errors import DegenerateInputError, DomainError, InternalError, NewtonsingError
from .lojasiewicz import LojaResult, lojasiewicz_exponent
from .newton_number import NewtonNumber, newton_number_stabilized
from .nondegeneracy import GenericSampler, NondegeneracyVerdict, check_all
from .poly import (DEFAULT_SAMPLER, Poly, is_convenient, newton_polyhedron,
                   order_and_hessian_rank, support)
from .polyhedron import (AXIS_NAMES, NewtonPolyhedron, polyhedron_of_support,
                         under_volume)

Point = tuple[int, ...]

SHORTCUT_NONE = "None"
SHORTCUT_ORDER2 = "Order2"
SHORTCUT_SEGMENT = "SegmentCase"


@dataclass(frozen=True)
class DeformationSpec:
    base: Poly
    alpha: Point

    def __post_init__(self):
        alpha = tuple(int(a) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.base.n:
            raise DomainError("alpha dimension mismatch")
        if any(a < 0 for a in alpha):
            raise DomainError("alpha must have non-negative entries")
        if not any(alpha):
            raise DomainError("alpha must be nonzero (f(t,0)=0)")


@dataclass(frozen=True)
class PyramidCertificate:
    coordinate_plane: str | None       # plane containing alpha, e.g. "yz" = {x=0}
    apex: Point | None
    base_vertices: tuple[tuple[Fraction, ...], ...]
    difference_region: str
    volume: Fraction
    trivial: bool = False


@dataclass(frozen=True)
class DeformationReport:
    alpha: Point
    nu0: NewtonNumber
    nut: NewtonNumber
    mu_constant: bool
    nondegenerate_base: str
    nondegenerate_deformed: str
    certificate: PyramidCertificate | None
    L0: LojaResult | None
    Lt: LojaResult | None
    main_theorem_holds: bool | None
    shortcut_used: str
    case: str | None = None
    warnings: tuple[str, ...] = ()


def deformed_poly(spec: DeformationSpec) -> Poly:
    """f_0 plus the generic-coefficient monomial t*z^alpha."""
    return spec.base + Poly.make(spec.base.n, {spec.alpha: "t"})


def enumerate_candidates(f0: Poly, box: int) -> list[Point]:
    """All nonzero alpha in [0, box]^n strictly outside Gamma_+(f_0),
    in lexicographic order."""
    if box < 1:
        raise DomainError("box must be >= 1")
    import itertools

    p = newton_polyhedron(f0)
    out = []
    for alpha in itertools.product(range(box + 1), repeat=f0.n):
        if any(alpha) and not p.contains(alpha):
            out.append(alpha)
    return out


def is_mu_constant(spec: DeformationSpec) -> bool:
    """Equality of the (stabilized) Newton numbers of f_0 and f_t.

    Under non-degeneracy of both sides this is mu-constancy; without it
    the verdict is about the Newton numbers only.
    """
    nu0 = newton_number_stabilized(spec.base)
    nut = newton_number_stabilized(deformed_poly(spec))
    return nu0.value == nut.value


# --- pyramid certificate -----------------------------------------------------

def _chain_function(poly2d: NewtonPolyhedron):
    """The 2-D Newton boundary as a piecewise-linear function of the first
    coordinate (convenient restrictions only): decreasing to 0."""
    chain = sorted(poly2d.vertices)

    def phi(u: Fraction) -> Fraction:
        u = Fraction(u)
        if u >= chain[-1][0]:
            return Fraction(0)
        for (u1, v1), (u2, v2) in zip(chain, chain[1:]):
            if u1 <= u <= u2:
                return Fraction(v1) + (Fraction(v2 - v1) * (u - u1)) / (u2 - u1)
        raise InternalError("chain evaluation out of range")

    return chain, phi


def _base_triangles(support0: set[Point], supportt: set[Point], h: int):
    """Triangulated in-plane difference region for the plane {x_h = 0}.

    Returns (triangles, area) with triangles in plane coordinates.
    """
    axes = tuple(i for i in range(3) if i != h)
    r0 = {tuple(p[i] for i in axes) for p in support0 if p[h] == 0}
    rt = {tuple(p[i] for i in axes) for p in supportt if p[h] == 0}
    inner = polyhedron_of_support(tuple(sorted(r0)), 2)     # boundary of f0 side
    outer = polyhedron_of_support(tuple(sorted(rt)), 2)     # boundary of ft side
    chain_b, phi_b = _chain_function(inner)
    chain_a, phi_a = _chain_function(outer)
    breaks = sorted({Fraction(u) for u, _ in chain_b}
                    | {Fraction(u) for u, _ in chain_a if u <= chain_b[-1][0]}
                    | {Fraction(chain_b[-1][0])})
    triangles = []
    area = Fraction(0)
    for u1, u2 in zip(breaks, breaks[1:]):
        a1, a2 = phi_a(u1), phi_a(u2)
        b1, b2 = phi_b(u1), phi_b(u2)
        corners = [(u1, a1), (u2, a2), (u2, b2), (u1, b1)]
        for tri in ((corners[0], corners[1], corners[3]),
                    (corners[1], corners[2], corners[3])):
            (x1, y1), (x2, y2), (x3, y3) = tri
            twice = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
            if twice != 0:
                triangles.append(tri)
                area += abs(twice) / 2
    return triangles, area


def _lift(point2d, h: int):
    out = [Fraction(0)] * 3
    axes = [i for i in range(3) if i != h]
    for pos, value in zip(axes, point2d):
        out[pos] = Fraction(value)
    return tuple(out)


def _tetra_avoids_interior(tetra, polyhedron: NewtonPolyhedron) -> bool:
    """conv(tetra) disjoint from the (open) interior of the polyhedron?

    Barycentric feasibility with the last coordinate eliminated: a point
    is p_m + sum_j lambda_j (p_j - p_m) with lambda_j >= 0 and
    sum lambda_j <= 1; interior membership makes every facet inequality
    strict.  Infeasibility of that system is the disjointness.
    """
    m = len(tetra) - 1
    last = tetra[-1]
    cons = []
    for j in range(m):  # lambda_j >= 0
        cons.append((tuple(Fraction(1 if i == j else 0) for i in range(m)),
                     Fraction(0), False))
    cons.append((tuple(Fraction(-1) for _ in range(m)), Fraction(-1), False))
    for hsp in polyhedron.facet_forms:
        base_val = sum(Fraction(w) * c for w, c in zip(hsp.normal, last))
        coeffs = tuple(
            sum(Fraction(w) * c for w, c in zip(hsp.normal, vertex)) - base_val
            for vertex in tetra[:m])
        cons.append((coeffs, Fraction(hsp.offset) - base_val, True))
    return not fm_feasible(cons, m)


def _stabilized_support(f0: Poly, k: int) -> set[Point]:
    stab_points = set()
    _, missing = is_convenient(f0)
    for name in missing:
        axis = AXIS_NAMES.index(name)
        stab_points.add(tuple(k if i == axis else 0 for i in range(3)))
    return set(support(f0)) | stab_points


def _stabilized_hull(f0: Poly, k: int) -> NewtonPolyhedron:
    return polyhedron_of_support(tuple(sorted(_stabilized_support(f0, k))), 3)


def _certificate_at(spec: DeformationSpec, k: int) -> PyramidCertificate | None:
    f0 = spec.base
    s0 = _stabilized_support(f0, k)
    st = s0 | {spec.alpha}
    p0 = polyhedron_of_support(tuple(sorted(s0)), 3)
    pt = polyhedron_of_support(tuple(sorted(st)), 3)
    if p0.contains(spec.alpha):
        raise InternalError("stabilization exponent too small for this alpha")
    lost = under_volume(p0, (0, 1, 2)) - under_volume(pt, (0, 1, 2))
    if lost <= 0:
        raise InternalError("polyhedron grew but no volume was gained")
    for h in range(3):
        if spec.alpha[h] != 0:
            continue
        triangles, area = _base_triangles(s0, st, h)
        if area != 3 * lost:
            continue
        apexes = sorted(v for v in p0.vertices if v[h] == 1)
        for apex in apexes:
            tetras = [[tuple(Fraction(c) for c in apex),
                       _lift(t[0], h), _lift(t[1], h), _lift(t[2], h)]
                      for t in triangles]
            if all(_tetra_avoids_interior(t, p0) for t in tetras):
                plane = "".join(AXIS_NAMES[i] for i in range(3) if i != h)
                base_vertices = tuple(sorted({_lift(c, h)
                                              for tri in triangles for c in tri}))
                return PyramidCertificate(
                    plane, apex, base_vertices,
                    f"pyramid over the {plane}-plane with apex {apex}, "
                    f"volume {lost}",
                    lost)
    return None


def bkw_certificate(spec: DeformationSpec) -> PyramidCertificate | None:
    """Geometric certificate for Newton-number-preserving growth.

    Returns the trivial certificate when alpha is already in the
    polyhedron, the pyramid when the characterization holds, else None.
    The verdict is recomputed at a doubled stabilization exponent and
    must agree.
    """
    f0 = spec.base
    if f0.n != 3:
        raise DomainError("pyramid certificates are defined for n=3 only")
    if newton_polyhedron(f0).contains(spec.alpha):
        return PyramidCertificate(None, None, (), "empty difference region",
                                  Fraction(0), trivial=True)
    coords = [c for p in support(f0) for c in p] + list(spec.alpha)
    floor = max(4, 2 * max(coords), newton_number_stabilized(f0).value)
    k = 4
    while k <= floor:
        k *= 2
    # the stabilized hull shrinks to Gamma_+(f0) as k grows; alpha outside
    # the k-hull stays outside the (2k)-hull, so testing k covers both runs
    while _stabilized_hull(f0, k).contains(spec.alpha):
        k *= 2
        if k > 2**20:
            raise InternalError("no stabilization separates alpha from the hull")
    first = _certificate_at(spec, k)
    second = _certificate_at(spec, 2 * k)
    if (first is None) != (second is None):
        raise InternalError(
            f"pyramid verdict unstable between stabilizations k={k} and {2 * k}")
    return first


# --- main-theorem verification ----------------------------------------------

@dataclass(frozen=True)
class BaseAnalysis:
    """Deformation-independent data of f_0, reusable across a scan."""

    verdict: NondegeneracyVerdict
    nu: NewtonNumber
    loja: LojaResult | None
    loja_error: str | None
    order: int
    only_exceptional: bool


def analyze_base(f0: Poly, sampler: GenericSampler | None = None) -> BaseAnalysis:
    if f0.n != 3:
        raise DomainError("main-theorem analysis is for n=3 only")
    sampler = sampler or DEFAULT_SAMPLER
    verdict = check_all(f0, sampler)
    nu = newton_number_stabilized(f0)
    loja = None
    loja_error = None
    try:
        loja = lojasiewicz_exponent(f0, sampler=sampler, verdict=verdict,
                                    assume_isolated=True)
    except NewtonsingError as exc:
        loja_error = str(exc)
    p = newton_polyhedron(f0)
    only_exc = all(exceptional_axes(f0, s) for s in p.facets())
    order, _ = order_and_hessian_rank(f0, sampler)
    return BaseAnalysis(verdict, nu, loja, loja_error, order, only_exc)


def verify_main_theorem(
    spec: DeformationSpec,
    sampler: GenericSampler | None = None,
    base: BaseAnalysis | None = None,
) -> DeformationReport:
    """Full report for one monomial deformation.

    Computes Newton numbers on both sides, the pyramid certificate, the
    exponent on both sides, and the constancy verdict.  When mu-constancy
    fails (or a side is degenerate) the theorem is not applicable and
    main_theorem_holds is None.
    """
    sampler = sampler or DEFAULT_SAMPLER
    f0 = spec.base
    if f0.n != 3:
        raise DomainError("main-theorem verification is for n=3 only")
    if base is None:
        base = analyze_base(f0, sampler)
    ft = deformed_poly(spec)
    warnings: list[str] = []

    verdict_t = check_all(ft, sampler)
    nut = newton_number_stabilized(ft)
    mu_constant = base.nu.value == nut.value
    if nut.value > base.nu.value:
        warnings.append("Newton number increased along a deformation (bug?)")

    certificate = bkw_certificate(spec)

    Lt = None
    if verdict_t.ok:
        try:
            Lt = lojasiewicz_exponent(ft, sampler=sampler, verdict=verdict_t,
                                      assume_isolated=True)
        except NewtonsingError as exc:
            warnings.append(f"deformed exponent not computed: {exc}")
    else:
        warnings.append(f"deformed side not non-degenerate: {verdict_t.status}")
    if base.loja is None and base.loja_error:
        warnings.append(f"base exponent not computed: {base.loja_error}")

    # a boundary with only exceptional facets forces an xy-type vertex and
    # hence order 2, so the segment tag must be checked first to be reachable
    shortcut = SHORTCUT_NONE
    if base.only_exceptional:
        shortcut = SHORTCUT_SEGMENT
    elif base.order == 2:
        shortcut = SHORTCUT_ORDER2

    applicable = (mu_constant and base.verdict.ok and verdict_t.ok
                  and base.loja is not None and Lt is not None)
    holds = (base.loja.value == Lt.value) if applicable else None

    case = None
    if certificate is not None and not certificate.trivial:
        h = next(i for i in range(3) if AXIS_NAMES[i] not in certificate.coordinate_plane)
        others = [i for i in range(3) if i != h]
        case = "b" if any(certificate.apex[i] == 0 for i in others) else "a"

    return DeformationReport(
        alpha=spec.alpha,
        nu0=base.nu,
        nut=nut,
        mu_constant=mu_constant,
        nondegenerate_base=base.verdict.status,
        nondegenerate_deformed=verdict_t.status,
        certificate=certificate,
        L0=base.loja,
        Lt=Lt,
        main_theorem_holds=holds,
        shortcut_used=shortcut,
        case=case,
        warnings=tuple(warnings),
    )
