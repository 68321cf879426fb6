"""Service layer: the analysis operations behind the HTTP endpoints and
the CLI, working on the request/response models.
"""

from __future__ import annotations

from fractions import Fraction

from ..classify import classify_facets
from ..deformations import (DeformationReport, DeformationSpec, PyramidCertificate,
                            analyze_base, enumerate_candidates, verify_main_theorem)
from ..errors import DegenerateInputError, DomainError, NewtonsingError, StabilizationError
from ..lojasiewicz import LojaResult, lojasiewicz_exponent
from ..newton_number import NewtonNumber, newton_number, newton_number_stabilized
from ..nondegeneracy import DEGENERATE, NONDEGENERATE, check_all
from ..parsing import parse_poly
from ..paths import lower_bound
from ..poly import GenericSampler, Poly, is_convenient, newton_polyhedron
from ..polyhedron import AXIS_NAMES, Face, facet_intercepts, m_value
from .schemas import (AnalysisDocument, AnalyzeRequest, CertificateDoc,
                      DeformationReportDoc, DeformRequest, FaceDoc, FacesRequest,
                      FacetDoc, LojaDoc, NewtonNumberDoc, NewtonNumberRequest,
                      PathsDocument, PathsRequest, ScanSummary)


def frac_str(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _face_doc(face: Face) -> FaceDoc:
    return FaceDoc(vertices=[list(v) for v in face.vertices],
                   normal=list(face.support.normal),
                   offset=face.support.offset)


def _loja_doc(result: LojaResult) -> LojaDoc:
    return LojaDoc(value=frac_str(result.value), method=result.method,
                   witness=[_face_doc(w) for w in result.witnesses])


def _newton_doc(nn: NewtonNumber) -> NewtonNumberDoc:
    return NewtonNumberDoc(value=nn.value, stabilized=nn.stabilized,
                           k_used=dict(sorted(nn.k_used.items())))


def _certificate_doc(cert: PyramidCertificate) -> CertificateDoc:
    return CertificateDoc(
        coordinate_plane=cert.coordinate_plane,
        apex=list(cert.apex) if cert.apex is not None else None,
        base_vertices=[[frac_str(c) for c in v] for v in cert.base_vertices],
        difference_region=cert.difference_region,
        volume=frac_str(cert.volume),
        trivial=cert.trivial)


def _facet_docs(f: Poly) -> list[FacetDoc]:
    docs = []
    for cls in classify_facets(f):
        face = cls.face
        docs.append(FacetDoc(
            vertices=[list(v) for v in face.vertices],
            normal=list(face.support.normal),
            offset=face.support.offset,
            intercepts={a: frac_str(v) for a, v in facet_intercepts(face).items()},
            m=frac_str(m_value(face)),
            exceptional_for=sorted(AXIS_NAMES[i] for i in cls.exceptional_for),
            proximate_for=sorted(AXIS_NAMES[i] for i in cls.proximate_for)))
    return docs


def _parse(req) -> Poly:
    f = parse_poly(req.poly, req.n)
    if f.is_zero:
        raise DomainError("the polynomial is zero after cancellation")
    return f


def _skeleton(req, f: Poly) -> dict:
    p = newton_polyhedron(f)
    convenient, missing = is_convenient(f)
    return dict(
        input=req.poly, n=f.n,
        vertices=[list(v) for v in p.vertices],
        facets=_facet_docs(f),
        convenient=convenient,
        missing_axes=sorted(missing),
        nondegenerate=None, newton_number=None, lojasiewicz=None,
        reports=[], warnings=[])


def _newton_number_block(f: Poly, warnings: list[str]):
    convenient, _ = is_convenient(f)
    try:
        nn = newton_number(f) if convenient else newton_number_stabilized(f)
        return _newton_doc(nn)
    except StabilizationError as exc:
        warnings.append(str(exc))
        return None


def analyze(req: AnalyzeRequest) -> AnalysisDocument:
    """Full analysis document: polyhedron, classification, non-degeneracy,
    Newton number, Lojasiewicz exponent."""
    f = _parse(req)
    sampler = GenericSampler.from_seed(req.seed)
    doc = _skeleton(req, f)
    warnings = doc["warnings"]

    verdict = None
    if not req.skip_nondegeneracy:
        verdict = check_all(f, sampler)
        doc["nondegenerate"] = (True if verdict.status == NONDEGENERATE
                                else False if verdict.status == DEGENERATE
                                else None)
        if not verdict.ok:
            warnings.append(verdict.detail or f"non-degeneracy {verdict.status}")
    else:
        warnings.append("non-degeneracy check skipped on request")

    doc["newton_number"] = _newton_number_block(f, warnings)

    try:
        loja = lojasiewicz_exponent(
            f, skip_nondegeneracy=req.skip_nondegeneracy,
            assume_isolated=req.assume_isolated, sampler=sampler, verdict=verdict)
        doc["lojasiewicz"] = _loja_doc(loja)
    except DegenerateInputError as exc:
        warnings.append(f"Lojasiewicz exponent refused: {exc}")
    except NewtonsingError as exc:
        warnings.append(f"Lojasiewicz exponent not computed: {exc}")
    return AnalysisDocument(**doc)


def _report_doc(report: DeformationReport) -> DeformationReportDoc:
    return DeformationReportDoc(
        alpha=list(report.alpha),
        nu0=_newton_doc(report.nu0),
        nut=_newton_doc(report.nut),
        mu_constant=report.mu_constant,
        nondegenerate_base=report.nondegenerate_base,
        nondegenerate_deformed=report.nondegenerate_deformed,
        certificate=_certificate_doc(report.certificate) if report.certificate else None,
        L0=_loja_doc(report.L0) if report.L0 else None,
        Lt=_loja_doc(report.Lt) if report.Lt else None,
        main_theorem_holds=report.main_theorem_holds,
        shortcut_used=report.shortcut_used,
        case=report.case,
        warnings=list(report.warnings))


def deform(req: DeformRequest) -> AnalysisDocument:
    """Deformation report(s): one per alpha, plus a scan summary."""
    f = _parse(req)
    sampler = GenericSampler.from_seed(req.seed)
    doc = _skeleton(req, f)
    base = analyze_base(f, sampler)
    doc["nondegenerate"] = base.verdict.ok if base.verdict.status != "unknown" else None
    doc["newton_number"] = _newton_doc(base.nu)
    if base.loja is not None:
        doc["lojasiewicz"] = _loja_doc(base.loja)
    elif base.loja_error:
        doc["warnings"].append(f"base exponent not computed: {base.loja_error}")

    if req.alpha is not None:
        alphas = [tuple(req.alpha)]
    else:
        alphas = enumerate_candidates(f, req.scan_box)
    reports = [verify_main_theorem(DeformationSpec(f, a), sampler, base)
               for a in alphas]
    doc["reports"] = [_report_doc(r) for r in reports]
    doc["summary"] = ScanSummary(
        candidates=len(reports),
        mu_constant=sum(r.mu_constant for r in reports),
        certificates=sum(r.certificate is not None for r in reports),
        equivalence_mismatches=sum(
            r.mu_constant != (r.certificate is not None) for r in reports),
        l_violations=sum(r.main_theorem_holds is False for r in reports))
    return AnalysisDocument(**doc)


def paths(req: PathsRequest) -> PathsDocument:
    """Best monomial-path lower bound, compared with the formula value."""
    f = _parse(req)
    witness = lower_bound(f, req.max_weight)
    warnings: list[str] = []
    formula = None
    attained = None
    try:
        loja = lojasiewicz_exponent(f, sampler=GenericSampler.from_seed(req.seed))
        formula = frac_str(loja.value)
        attained = loja.value == witness.ratio
    except NewtonsingError as exc:
        warnings.append(f"formula value not available: {exc}")
    return PathsDocument(input=req.poly, n=f.n, weights=list(witness.weights),
                         ratio=frac_str(witness.ratio), formula=formula,
                         attained=attained, warnings=warnings)


def newton_number_document(req: NewtonNumberRequest) -> AnalysisDocument:
    f = _parse(req)
    doc = _skeleton(req, f)
    doc["newton_number"] = _newton_number_block(f, doc["warnings"])
    return AnalysisDocument(**doc)


def faces(req: FacesRequest) -> AnalysisDocument:
    f = _parse(req)
    return AnalysisDocument(**_skeleton(req, f))
