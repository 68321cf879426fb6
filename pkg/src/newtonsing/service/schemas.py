"""Request/response models of the analysis service.

Rationals are serialized as exact strings "p/q" (or "p" when q=1);
nothing in a document is ever a float.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class AnalyzeRequest(BaseModel):
    poly: str
    n: Literal[2, 3]
    assume_isolated: bool = False
    skip_nondegeneracy: bool = False
    seed: Optional[int] = None


class DeformRequest(BaseModel):
    poly: str
    n: Literal[3] = 3
    alpha: Optional[list[int]] = None
    scan_box: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _exactly_one_mode(self):
        if (self.alpha is None) == (self.scan_box is None):
            raise ValueError("provide exactly one of alpha and scan_box")
        return self


class PathsRequest(BaseModel):
    poly: str
    n: Literal[2, 3]
    max_weight: int = Field(default=8, ge=1)
    seed: Optional[int] = None


class NewtonNumberRequest(BaseModel):
    poly: str
    n: Literal[2, 3]


class FacesRequest(BaseModel):
    poly: str
    n: Literal[2, 3]


class FaceDoc(BaseModel):
    vertices: list[list[int]]
    normal: list[int]
    offset: int


class FacetDoc(BaseModel):
    vertices: list[list[int]]
    normal: list[int]
    offset: int
    intercepts: dict[str, str]
    m: str
    exceptional_for: list[str]
    proximate_for: list[str]


class NewtonNumberDoc(BaseModel):
    value: int
    stabilized: bool
    k_used: dict[str, int]


class LojaDoc(BaseModel):
    value: str
    method: str
    witness: list[FaceDoc]


class CertificateDoc(BaseModel):
    coordinate_plane: Optional[str]
    apex: Optional[list[int]]
    base_vertices: list[list[str]]
    difference_region: str
    volume: str
    trivial: bool


class DeformationReportDoc(BaseModel):
    alpha: list[int]
    nu0: NewtonNumberDoc
    nut: NewtonNumberDoc
    mu_constant: bool
    nondegenerate_base: str
    nondegenerate_deformed: str
    certificate: Optional[CertificateDoc]
    L0: Optional[LojaDoc]
    Lt: Optional[LojaDoc]
    main_theorem_holds: Optional[bool]
    shortcut_used: str
    case: Optional[str]
    warnings: list[str]


class ScanSummary(BaseModel):
    candidates: int
    mu_constant: int
    certificates: int
    equivalence_mismatches: int
    l_violations: int


class AnalysisDocument(BaseModel):
    """The one document shape every command emits (unused parts stay empty)."""

    input: str
    n: int
    vertices: list[list[int]]
    facets: list[FacetDoc]
    convenient: bool
    missing_axes: list[str]
    nondegenerate: Optional[bool]
    newton_number: Optional[NewtonNumberDoc]
    lojasiewicz: Optional[LojaDoc]
    reports: list[DeformationReportDoc]
    summary: Optional[ScanSummary] = None
    warnings: list[str]


class PathsDocument(BaseModel):
    input: str
    n: int
    weights: list[int]
    ratio: str
    formula: Optional[str]
    attained: Optional[bool]
    warnings: list[str]
