"""Newton-polyhedron invariants of isolated hypersurface singularities
in 2 and 3 variables: Lojasiewicz exponent, Newton number, Kushnirenko
non-degeneracy, face classification, and verification that the exponent
is constant in non-degenerate mu-constant monomial deformations.
"""

from .classify import (FaceClassification, classify_facets, exceptional_axes,
                       exceptional_faces, is_exceptional, is_proximate,
                       proximate_faces)
from .deformations import (BaseAnalysis, DeformationReport, DeformationSpec,
                           PyramidCertificate, analyze_base, bkw_certificate,
                           deformed_poly, enumerate_candidates, is_mu_constant,
                           verify_main_theorem)
from .errors import (DegenerateInputError, DomainError, InternalError,
                     NewtonsingError, ParseError, StabilizationError)
from .lojasiewicz import (LojaResult, hessian_shortcut, lojasiewicz_exponent,
                          lojasiewicz_via_proximate)
from .newton_number import NewtonNumber, newton_number, newton_number_stabilized
from .nondegeneracy import (FaceChart, NondegeneracyVerdict, check_all,
                            check_face, face_chart)
from .parsing import parse_poly
from .paths import PathWitness, lower_bound, path_ratio
from .poly import (Coef, GenericSampler, Poly, Term, face_polynomial, gradient,
                   is_convenient, newton_polyhedron, order_and_hessian_rank,
                   stabilize, support)
from .polyhedron import (Face, NewtonPolyhedron, SupportForm,
                         build_newton_polyhedron, compact_faces,
                         facet_intercepts, m_value, under_volume)

__version__ = "0.1.0"

__all__ = [
    "BaseAnalysis", "Coef", "DeformationReport", "DeformationSpec",
    "DegenerateInputError", "DomainError", "Face", "FaceChart",
    "FaceClassification", "GenericSampler", "InternalError", "LojaResult",
    "NewtonNumber", "NewtonPolyhedron", "NewtonsingError",
    "NondegeneracyVerdict", "ParseError", "PathWitness", "Poly",
    "PyramidCertificate", "StabilizationError", "SupportForm", "Term",
    "analyze_base", "bkw_certificate", "build_newton_polyhedron",
    "check_all", "check_face", "classify_facets", "compact_faces",
    "deformed_poly", "enumerate_candidates", "exceptional_axes",
    "exceptional_faces", "face_chart", "face_polynomial", "facet_intercepts",
    "gradient", "hessian_shortcut", "is_convenient", "is_exceptional",
    "is_mu_constant", "is_proximate", "lojasiewicz_exponent",
    "lojasiewicz_via_proximate", "lower_bound", "m_value", "newton_number",
    "newton_number_stabilized", "newton_polyhedron", "order_and_hessian_rank",
    "parse_poly", "path_ratio", "proximate_faces", "stabilize", "support",
    "under_volume", "verify_main_theorem",
]
