"""Command-line front end (thin client over the service handlers).

Commands: analyze | deform | paths | newton-number | faces.

Exit codes: 0 success; 1 usage or parse error; 2 precondition failure
(for example degenerate input without --skip-nondegeneracy); 3 a
mu-constant non-degenerate deformation violated exponent constancy
(theorem violation: indicates a bug somewhere, never expected).
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import DomainError, NewtonsingError, ParseError
from .service import handlers
from .service.schemas import (AnalysisDocument, AnalyzeRequest, DeformRequest,
                              FacesRequest, NewtonNumberRequest, PathsDocument,
                              PathsRequest)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="newtonsing", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_choices=(2, 3)):
        p.add_argument("--poly", required=True, help="polynomial germ, e.g. 'x^2+y^3'")
        p.add_argument("--n", type=int, choices=n_choices,
                       default=n_choices[-1] if len(n_choices) == 1 else None,
                       required=len(n_choices) > 1, help="number of variables")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for generic-parameter sampling")

    p = sub.add_parser("analyze", help="full invariant analysis")
    common(p)
    p.add_argument("--assume-isolated", action="store_true")
    p.add_argument("--skip-nondegeneracy", action="store_true")

    p = sub.add_parser("deform", help="monomial deformation reports")
    common(p, n_choices=(3,))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha", help="deformed exponent 'a,b,c'")
    group.add_argument("--scan-box", type=int,
                       help="scan all candidates in [0,B]^3 outside the polyhedron")

    p = sub.add_parser("paths", help="monomial-path lower bound")
    common(p)
    p.add_argument("--max-weight", type=int, default=8)

    p = sub.add_parser("newton-number", help="Newton number (stabilized if needed)")
    common(p)

    p = sub.add_parser("faces", help="polyhedron and facet classification")
    common(p)
    return parser


def _dump(document) -> str:
    return json.dumps(document.model_dump(), sort_keys=True, indent=2)


def _render_analysis(doc: AnalysisDocument) -> str:
    lines = [f"input: {doc.input}   (n={doc.n})"]
    lines.append("vertices: " + " ".join(str(tuple(v)) for v in doc.vertices))
    conv = "yes" if doc.convenient else (
        "no  (missing axes: " + ", ".join(doc.missing_axes) + ")")
    lines.append(f"convenient: {conv}")
    if doc.nondegenerate is not None:
        lines.append(f"nondegenerate: {'yes' if doc.nondegenerate else 'NO'}")
    for facet in doc.facets:
        eq = "+".join(f"{c}{a}" for c, a in zip(facet.normal, "xyz") if c)
        stats = " ".join(f"{a}={v}" for a, v in sorted(facet.intercepts.items()))
        flags = ""
        if facet.exceptional_for:
            flags += "  exceptional{" + ",".join(facet.exceptional_for) + "}"
        if facet.proximate_for:
            flags += "  proximate{" + ",".join(facet.proximate_for) + "}"
        lines.append(f"facet {eq}={facet.offset}: intercepts {stats}  "
                     f"m={facet.m}{flags}")
    if doc.newton_number is not None:
        nn = doc.newton_number
        extra = ""
        if nn.stabilized:
            ks = ",".join(f"{a}:{k}" for a, k in nn.k_used.items())
            extra = f"  (stabilized, k {ks})"
        lines.append(f"newton number: {nn.value}{extra}")
    if doc.lojasiewicz is not None:
        lj = doc.lojasiewicz
        wit = ""
        if lj.witness:
            wit = "   witness " + "; ".join(
                "-".join(str(tuple(v)) for v in w.vertices) for w in lj.witness)
        lines.append(f"lojasiewicz exponent: {lj.value}   [{lj.method}]{wit}")
    for w in doc.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _render_deform(doc: AnalysisDocument) -> str:
    lines = [f"input: {doc.input}   (n={doc.n})"]
    for rep in doc.reports:
        bits = [f"alpha={tuple(rep.alpha)}",
                f"nu {rep.nu0.value} -> {rep.nut.value}",
                f"mu-constant {'yes' if rep.mu_constant else 'no'}"]
        bits.append("certificate " + ("yes" if rep.certificate and not
                                      rep.certificate.trivial else
                                      ("trivial" if rep.certificate else "none")))
        if rep.L0 and rep.Lt:
            bits.append(f"L0={rep.L0.value} Lt={rep.Lt.value}")
        if rep.main_theorem_holds is not None:
            bits.append("holds" if rep.main_theorem_holds else "VIOLATED")
        if rep.shortcut_used != "None":
            bits.append(f"shortcut {rep.shortcut_used}")
        lines.append("  ".join(bits))
        for w in rep.warnings:
            lines.append(f"  warning: {w}")
    if doc.summary is not None:
        s = doc.summary
        lines.append(f"summary: {s.candidates} candidates, {s.mu_constant} "
                     f"mu-constant, {s.certificates} certificates, "
                     f"{s.equivalence_mismatches} equivalence mismatches, "
                     f"{s.l_violations} exponent violations")
    for w in doc.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _render_paths(doc: PathsDocument) -> str:
    lines = [f"input: {doc.input}   (n={doc.n})",
             f"best weight vector: {tuple(doc.weights)}   ratio: {doc.ratio}"]
    if doc.formula is not None:
        verdict = "attained" if doc.attained else "strict lower bound"
        lines.append(f"formula value: {doc.formula}   ({verdict})")
    for w in doc.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _parse_alpha(text: str, n: int):
    try:
        alpha = [int(p) for p in text.split(",")]
    except ValueError:
        raise _UsageError(f"bad --alpha {text!r}: expected integers 'a,b,c'")
    if len(alpha) != n:
        raise _UsageError(f"--alpha needs {n} components")
    return alpha


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.command == "analyze":
            doc = handlers.analyze(AnalyzeRequest(
                poly=args.poly, n=args.n, seed=args.seed,
                assume_isolated=args.assume_isolated,
                skip_nondegeneracy=args.skip_nondegeneracy))
            print(_dump(doc) if args.json else _render_analysis(doc))
            return 0 if doc.lojasiewicz is not None else 2
        if args.command == "deform":
            alpha = _parse_alpha(args.alpha, args.n) if args.alpha else None
            doc = handlers.deform(DeformRequest(
                poly=args.poly, n=args.n, alpha=alpha,
                scan_box=args.scan_box, seed=args.seed))
            print(_dump(doc) if args.json else _render_deform(doc))
            return 3 if doc.summary and doc.summary.l_violations else 0
        if args.command == "paths":
            pdoc = handlers.paths(PathsRequest(
                poly=args.poly, n=args.n, max_weight=args.max_weight,
                seed=args.seed))
            print(_dump(pdoc) if args.json else _render_paths(pdoc))
            return 0
        if args.command == "newton-number":
            doc = handlers.newton_number_document(NewtonNumberRequest(
                poly=args.poly, n=args.n))
            if args.json:
                print(_dump(doc))
            elif doc.newton_number is not None:
                print(doc.newton_number.value)
            else:
                for w in doc.warnings:
                    print(f"error: {w}", file=sys.stderr)
            return 0 if doc.newton_number is not None else 2
        if args.command == "faces":
            doc = handlers.faces(FacesRequest(poly=args.poly, n=args.n))
            print(_dump(doc) if args.json else _render_analysis(doc))
            return 0
        raise _UsageError(f"unknown command {args.command}")
    except (_UsageError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NewtonsingError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
