"""Kushnirenko non-degeneracy: charts, verdicts, invariance."""

import random
from fractions import Fraction

import pytest

from newtonsing import (DomainError, GenericSampler, Poly, check_all, check_face,
                        face_chart, face_polynomial, newton_polyhedron, parse_poly)
from newtonsing.nondegeneracy import DEGENERATE, NONDEGENERATE

from conftest import random_poly_3d


def test_chart_examples():
    f = parse_poly("x^2+2*x*y+y^2", 2)
    edge = newton_polyhedron(f).facets()[0]
    ch = face_chart(f, edge)
    assert str(ch.reduced) == "1 + 2*x + x^2"

    g = parse_poly("x^2+y^3", 2)
    ch = face_chart(g, newton_polyhedron(g).facets()[0])
    assert str(ch.reduced) == "1 + x"
    assert abs(ch.directions[0][0] * 3 + ch.directions[0][1] * 2) == 0  # along the edge

    h = parse_poly("x^2+y^2+z^2", 3)
    ch = face_chart(h, newton_polyhedron(h).facets()[0])
    assert len(ch.directions) == 2
    assert len(ch.reduced.terms) == 3


def test_chart_rejects_vertices():
    f = parse_poly("x^2+y^3", 2)
    v = newton_polyhedron(f).compact_faces(0)[0]
    with pytest.raises(DomainError, match="vertex"):
        face_chart(f, v)


def test_vertices_never_degenerate():
    f = parse_poly("x^2+2*x*y+y^2", 2)
    for v in newton_polyhedron(f).compact_faces(0):
        assert check_face(f, v).ok


def test_degenerate_square():
    f = parse_poly("x^2+2*x*y+y^2", 2)
    verdict = check_all(f)
    assert verdict.status == DEGENERATE
    assert set(verdict.witness.vertices) == {(2, 0), (0, 2)}
    assert verdict.chart_point == (Fraction(-1),)


def test_degenerate_square_embedded():
    f = parse_poly("x^2+2*x*y+y^2+z^2", 3)
    verdict = check_all(f)
    assert verdict.status == DEGENERATE
    assert set(verdict.witness.vertices) == {(2, 0, 0), (0, 2, 0)}


def test_nondegenerate_examples():
    for text, n in [("x^2+y^3", 2), ("x^2+t*y^2+y^3", 2), ("x*z+y*z+y^3", 3),
                    ("x^2+y^2+z^2", 3), ("x^5+y^3", 2), ("x*y^5+t*x^2+x^8", 2)]:
        assert check_all(parse_poly(text, n)).status == NONDEGENERATE, text


def test_brieskorn_nondegenerate():
    for a, b, c in [(2, 2, 2), (2, 3, 7), (4, 4, 4), (6, 5, 3)]:
        assert check_all(parse_poly(f"x^{a}+y^{b}+z^{c}", 3)).ok


def test_degenerate_2face():
    # (x+y+z)^2 vanishes with its gradient on a torus plane
    f = parse_poly("x^2+y^2+z^2+2*x*y+2*x*z+2*y*z", 3)
    assert check_all(f).status == DEGENERATE


def test_degenerate_2face_with_squarefree_edges():
    # the quadratic form x^2+y^2+z^2-xy-xz-yz has every edge polynomial
    # squarefree (discriminant -3) but a rank-2 matrix with kernel (1,1,1),
    # so the gradient of the 2-face polynomial vanishes on the torus
    f = parse_poly("x^2+y^2+z^2-x*y-x*z-y*z", 3)
    verdict = check_all(f)
    assert verdict.status == DEGENERATE
    assert verdict.witness.dim == 2
    # and indeed every edge alone is fine
    p = newton_polyhedron(f)
    for edge in p.compact_faces(1):
        assert check_face(f, edge).ok


def test_generic_coefficient_two_sample_agreement():
    f = parse_poly("x^2+t*y^2+y^3", 2)
    for seed in (0, 1, 2, 3):
        assert check_all(f, GenericSampler.from_seed(seed)).ok


def test_generic_disagreement_is_unknown():
    """x^2+2xy+t*y^2 is a perfect square exactly at the t=1 sample, so the
    two-sample policy cannot decide and reports Unknown."""
    f = parse_poly("x^2+2*x*y+t*y^2", 2)
    from newtonsing.nondegeneracy import UNKNOWN

    verdict = check_all(f)
    assert verdict.status == UNKNOWN
    assert "samples" in verdict.detail


def test_unknown_downgrades_aggregate_without_degenerate_witness():
    f = parse_poly("x^2+2*x*y+t*y^2+z^2", 3)
    from newtonsing.nondegeneracy import UNKNOWN

    assert check_all(f).status == UNKNOWN


def test_unknown_on_deformations_special_at_t_one():
    """Deformations of xz+yz+y^3 whose face polynomial factors exactly at
    t=1 (e.g. yz+xz+y^3+t*x*y^2 = (x+y)(z+y^2) there) must come out
    Unknown under the two-sample policy, for every seed."""
    from newtonsing.nondegeneracy import UNKNOWN

    for alpha in [(1, 2, 0), (3, 0, 0)]:
        f = parse_poly("x*z+y*z+y^3", 3) + Poly.make(3, {alpha: "t"})
        for seed in (0, 7, 99):
            assert check_all(f, GenericSampler.from_seed(seed)).status == UNKNOWN


def test_chart_invariance_under_base_choice():
    """The verdict does not depend on the chart: permuting variables
    changes base point and directions but never the verdict."""
    rng = random.Random(23)
    for _ in range(15):
        f = random_poly_3d(rng, max_exp=4, extra=2)
        if f.is_zero:
            continue
        verdict = check_all(f).status
        g = Poly.make(3, {(e[2], e[0], e[1]): t.coefficient
                          for t in f.terms for e in [t.exponent]})
        assert check_all(g).status == verdict


def test_edge_verdicts_match_numeric_roots():
    """Advisory float cross-check on numerically benign corpus edges: the
    chart polynomial has a multiple root off 0 iff its derivative has a
    numeric root s0 != 0 with |g(s0)| below tolerance."""
    import sympy as sp

    cases = [("x^2+2*x*y+y^2", 2, True), ("x^2+y^3", 2, False),
             ("x^4+3*x^2*y^2+y^4", 2, False),
             ("x^4+2*x^2*y^2+y^4", 2, True),
             ("x^3-3*x^2*y+3*x*y^2-y^3", 2, True)]
    for text, n, expect_degenerate in cases:
        f = parse_poly(text, n)
        p = newton_polyhedron(f)
        results = []
        for edge in p.compact_faces(1):
            ch = face_chart(f, edge)
            s = sp.Symbol("s")
            expr = sp.Add(*[
                sp.Rational(next(c for _, c in t.coefficient.parts))
                * s ** t.exponent[0] for t in ch.reduced.terms])
            g = sp.Poly(expr, s)
            multiple = False
            if g.degree() >= 2:
                for root in sp.Poly(expr.diff(s), s).nroots(n=30, maxsteps=200):
                    r = complex(root)
                    if abs(r) > 1e-9 and abs(complex(expr.subs(s, root))) < 1e-9:
                        multiple = True
            results.append((check_face(f, edge).status == DEGENERATE, multiple))
        assert all(exact == approx for exact, approx in results)
        assert any(exact for exact, _ in results) == expect_degenerate


def test_euler_consistency_of_witness_points():
    """At a rational chart witness, the chart polynomial vanishes
    (equivalent to f_S vanishing on the corresponding torus point)."""
    for text, n in [("x^2+2*x*y+y^2", 2), ("x^2+2*x*y+y^2+z^2", 3),
                    ("x^4+2*x^2*y^2+y^4", 2)]:
        f = parse_poly(text, n)
        verdict = check_all(f)
        assert verdict.status == DEGENERATE
        if verdict.chart_point is None:
            continue
        ch = face_chart(f, verdict.witness)
        value = Fraction(0)
        for t in ch.reduced.terms:
            c = next(c for _, c in t.coefficient.parts)
            term = Fraction(c)
            for var, e in zip(verdict.chart_point, t.exponent):
                term *= Fraction(var) ** e
            value += term
        assert value == 0


def test_random_brieskorn_plus_interior_stays_nondegenerate():
    """Points inside the hull do not affect verdicts (face polynomials
    see only boundary support)."""
    rng = random.Random(31)
    for _ in range(10):
        a, b, c = (rng.randint(2, 5) for _ in range(3))
        f = parse_poly(f"x^{a}+y^{b}+z^{c}", 3)
        g = f + Poly.make(3, {(a, b, c): 17})
        assert check_all(g).ok
