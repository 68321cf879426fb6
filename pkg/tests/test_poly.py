"""Polynomial germs: parsing, printing, calculus, faces, stabilization."""

import warnings as _warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newtonsing import (Coef, DomainError, ParseError, Poly, face_polynomial,
                        gradient, is_convenient, newton_polyhedron,
                        order_and_hessian_rank, parse_poly, stabilize, support)
from newtonsing.poly import GenericSampler


def P(text, n=2):
    return parse_poly(text, n)


# --- parsing -----------------------------------------------------------------

def test_parse_basic():
    f = P("x^2 + y^3")
    assert {t.exponent: t.coefficient for t in f.terms} == {
        (2, 0): Coef.of(1), (0, 3): Coef.of(1)}


def test_parse_generic():
    f = P("x*y^5 + t*x^2 + x^8")
    d = {t.exponent: t.coefficient for t in f.terms}
    assert d[(1, 5)] == Coef.of(1)
    assert d[(2, 0)] == Coef.generic()
    assert d[(8, 0)] == Coef.of(1)


def test_parse_cancellation():
    f = P("x^2 + 2*x*y + y^2 - x^2")
    assert {t.exponent: t.coefficient for t in f.terms} == {
        (1, 1): Coef.of(2), (0, 2): Coef.of(1)}


def test_parse_rational_and_aliases():
    f = parse_poly("1/2*z1^2 + z2*z3", 3)
    assert f.coefficient((2, 0, 0)) == Coef.of(Fraction(1, 2))
    assert f.coefficient((0, 1, 1)) == Coef.of(1)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x^2 + w^3", 2)
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse_poly("x^2 + z^2", 2)   # z needs n=3
    assert err.value.position == 6
    with pytest.raises(ParseError):
        parse_poly("x^-2", 2)
    with pytest.raises(ParseError):
        parse_poly("x^2 + + y", 2)
    with pytest.raises(ParseError):
        parse_poly("x^0", 2)          # constant germ term
    with pytest.raises(ParseError):
        parse_poly("", 2)
    with pytest.raises(ParseError):
        parse_poly("3/0*x", 2)


def test_parse_zero_after_cancellation():
    assert P("x - x").is_zero


_coeff = st.one_of(st.integers(-4, 4).filter(bool), st.just("t"))
_exps2 = st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda e: sum(e) > 0)


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(_exps2, _coeff, min_size=1, max_size=6))
def test_print_parse_roundtrip(coeffs):
    f = Poly.make(2, coeffs)
    if f.is_zero:
        return
    assert parse_poly(str(f), 2) == f


# --- calculus ----------------------------------------------------------------

def test_support_examples():
    assert support(P("x^2+y^3")) == {(2, 0), (0, 3)}
    assert support(parse_poly("x*z+y*z+y^3", 3)) == {(1, 0, 1), (0, 1, 1), (0, 3, 0)}
    assert support(Poly.zero(2)) == set()


def test_gradient_examples():
    assert [str(g) for g in gradient(P("x^2+y^3"))] == ["2*x", "3*y^2"]
    gx, gy, gz = gradient(parse_poly("x*z+y*z+y^3", 3))
    assert str(gx) == "z"
    assert str(gy) == "z + 3*y^2"
    assert str(gz) == "y + x"  # canonical order: degree, then exponent
    gx, gy = gradient(P("x*y^5+t*x^2+x^8"))
    assert support(gx) == {(0, 5), (1, 0), (7, 0)}
    assert gx.coefficient((1, 0)) == Coef.generic(2)
    assert str(gy) == "5*x*y^4"


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(_exps2, _coeff, min_size=1, max_size=5),
       st.dictionaries(_exps2, _coeff, min_size=1, max_size=5))
def test_gradient_linearity(c1, c2):
    f, g = Poly.make(2, c1), Poly.make(2, c2)
    for i in range(2):
        assert (f + g).diff(i) == f.diff(i) + g.diff(i)


def test_face_polynomial_examples():
    f = P("x^2+t*y^2+y^3")
    p = newton_polyhedron(f)
    edge = p.facets()[0]
    assert set(edge.vertices) == {(2, 0), (0, 2)}
    fs = face_polynomial(f, edge)
    assert support(fs) == {(2, 0), (0, 2)}

    g = parse_poly("x^2+y^2+z^2+x^3", 3)
    tri = newton_polyhedron(g).facets()[0]
    assert support(face_polynomial(g, tri)) == {(2, 0, 0), (0, 2, 0), (0, 0, 2)}

    h = parse_poly("x*z+y*z+y^3", 3)
    face = newton_polyhedron(h).facets()[0]
    assert face_polynomial(h, face) == h


def test_face_polynomial_foreign_face_rejected():
    f = P("x^2+y^3")
    g = parse_poly("x^5+y^7", 2)
    face = newton_polyhedron(g).facets()[0]
    with pytest.raises(DomainError):
        face_polynomial(f, face)


def test_face_polynomial_support_is_intersection():
    f = parse_poly("x^3+x*y^2+z^2+y^5+x^2*y^2*z^2", 3)
    p = newton_polyhedron(f)
    for k in range(3):
        for face in p.compact_faces(k):
            fs = face_polynomial(f, face)
            form = face.support
            expected = {e for e in support(f) if form.is_tight(e)}
            assert support(fs) == expected


def test_euler_relation_on_faces():
    """w_1 z_1 d_1(f_S) + ... = d * f_S for the face's witness form."""
    for text, n in [("x^2+y^3", 2), ("x*z+y*z+y^3", 3), ("x^3+x*y^2+z^2+y^5", 3),
                    ("x^2+t*y^2+y^3", 2)]:
        f = parse_poly(text, n)
        p = newton_polyhedron(f)
        for k in range(n):
            for face in p.compact_faces(k):
                fs = face_polynomial(f, face)
                w, d = face.support.normal, face.support.offset
                total = Poly.zero(n)
                for i in range(n):
                    total = total + fs.diff(i).mul_monomial(
                        tuple(1 if j == i else 0 for j in range(n))).scale(w[i])
                assert total == fs.scale(d)


def test_is_convenient():
    assert is_convenient(P("x^2+y^3")) == (True, set())
    assert is_convenient(P("x*y^5+x^8")) == (False, {"y"})
    assert is_convenient(parse_poly("x^3+x*y^2+z^2", 3)) == (False, {"y"})


def test_order_and_hessian_rank():
    assert order_and_hessian_rank(parse_poly("x^2+y^2+z^2", 3)) == (2, 3)
    assert order_and_hessian_rank(parse_poly("x^3+x*y^2+z^2", 3)) == (2, 1)
    assert order_and_hessian_rank(P("x^2+t*x*y")) == (2, 2)
    assert order_and_hessian_rank(parse_poly("x*z+y*z+y^3", 3)) == (2, 2)
    assert order_and_hessian_rank(parse_poly("x^3+y^4+z^5", 3))[0] == 3


def test_hessian_rank_sampler_stability(sampler):
    for seed in (0, 1, 99):
        s = GenericSampler.from_seed(seed)
        assert order_and_hessian_rank(P("x^2+t*x*y"), s) == (2, 2)


def test_stabilize():
    f = parse_poly("x^3+x*y^2+z^2", 3)
    g = stabilize(f, {"y": 5})
    assert support(g) == support(f) | {(0, 5, 0)}
    assert stabilize(P("x^2+y^3"), {}) == P("x^2+y^3")
    h = stabilize(P("x*y^5+x^8"), {"y": 40})
    assert (0, 40) in support(h)


def test_stabilize_non_missing_axis_warns():
    f = P("x^2+y^3")
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        g = stabilize(f, {"x": 9})
    assert any("absorbed" in str(w.message) for w in caught)
    assert g == f


def test_stabilize_preserves_old_compact_faces():
    f = parse_poly("x*z+y*z+y^3", 3)
    p = newton_polyhedron(f)
    big = stabilize(f, {"x": 64, "z": 64})
    q = newton_polyhedron(big)
    old = {(face.dim, face.vertices) for k in range(3) for face in p.compact_faces(k)}
    new = {(face.dim, face.vertices) for k in range(3) for face in q.compact_faces(k)}
    assert old <= new
