"""Exceptional and proximate face classification."""

import random

import pytest

from newtonsing import (DomainError, classify_facets, exceptional_axes,
                        exceptional_faces, is_exceptional, is_proximate,
                        newton_polyhedron, parse_poly, proximate_faces)
from newtonsing.polyhedron import AXIS_NAMES, facet_intercepts

from conftest import random_poly_3d


def names(axes):
    return {AXIS_NAMES[i] for i in axes}


def test_unique_face_of_xz_yz_y3():
    """The worked example: exceptional, x- and y-proximate, not z-proximate."""
    f = parse_poly("x*z+y*z+y^3", 3)
    face = newton_polyhedron(f).facets()[0]
    assert is_exceptional(f, face, 2)          # z
    assert not is_exceptional(f, face, 0)
    assert not is_exceptional(f, face, 1)
    assert is_proximate(f, face, 0)
    assert is_proximate(f, face, 1)
    assert not is_proximate(f, face, 2)
    cls, = classify_facets(f)
    assert names(cls.exceptional_for) == {"z"}
    assert names(cls.proximate_for) == {"x", "y"}


def test_brieskorn_faces_never_exceptional():
    for a, b, c in [(2, 2, 2), (2, 3, 4), (5, 3, 2)]:
        f = parse_poly(f"x^{a}+y^{b}+z^{c}", 3)
        face = newton_polyhedron(f).facets()[0]
        assert exceptional_axes(f, face) == frozenset()


def test_exceptional_faces_2d():
    assert exceptional_faces(parse_poly("x^2+y^3", 2)) == set()
    f = parse_poly("x^2+x*y", 2)
    exc = exceptional_faces(f)
    assert len(exc) == 1
    assert set(next(iter(exc)).vertices) == {(2, 0), (1, 1)}


def test_proximate_simplex_all_axes():
    f = parse_poly("x^2+y^2+z^2", 3)
    face = newton_polyhedron(f).facets()[0]
    for axis in range(3):
        assert is_proximate(f, face, axis)
        assert proximate_faces(f, axis) == [face]


def test_proximate_d4_family():
    f = parse_poly("x^3+x*y^2+z^2+y^5", 3)
    p = newton_polyhedron(f)
    face1 = next(s for s in p.facets()
                 if set(s.vertices) == {(3, 0, 0), (1, 2, 0), (0, 0, 2)})
    assert is_proximate(f, face1, 1)  # vertex (1,2,0) at distance 1 from y-axis
    prox_x = proximate_faces(f, 0)
    assert prox_x == [face1]
    assert facet_intercepts(face1)["x"] == 3


def test_proximate_none_for_z_on_exceptional_boundary():
    f = parse_poly("x*z+y*z+y^3", 3)
    assert proximate_faces(f, 2) == []


def test_proximate_requires_n3():
    f = parse_poly("x^2+y^3", 2)
    face = newton_polyhedron(f).facets()[0]
    with pytest.raises(DomainError):
        is_proximate(f, face, 0)


def test_exceptional_requires_facet():
    f = parse_poly("x^2+y^2+z^2", 3)
    vertex_face = newton_polyhedron(f).compact_faces(0)[0]
    with pytest.raises(DomainError):
        is_exceptional(f, vertex_face, 0)


def _permute_poly(f, perm):
    from newtonsing import Poly
    return Poly.make(f.n, {
        tuple(t.exponent[perm[i]] for i in range(f.n)): t.coefficient
        for t in f.terms})


def test_permutation_equivariance():
    """Relabeling variables permutes the classification accordingly."""
    rng = random.Random(5)
    for _ in range(20):
        f = random_poly_3d(rng)
        if f.is_zero:
            continue
        for perm in [(1, 0, 2), (2, 1, 0), (1, 2, 0)]:
            g = _permute_poly(f, perm)
            cls_f = {frozenset(c.face.vertices): c for c in classify_facets(f)}
            cls_g = {frozenset(c.face.vertices): c for c in classify_facets(g)}
            assert len(cls_f) == len(cls_g)
            for verts, cf in cls_f.items():
                gverts = frozenset(tuple(v[perm[i]] for i in range(3))
                                   for v in verts)
                cg = cls_g[gverts]
                inv = {perm[i]: i for i in range(3)}
                assert {inv[a] for a in cf.exceptional_for} == set(cg.exceptional_for)
                assert {inv[a] for a in cf.proximate_for} == set(cg.proximate_for)


def test_proximate_intercept_invariants():
    """Proximate faces of one axis share the intercept, and it is maximal
    among non-exceptional facets for that axis; non-empty when some facet
    is non-exceptional."""
    rng = random.Random(17)
    checked = 0
    for _ in range(40):
        f = random_poly_3d(rng)
        if f.is_zero:
            continue
        p = newton_polyhedron(f)
        facets = p.facets()
        if not facets:
            continue
        plain_exists = any(not exceptional_axes(f, s) for s in facets)
        for axis in range(3):
            prox = proximate_faces(f, axis)
            if plain_exists:
                assert prox, (str(f), axis)
                for s in prox:
                    assert not is_exceptional(f, s, axis)
            if not prox:
                continue
            name = AXIS_NAMES[axis]
            values = {facet_intercepts(s)[name] for s in prox}
            assert len(values) == 1
            others = [facet_intercepts(s)[name] for s in facets
                      if not is_exceptional(f, s, axis)]
            assert values.pop() == max(others)
            checked += 1
    assert checked > 30
