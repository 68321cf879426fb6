"""Shared fixtures: corpus inputs and random-support generators."""

from __future__ import annotations

import random

import pytest

from newtonsing import GenericSampler, parse_poly

# Inputs used across the suite.  Triples (text, n, generic?) of the worked
# examples plus the deformation-scan corpus.
CORPUS = [
    ("x^2+y^3", 2),
    ("x^2+t*y^2+y^3", 2),
    ("x*y^5+x^8", 2),
    ("x*y^5+t*x^2+x^8", 2),
    ("x^2+y^2+z^2", 3),
    ("x^2+y^2+z^3", 3),
    ("x^3+y^3+z^3", 3),
    ("x^2+y^3+z^7", 3),
    ("x^3+y^4+z^5", 3),
    ("x^3+x*y^2+z^2", 3),
    ("x^3+x*y^2+z^2+y^5", 3),
    ("x*z+y*z+y^3", 3),
]

SCAN_CORPUS = ["x^3+x*y^2+z^2", "x^2+y^3+z^7", "x^3+y^4+z^5", "x*z+y*z+y^3"]


@pytest.fixture(scope="session")
def sampler():
    return GenericSampler.from_seed(12345)


def corpus_polys():
    return [(text, parse_poly(text, n)) for text, n in CORPUS]


def random_support_3d(rng: random.Random, max_exp: int = 5, extra: int = 3):
    """Random convenient 3-variable support: axis points plus a few more."""
    points = {
        (rng.randint(2, max_exp), 0, 0),
        (0, rng.randint(2, max_exp), 0),
        (0, 0, rng.randint(2, max_exp)),
    }
    for _ in range(rng.randint(0, extra)):
        p = tuple(rng.randint(0, max_exp) for _ in range(3))
        if sum(p) >= 2:
            points.add(p)
    return points


def random_poly_3d(rng: random.Random, max_exp: int = 5, extra: int = 3):
    from newtonsing import Poly

    pts = random_support_3d(rng, max_exp, extra)
    return Poly.make(3, {p: rng.choice([1, 2, 3, -1, 5]) for p in pts})
