"""Monomial-path lower bounds for the Lojasiewicz exponent.

Along a monomial path z_i = c_i * tau^{w_i} with generic nonzero c_i, the
order of each gradient component is at least the symbolic minimum of
<w, nu> over the support of that component (coefficient cancellation can
only raise it), so

    min_i min_{nu in supp(df/dz_i)} <w, nu>  /  min_i w_i

is a sound lower bound for the exponent for every positive weight
vector w.  The bound is maximized over primitive weight vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._exact import dot
from .errors import DomainError
from .poly import Poly, gradient


@dataclass(frozen=True)
class PathWitness:
    weights: tuple[int, ...]
    ratio: Fraction


def path_ratio(f: Poly, weights) -> Fraction:
    """Lower bound for the exponent from one weight vector."""
    weights = tuple(int(w) for w in weights)
    if len(weights) != f.n or any(w < 1 for w in weights):
        raise DomainError(f"weights {weights} must be {f.n} positive integers")
    orders = []
    for g in gradient(f):
        if g.is_zero:
            continue  # that component vanishes identically: infinite order
        orders.append(min(dot(weights, t.exponent) for t in g.terms))
    if not orders:
        raise DomainError("gradient vanishes identically")
    return Fraction(min(orders), min(weights))


def lower_bound(f: Poly, max_weight: int) -> PathWitness:
    """Best monomial-path bound over primitive weights with entries <= W.

    Deterministic: ties broken by the lexicographically smallest witness.
    """
    if max_weight < 1:
        raise DomainError("max_weight must be >= 1")
    best: PathWitness | None = None
    for weights in itertools.product(range(1, max_weight + 1), repeat=f.n):
        g = 0
        for w in weights:
            g = gcd(g, w)
        if g != 1:
            continue
        ratio = path_ratio(f, weights)
        if best is None or ratio > best.ratio:
            best = PathWitness(weights, ratio)
    assert best is not None
    return best
