"""Kouchnirenko Newton number for convenient germs (n <= 3), plus the
stabilized extension for non-convenient germs.

For convenient f the Newton number is the alternating sum of
factorial-weighted volumes under the Newton boundary over all coordinate
subspaces:

    n=2:  nu = 2*V_xy - V_x - V_y + 1
    n=3:  nu = 6*V_xyz - 2*(V_xy + V_xz + V_yz) + (V_x + V_y + V_z) - 1

For non-convenient f, pure powers z_i^k are added on the missing axes
with k doubling from 4 until two consecutive rounds agree; the value is
non-increasing and integer, so it is eventually constant exactly when
the limit is finite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, InternalError, StabilizationError
from .poly import Poly, is_convenient, newton_polyhedron, stabilize, support
from .polyhedron import AXIS_NAMES, under_volume

_STABILIZE_CAP = 2**20


@dataclass(frozen=True)
class NewtonNumber:
    value: int
    stabilized: bool = False
    k_used: dict = field(default_factory=dict)


from functools import lru_cache

from .polyhedron import NewtonPolyhedron


@lru_cache(maxsize=16384)
def _newton_number_of(p: NewtonPolyhedron) -> int:
    n = p.n
    total = Fraction(0)
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        fact = 1
        for i in range(2, size + 1):
            fact *= i
        for axes in itertools.combinations(range(n), size):
            total += sign * fact * under_volume(p, axes)
    total += (-1) ** n  # empty-subset term
    if total.denominator != 1 or total < 0:
        raise InternalError(f"Newton number came out as {total}")
    return int(total)


def newton_number(f: Poly) -> NewtonNumber:
    """Newton number of a convenient germ (exact, non-negative integer)."""
    convenient, missing = is_convenient(f)
    if not convenient:
        raise DomainError(
            f"not convenient (missing axes {sorted(missing)}); "
            "use newton_number_stabilized")
    return NewtonNumber(_newton_number_of(newton_polyhedron(f)))


_stab_cache: dict = {}


def newton_number_stabilized(f: Poly) -> NewtonNumber:
    """Newton number via stabilization on the missing axes.

    k doubles from 4; agreement of two consecutive rounds is taken as
    stabilization (k_used records the smaller, certified exponent).
    """
    convenient, missing = is_convenient(f)
    if convenient:
        return newton_number(f)
    key = (tuple(sorted(support(f))), f.n)
    hit = _stab_cache.get(key)
    if hit is not None:
        return hit
    missing = sorted(missing, key=AXIS_NAMES.index)
    k = 4
    prev: int | None = None
    while k <= _STABILIZE_CAP:
        value = newton_number(stabilize(f, {ax: k for ax in missing})).value
        if prev is not None and value == prev:
            result = NewtonNumber(value, True, {ax: k // 2 for ax in missing})
            _stab_cache[key] = result
            return result
        prev = value
        k *= 2
    raise StabilizationError(
        "Newton number does not stabilize (is the singularity isolated?)")
