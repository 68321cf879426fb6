"""Finite-support polynomial germs over exact rationals.

Coefficients live in Q[t], where t is a single generic deformation
parameter (nonzero, "small").  A coefficient with any t-dependence is
called generic; decisions that need a numeric value of t use the
two-sample policy of :class:`GenericSampler`.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction

from ._exact import rank as _rank
from .errors import DomainError
from .polyhedron import AXIS_NAMES, Face, NewtonPolyhedron, polyhedron_of_support

Point = tuple[int, ...]


@dataclass(frozen=True)
class Coef:
    """Element of Q[t]: tuple of (t-degree, value) pairs, sorted, no zeros."""

    parts: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def of(value) -> "Coef":
        if isinstance(value, Coef):
            return value
        v = Fraction(value)
        return Coef(((0, v),) if v else ())

    @staticmethod
    def generic(scale=1) -> "Coef":
        s = Fraction(scale)
        return Coef(((1, s),) if s else ())

    @staticmethod
    def _make(d: dict[int, Fraction]) -> "Coef":
        return Coef(tuple(sorted((e, c) for e, c in d.items() if c)))

    def __add__(self, other) -> "Coef":
        other = Coef.of(other)
        d = dict(self.parts)
        for e, c in other.parts:
            d[e] = d.get(e, Fraction(0)) + c
        return Coef._make(d)

    def __neg__(self) -> "Coef":
        return Coef(tuple((e, -c) for e, c in self.parts))

    def __sub__(self, other) -> "Coef":
        return self + (-Coef.of(other))

    def __mul__(self, other) -> "Coef":
        other = Coef.of(other)
        d: dict[int, Fraction] = {}
        for e1, c1 in self.parts:
            for e2, c2 in other.parts:
                e = e1 + e2
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return Coef._make(d)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not self.parts

    @property
    def is_generic(self) -> bool:
        return any(e > 0 for e, _ in self.parts)

    def evaluate(self, t: Fraction) -> Fraction:
        return sum((c * t**e for e, c in self.parts), Fraction(0))

    def _str_parts(self) -> list[tuple[Fraction, int]]:
        """(rational, t-degree) pairs in t-degree order, for printing."""
        return [(c, e) for e, c in self.parts]

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for e, c in self.parts:
            if e == 0:
                bits.append(str(c))
            else:
                t = "t" if e == 1 else f"t^{e}"
                bits.append(t if c == 1 else ("-" + t if c == -1 else f"{c}*{t}"))
        return " + ".join(bits)


@dataclass(frozen=True)
class Term:
    coefficient: Coef
    exponent: Point


@dataclass(frozen=True)
class Poly:
    """Canonical finite-support polynomial: terms sorted by total degree
    then exponent, no zero coefficients, no duplicate exponents."""

    n: int
    terms: tuple[Term, ...]

    @staticmethod
    def make(n: int, coeffs: dict) -> "Poly":
        """Build from {exponent: coefficient}; 't' means the generic t."""
        canon: dict[Point, Coef] = {}
        for exp, c in coeffs.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise DomainError(f"exponent {exp} does not have {n} entries")
            if any(e < 0 for e in exp):
                raise DomainError(f"negative exponent in {exp}")
            coef = Coef.generic() if c == "t" else Coef.of(c)
            canon[exp] = canon.get(exp, Coef(())) + coef
        terms = tuple(Term(c, e) for e, c in sorted(
            canon.items(), key=lambda item: (sum(item[0]), item[0]))
            if not c.is_zero)
        return Poly(n, terms)

    @staticmethod
    def zero(n: int) -> "Poly":
        return Poly(n, ())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def has_generic(self) -> bool:
        return any(t.coefficient.is_generic for t in self.terms)

    def as_dict(self) -> dict[Point, Coef]:
        return {t.exponent: t.coefficient for t in self.terms}

    def coefficient(self, exponent) -> Coef:
        exponent = tuple(exponent)
        for t in self.terms:
            if t.exponent == exponent:
                return t.coefficient
        return Coef(())

    def __add__(self, other: "Poly") -> "Poly":
        if self.n != other.n:
            raise DomainError("dimension mismatch")
        d = {t.exponent: t.coefficient for t in self.terms}
        for t in other.terms:
            d[t.exponent] = d.get(t.exponent, Coef(())) + t.coefficient
        return Poly.make(self.n, d)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c) -> "Poly":
        c = Coef.of(c) if not isinstance(c, Coef) else c
        return Poly.make(self.n, {t.exponent: t.coefficient * c for t in self.terms})

    def mul_monomial(self, exponent) -> "Poly":
        exponent = tuple(exponent)
        return Poly.make(self.n, {
            tuple(a + b for a, b in zip(t.exponent, exponent)): t.coefficient
            for t in self.terms})

    def diff(self, axis: int) -> "Poly":
        d = {}
        for t in self.terms:
            e = t.exponent[axis]
            if e == 0:
                continue
            new = tuple(v - 1 if i == axis else v for i, v in enumerate(t.exponent))
            d[new] = d.get(new, Coef(())) + t.coefficient * e
        return Poly.make(self.n, d)

    def order(self) -> int:
        if self.is_zero:
            raise DomainError("order of the zero polynomial")
        return min(sum(t.exponent) for t in self.terms)

    def evaluate_t(self, tval: Fraction) -> "Poly":
        """Specialize the generic parameter to a rational value."""
        return Poly.make(self.n, {
            t.exponent: t.coefficient.evaluate(Fraction(tval)) for t in self.terms})

    def __str__(self):
        if self.is_zero:
            return "0"
        pieces: list[tuple[Fraction, int, Point]] = []
        for t in self.terms:
            for c, tdeg in t.coefficient._str_parts():
                pieces.append((c, tdeg, t.exponent))

        def monomial(exp: Point) -> str:
            factors = []
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                v = AXIS_NAMES[i]
                factors.append(v if e == 1 else f"{v}^{e}")
            return "*".join(factors)

        out = []
        for idx, (c, tdeg, exp) in enumerate(pieces):
            mono = monomial(exp)
            coeff_factors = []
            a = abs(c)
            if a != 1 or (tdeg == 0 and not mono):
                coeff_factors.append(str(a))
            if tdeg:
                coeff_factors.append("t" if tdeg == 1 else f"t^{tdeg}")
            body = "*".join(coeff_factors + ([mono] if mono else []))
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


def support(f: Poly) -> set[Point]:
    """Exponent set of the nonzero terms."""
    return {t.exponent for t in f.terms}


def gradient(f: Poly) -> tuple[Poly, ...]:
    """Formal partial derivatives; generic coefficients propagate."""
    return tuple(f.diff(i) for i in range(f.n))


def newton_polyhedron(f: Poly) -> NewtonPolyhedron:
    """Gamma_+ of f (cached by support)."""
    if f.is_zero:
        raise DomainError("empty support")
    return polyhedron_of_support(support(f), f.n)


def face_polynomial(f: Poly, face: Face) -> Poly:
    """Sum of the terms of f supported on a compact face of Gamma_+(f).

    Quasihomogeneous with respect to the face's witness form.
    """
    p = newton_polyhedron(f)
    canon = p.find_face(face)
    form = canon.support
    return Poly.make(f.n, {
        t.exponent: t.coefficient for t in f.terms if form.is_tight(t.exponent)})


def is_convenient(f: Poly) -> tuple[bool, set[str]]:
    """Does Gamma_+(f) meet every coordinate axis?

    Equivalent to the support containing a point on each axis: an axis
    point of the hull is a convex combination of support points that all
    lie on that axis.
    """
    missing = set()
    for i in range(f.n):
        on_axis = any(all(e == 0 for j, e in enumerate(t.exponent) if j != i)
                      and t.exponent[i] > 0
                      for t in f.terms)
        if not on_axis:
            missing.add(AXIS_NAMES[i])
    return (not missing, missing)


@dataclass(frozen=True)
class GenericSampler:
    """Two-sample policy for zero/sign decisions on generic coefficients:
    evaluate at t=1 and at a random rational in [1, 2^16]."""

    samples: tuple[Fraction, ...]

    @staticmethod
    def from_seed(seed=None) -> "GenericSampler":
        rng = random.Random(seed)
        second = Fraction(rng.randint(2, 2**16))
        return GenericSampler((Fraction(1), second))


DEFAULT_SAMPLER = GenericSampler.from_seed(0)


def order_and_hessian_rank(f: Poly, sampler: GenericSampler | None = None) -> tuple[int, int]:
    """Order of the germ and the generic rank of its quadratic form.

    The rank of the degree-2 Hessian is computed at each t-sample and the
    maximum is returned: specializing t can only lower the rank, so the
    maximum is a sound lower bound that is generically exact.
    """
    if f.is_zero:
        raise DomainError("zero polynomial has no order")
    sampler = sampler or DEFAULT_SAMPLER
    n = f.n
    best = 0
    for tval in sampler.samples:
        h = [[Fraction(0)] * n for _ in range(n)]
        for t in f.terms:
            if sum(t.exponent) != 2:
                continue
            c = t.coefficient.evaluate(tval)
            idx = [i for i, e in enumerate(t.exponent) if e > 0]
            if len(idx) == 1:
                i = idx[0]
                h[i][i] += 2 * c
            else:
                i, j = idx
                h[i][j] += c
                h[j][i] += c
        best = max(best, _rank(h))
    return (f.order(), best)


def stabilize(f: Poly, k_map: dict) -> Poly:
    """Add z_i^k pure powers on the missing axes given by ``k_map``.

    Keys are axis names or 0-based indices.  A key for a non-missing axis
    is skipped with a warning so that the polyhedron grows only along
    missing axes.
    """
    _, missing = is_convenient(f)
    extra: dict[Point, int] = {}
    for key, k in k_map.items():
        axis = AXIS_NAMES.index(key) if isinstance(key, str) else int(key)
        name = AXIS_NAMES[axis]
        if int(k) < 2:
            raise DomainError(f"stabilization exponent {k} for {name} must be >= 2")
        if name not in missing:
            warnings.warn(f"axis {name} already met; stabilization term absorbed",
                          stacklevel=2)
            continue
        exp = tuple(int(k) if i == axis else 0 for i in range(f.n))
        extra[exp] = 1
    if not extra:
        return f
    return f + Poly.make(f.n, extra)
