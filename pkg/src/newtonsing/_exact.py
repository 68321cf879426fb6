"""Small exact linear-algebra helpers over the integers and rationals.

Everything here works on plain tuples of ints / Fractions; no floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[int, ...]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def cross(u: Vec, v: Vec) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v: Vec) -> Vec:
    """Divide an integer vector by the gcd of its entries (sign kept)."""
    g = vec_gcd(v)
    if g == 0:
        return v
    return tuple(x // g for x in v)


def unit(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def rank(rows) -> int:
    """Rank of a matrix given as an iterable of rows (ints or Fractions)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det3(a: Vec, b: Vec, c: Vec) -> int:
    return dot(a, cross(b, c))


def det2(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def solve_columns(columns, target):
    """Solve sum_j x_j * columns[j] = target exactly; the system must be
    consistent with a unique solution (columns linearly independent).

    Returns a tuple of Fractions.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    r = 0
    pivots = []
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            raise ValueError("inconsistent system")
    return tuple(aug[k][ncols] for k in range(ncols))


def lattice_basis(vectors) -> list[Vec]:
    """Basis of the integer lattice generated by ``vectors``.

    Integer row reduction (Hermite-style, no normalization of signs);
    returns the nonzero reduced rows.
    """
    rows = [list(v) for v in vectors if any(x != 0 for x in v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while col < ncols and rows:
        # euclidean reduction on the current column
        while True:
            nz = [r for r in rows if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            small = nz[0]
            for r in nz[1:]:
                q = r[col] // small[col]
                for k in range(ncols):
                    r[k] -= q * small[k]
            rows = [r for r in rows if any(x != 0 for x in r)]
        nz = [r for r in rows if r[col] != 0]
        if nz:
            basis.append(nz[0])
            rows = [r for r in rows if r is not nz[0]]
        col += 1
    return [tuple(r) for r in basis]


# --- Fourier-Motzkin feasibility ------------------------------------------
#
# A constraint is (coeffs, rhs, strict) and means  sum(c_i x_i) >= rhs,
# with > instead of >= when strict is True.

Constraint = tuple[tuple[Fraction, ...], Fraction, bool]


def _normalize_constraint(cs, r, s):
    """Scale to coprime integers for cheap deduplication."""
    dens = [x.denominator for x in cs] + [r.denominator]
    scale = 1
    for d in dens:
        scale = scale * d // gcd(scale, d)
    ics = [int(x * scale) for x in cs]
    ir = r * scale
    g = vec_gcd(ics + [ir.numerator])
    if g > 1:
        ics = [x // g for x in ics]
        ir = ir / g
    return tuple(Fraction(x) for x in ics), Fraction(ir), s


def _settle_trivial(cons):
    """Split off variable-free constraints; returns None if one is violated."""
    live = []
    for cs, r, s in cons:
        if any(cs):
            live.append((cs, r, s))
        elif (0 < r) or (s and 0 == r):
            return None
    return live


def fm_feasible(constraints: list[Constraint], nvars: int) -> bool:
    """Decide feasibility of a conjunction of linear inequalities exactly
    (Fourier-Motzkin elimination with strict-inequality tracking)."""
    cons = {_normalize_constraint(tuple(Fraction(c) for c in cs), Fraction(r), s)
            for cs, r, s in constraints}
    cons = _settle_trivial(cons)
    if cons is None:
        return False
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for cs, r, s in cons:
            c = cs[var]
            if c > 0:
                pos.append((cs, r, s))
            elif c < 0:
                neg.append((cs, r, s))
            else:
                rest.append((cs, r, s))
        new = set(rest)
        for cp, rp, sp in pos:
            for cn, rn, sn in neg:
                a, b = cp[var], -cn[var]
                coeffs = tuple(b * x + a * y for x, y in zip(cp, cn))
                new.add(_normalize_constraint(coeffs, b * rp + a * rn, sp or sn))
        cons = _settle_trivial(new)
        if cons is None:
            return False
    return True


def in_hull_orthant(point, generators, n: int) -> bool:
    """Brute-force membership test: point in conv(generators) + R_+^n.

    Feasibility of  lambda >= 0, sum lambda = 1, sum lambda*g <= point,
    decided by Fourier-Motzkin.  Used as the independent oracle for the
    polyhedron builder.
    """
    gens = list(generators)
    m = len(gens)
    if m == 0:
        return False
    cons: list[Constraint] = []
    for j in range(m):
        cons.append((tuple(Fraction(1) if k == j else Fraction(0) for k in range(m)),
                     Fraction(0), False))
    # sum lambda = 1 as two inequalities
    ones = tuple(Fraction(1) for _ in range(m))
    cons.append((ones, Fraction(1), False))
    cons.append((tuple(-x for x in ones), Fraction(-1), False))
    # componentwise sum lambda*g <= point
    for i in range(n):
        coeffs = tuple(Fraction(-gens[j][i]) for j in range(m))
        cons.append((coeffs, Fraction(-point[i]), False))
    return fm_feasible(cons, m)
