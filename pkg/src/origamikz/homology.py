"""Intersection pairing of geodesic loops and the 4-curve homology basis.

Homology classes are handled geometrically: a class is either a traced
loop or an integer coefficient vector over the basis (X1, X2, Y1, Y2) of
horizontal and vertical core curves.  The intersection form is assembled
as the 4x4 Gram matrix and classes of new loops are recovered by solving
``A x = (omega(X1, loop), .., omega(Y2, loop))`` exactly, which is
enough for every computation in scope; no chain complex is built.

Sign convention: a transverse crossing of a curve in direction u with a
curve in direction w counts as the sign of det[u w] (columns u, w).  All
crossings of two constant-direction loops share that sign, so the
pairing is the signed count of distinct crossing points.
"""

from fractions import Fraction
from math import gcd

from .errors import (
    BasisUnavailableError,
    DegenerateConfigurationError,
    IntegralityError,
    NoBasisFoundError,
    RankError,
)
from .geometry import (
    Direction,
    _Corners,
    decompose,
    primitive_directions,
)

F0 = Fraction(0)
F1 = Fraction(1)


def pushforward(loop):
    """Total holonomy of a closed loop: f * direction for a core curve."""
    return loop.holonomy()


def intersection_number(alpha, beta):
    """Signed count of crossings of two constant-direction loops.

    Parallel loops return 0.  Crossing points are computed square by
    square with exact rationals and deduplicated as surface points, so
    crossings on square edges or at regular vertices are counted once.
    A crossing at a cone point would be flagged as degenerate, but loops
    produced by this package never touch cone points.
    """
    o = alpha.origami
    assert beta.origami == o, "loops live on different origamis"
    ua, ub = alpha.direction.vector, beta.direction.vector
    det = ua[0] * ub[1] - ua[1] * ub[0]
    if det == 0:
        return 0
    sign = 1 if det > 0 else -1
    corners = _Corners(o)
    by_square = {}
    for seg in beta.segments:
        by_square.setdefault(seg[0], []).append(seg)
    crossings = set()
    for sq, (ax0, ay0), (ax1, ay1) in alpha.segments:
        dax, day = ax1 - ax0, ay1 - ay0
        for _, (bx0, by0), (bx1, by1) in by_square.get(sq, ()):
            dbx, dby = bx1 - bx0, by1 - by0
            den = dax * dby - day * dbx
            rx, ry = bx0 - ax0, by0 - ay0
            t = (rx * dby - ry * dbx) / den
            u = (rx * day - ry * dax) / den
            if not (F0 <= t <= F1 and F0 <= u <= F1):
                continue
            x, y = ax0 + t * dax, ay0 + t * day
            crossings.add(_crossing_key(o, corners, sq, x, y))
    return sign * len(crossings)


def _crossing_key(o, corners, sq, x, y):
    """Canonical surface-point key for deduplicating crossings."""
    if x == F1:
        sq, x = o.h(sq), F0
    if y == F1:
        sq, y = o.v(sq), F0
    if x == F0 and y == F0:
        cyc = corners.cycle_of[sq]
        if len(cyc) > 1:
            raise DegenerateConfigurationError(
                "curves cross at a cone point (square %d)" % (sq + 1)
            )
        return ("vertex", min(cyc))
    return (sq, x, y)


# ---------------------------------------------------------------------------
# The 4-curve basis
# ---------------------------------------------------------------------------

class HomologyBasis:
    """Core curves (X1, X2, Y1, Y2) of two 2-cylinder directions.

    X1, X2 come from the first direction ordered by increasing f (ties
    by smallest square id), Y1, Y2 from the second.  ``gram`` is the
    intersection matrix A with A[i][j] = omega(basis_i, basis_j).
    """

    __slots__ = ("origami", "directions", "loops", "f_values", "gram")

    def __init__(self, origami, directions, loops, f_values):
        self.origami = origami
        self.directions = directions
        self.loops = tuple(loops)
        self.f_values = tuple(f_values)
        g = [[0] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                val = intersection_number(self.loops[i], self.loops[j])
                g[i][j] = val
                g[j][i] = -val
        self.gram = tuple(tuple(row) for row in g)
        if _det4(self.gram) == 0:
            raise RankError("intersection form is degenerate on this basis")

    def omega_against(self, loop):
        """(omega(X1, loop), omega(X2, loop), omega(Y1, loop), omega(Y2, loop))."""
        return tuple(intersection_number(b, loop) for b in self.loops)

    def __repr__(self):
        return "HomologyBasis(dirs=%r, f=%r)" % (self.directions, self.f_values)


def basis_from_directions(o, dir1, dir2):
    """Build the 4-curve basis from two 2-cylinder directions."""
    if dir1 == dir2:
        raise BasisUnavailableError("basis directions must differ")
    pairs = []
    for d in (dir1, dir2):
        dec = decompose(o, d)
        if len(dec.cylinders) != 2:
            raise BasisUnavailableError(
                "direction %r has %d cylinders, need exactly 2"
                % (d, len(dec.cylinders))
            )
        pairs.append(dec)
    loops, fs = [], []
    for dec in pairs:
        for cyl in dec.cylinders:  # decompose sorts by (f, smallest square)
            loops.append(cyl.core)
            fs.append(cyl.f)
    return HomologyBasis(o, (dir1, dir2), loops, fs)


def standard_basis(o):
    """The horizontal/vertical basis: X from (1, 0), Y from (0, 1)."""
    return basis_from_directions(o, Direction(1, 0), Direction(0, 1))


def find_basis_directions(o, cap=100):
    """First pair of 2-cylinder directions with a nondegenerate form.

    Directions are tried in the deterministic (|p|+|q|, q, p) order; at
    most ``cap`` of them are examined.
    """
    good = []
    for d in primitive_directions(12):
        if cap <= 0:
            break
        cap -= 1
        try:
            dec = decompose(o, d)
        except Exception:
            continue
        if len(dec.cylinders) != 2:
            continue
        for prior in good:
            try:
                basis_from_directions(o, prior, d)
            except (BasisUnavailableError, RankError):
                continue
            return (prior, d)
        good.append(d)
    raise NoBasisFoundError(
        "no pair of 2-cylinder directions with a nondegenerate form found"
    )


def express_in_basis(loop, basis):
    """Integer coordinates of a loop over (X1, X2, Y1, Y2).

    Solves A x = (omega(X1, loop), .., omega(Y2, loop)) exactly; a
    fractional solution raises IntegralityError (a finding about the
    basis, not a fallback code path).
    """
    b = basis.omega_against(loop)
    x = _solve4(basis.gram, b)
    out = []
    for val in x:
        if val.denominator != 1:
            raise IntegralityError(
                "loop has non-integral coordinates %r over the basis" % (x,)
            )
        out.append(int(val))
    return tuple(out)


def omega_class_loop(basis, coeffs, loop):
    """omega(sum coeffs_i basis_i, loop) by bilinearity."""
    vals = basis.omega_against(loop)
    return sum(c * v for c, v in zip(coeffs, vals))


def omega_classes(basis, u, w):
    """omega of two coefficient vectors through the Gram matrix."""
    return sum(
        u[i] * basis.gram[i][j] * w[j] for i in range(4) for j in range(4)
    )


class NonTautBasis:
    """The pushforward-kernel basis {X, Y} as coefficient vectors.

    X = (f_X1/g) X2 - (f_X2/g) X1 with g = gcd(f_X1, f_X2) kills the
    holonomy of the first direction; Y likewise for the second.
    """

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = tuple(x)
        self.y = tuple(y)

    def __repr__(self):
        return "NonTautBasis(x=%r, y=%r)" % (self.x, self.y)


def nontaut_basis(basis):
    f1, f2, f3, f4 = basis.f_values
    g12 = gcd(f1, f2)
    g34 = gcd(f3, f4)
    x = (-f2 // g12, f1 // g12, 0, 0)
    y = (0, 0, -f4 // g34, f3 // g34)
    return NonTautBasis(x, y)


def class_pushforward(basis, coeffs):
    """Holonomy of an integer combination of the basis loops."""
    hx = hy = 0
    for c, loop in zip(coeffs, basis.loops):
        lx, ly = loop.holonomy()
        hx += c * lx
        hy += c * ly
    return (hx, hy)


# ---------------------------------------------------------------------------
# Small exact linear algebra
# ---------------------------------------------------------------------------

def _det4(m):
    rows = [[Fraction(x) for x in row] for row in m]
    det = F1
    for col in range(4):
        piv = next((r for r in range(col, 4) if rows[r][col]), None)
        if piv is None:
            return F0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, 4):
            factor = rows[r][col] / rows[col][col]
            for c in range(col, 4):
                rows[r][c] -= factor * rows[col][c]
    return det


def _solve4(m, b):
    rows = [[Fraction(x) for x in row] + [Fraction(bi)]
            for row, bi in zip(m, b)]
    for col in range(4):
        piv = next((r for r in range(col, 4) if rows[r][col]), None)
        if piv is None:
            raise RankError("singular intersection matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        pivval = rows[col][col]
        rows[col] = [x / pivval for x in rows[col]]
        for r in range(4):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[r][4] for r in range(4))
