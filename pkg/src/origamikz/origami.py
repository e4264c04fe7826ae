"""Square-tiled surfaces as permutation pairs and the SL2(Z) action on them.

An origami of degree d is a pair of permutations (h, v) of the squares
{0, .., d-1}: h(i) is the square glued to the right edge of square i and
v(i) the square glued to its top edge.  The pair must act transitively
(connected surface).  Squares are 0-based internally; the text format and
all printed cycles are 1-based.

Action conventions (fixed once, validated by the cylinder-data tests):

* ``T`` shears by [[1, 1], [0, 1]] and re-cuts along the verticals.  On
  pairs: (h, v) -> (h, v o h^-1).  On points of square i:
  (x, y) -> (x + y, y) staying in square i while x + y < 1, else
  (x + y - 1, y) in square h(i).
* ``S`` rotates by [[0, -1], [1, 0]].  On pairs: (h, v) -> (v^-1, h).
  On points: (x, y) -> (1 - y, x) in the same square for y > 0, and
  (0, x) in square v^-1(i) for y = 0.
* Inverses accordingly: T^-1: (h, v o h), point (x - y, y) / square
  h^-1(i); S^-1: (v, h^-1), point (y, 1 - x) / square h^-1(i) at x = 0.

Acting by a matrix means decomposing it into S/T letters
(:func:`origamikz.sl2.matrix_to_word`) and applying them right-to-left,
so that ``act_matrix(M, act_matrix(N, o)) == act_matrix(M*N, o)``.
"""

from fractions import Fraction
from math import gcd

from .errors import InvalidShapeError, OrbitCapExceeded
from .sl2 import matrix_to_word


class Perm:
    """A permutation of {0, .., d-1}, stored by its image tuple."""

    __slots__ = ("images", "_inv")

    def __init__(self, images):
        images = tuple(images)
        d = len(images)
        seen = [False] * d
        for i in images:
            if not isinstance(i, int) or i < 0 or i >= d or seen[i]:
                raise ValueError("not a permutation of 0..%d: %r" % (d - 1, images))
            seen[i] = True
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_inv", None)

    @classmethod
    def identity(cls, d):
        return cls(range(d))

    @classmethod
    def from_cycles(cls, cycles, degree=None):
        """Build from 1-based cycles, e.g. ``[(1, 2), (3, 5, 4)]``."""
        top = max((s for c in cycles for s in c), default=0)
        d = degree if degree is not None else top
        if top > d:
            raise ValueError("cycle mentions %d but degree is %d" % (top, d))
        images = list(range(d))
        for c in cycles:
            for s, t in zip(c, c[1:] + c[:1]):
                if images[s - 1] != s - 1:
                    raise ValueError("symbol %d repeated across cycles" % s)
                images[s - 1] = t - 1
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def inverse(self):
        if self._inv is None:
            inv = [0] * len(self.images)
            for i, j in enumerate(self.images):
                inv[j] = i
            object.__setattr__(self, "_inv", Perm(inv))
        return self._inv

    def __mul__(self, other):
        """Composition: (self * other)(x) = self(other(x))."""
        return Perm(self.images[j] for j in other.images)

    def cycles(self, include_fixed=False):
        """Cycles as 0-based tuples, each starting at its minimum."""
        out = []
        seen = [False] * len(self.images)
        for i in range(len(self.images)):
            if seen[i]:
                continue
            c = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                c.append(j)
                seen[j] = True
                j = self.images[j]
            if len(c) > 1 or include_fixed:
                out.append(tuple(c))
        return out

    def cycle_type(self):
        lens = sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)
        return tuple(lens)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Perm.from_cycles(%r, degree=%d)" % (
            [tuple(s + 1 for s in c) for c in self.cycles()],
            self.degree,
        )

    def cycle_string(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(s + 1) for s in c) + ")" for c in cycles)


class Origami:
    """A connected square-tiled surface given by its gluing pair (h, v)."""

    __slots__ = ("h", "v")

    def __init__(self, h, v):
        if h.degree != v.degree:
            raise ValueError("h and v must have the same degree")
        if not _transitive(h.images, v.images):
            raise ValueError("the pair (h, v) does not act transitively")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)

    @property
    def degree(self):
        return self.h.degree

    def corner_perm(self):
        """The permutation v h v^-1 h^-1 whose long cycles are the cone points.

        One full counterclockwise turn around the bottom-left vertex of
        square i ends at the bottom-left vertex of square
        v(h(v^-1(h^-1(i)))); a cycle of length l is a cone point of angle
        2*pi*l.
        """
        h, v = self.h, self.v
        hi, vi = h.inverse(), v.inverse()
        return Perm(v(h(vi(hi(i)))) for i in range(self.degree))

    def __eq__(self, other):
        return (
            isinstance(other, Origami)
            and self.h.images == other.h.images
            and self.v.images == other.v.images
        )

    def __hash__(self):
        return hash((self.h.images, self.v.images))

    def __repr__(self):
        return "Origami(h=%s, v=%s, d=%d)" % (
            self.h.cycle_string(),
            self.v.cycle_string(),
            self.degree,
        )


def _transitive(h, v):
    d = len(h)
    if d == 0:
        return False
    seen = [False] * d
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        i = stack.pop()
        for j in (h[i], v[i]):
            if not seen[j]:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == d


class SingularityData:
    """Cone orders (order k means angle 2*pi*(k+1)) and the genus."""

    __slots__ = ("cone_orders", "genus")

    def __init__(self, cone_orders, genus):
        self.cone_orders = tuple(sorted(cone_orders))
        self.genus = genus

    @property
    def is_h2(self):
        return self.cone_orders == (2,)

    def __eq__(self, other):
        return (
            isinstance(other, SingularityData)
            and self.cone_orders == other.cone_orders
            and self.genus == other.genus
        )

    def __repr__(self):
        return "SingularityData(cone_orders=%r, genus=%d)" % (
            self.cone_orders,
            self.genus,
        )


def singularity_data(o):
    """Cone orders from the corner permutation, genus from their sum.

    The sum of the cone orders is 2*genus - 2 (a torus has none).
    """
    orders = [len(c) - 1 for c in o.corner_perm().cycles()]
    total = sum(orders)
    assert total % 2 == 0
    return SingularityData(orders, total // 2 + 1)


def make_l_origami(n, m):
    """The L-shaped origami with n squares across and m squares up.

    Squares 1..n form the bottom row (h-cycle (1 .. n)); squares
    n+1..n+m-1 stack above square 1 (v-cycle (1, n+1, .., n+m-1)).
    Degree n + m - 1, stratum H(2).
    """
    if n < 2 or m < 2:
        raise InvalidShapeError(
            "L(%d, %d) is not an L-shape; need n, m >= 2" % (n, m)
        )
    d = n + m - 1
    h = Perm.from_cycles([tuple(range(1, n + 1))], degree=d)
    v = Perm.from_cycles([(1,) + tuple(range(n + 1, n + m))], degree=d)
    return Origami(h, v)


# ---------------------------------------------------------------------------
# SL2(Z) action
# ---------------------------------------------------------------------------

_GENERATOR_NAMES = {"S": ("S", 1), "T": ("T", 1), "S^-1": ("S", -1), "T^-1": ("T", -1)}


def act_letter(o, gen, exp):
    """Apply a single S/T letter with exponent sign ``exp`` in {1, -1}."""
    h, v = o.h, o.v
    if gen == "T":
        v2 = v * (h.inverse() if exp > 0 else h)
        return Origami(h, v2)
    if gen == "S":
        if exp > 0:
            return Origami(v.inverse(), h)
        return Origami(v, h.inverse())
    raise ValueError("unknown generator %r" % (gen,))


def act_generator(o, g):
    """Act by one of "S", "T", "S^-1", "T^-1" on an origami."""
    try:
        gen, exp = _GENERATOR_NAMES[g]
    except KeyError:
        raise ValueError("generator must be one of %s" % sorted(_GENERATOR_NAMES))
    return act_letter(o, gen, exp)


def transport_letter(o, gen, exp, point):
    """Image of a surface point under one generator acting on ``o``.

    ``point`` is (square, x, y) with exact rationals, 0 <= x, y < 1.  The
    result is canonical in the same sense on the acted origami.
    """
    sq, x, y = point
    h, v = o.h, o.v
    if gen == "T":
        if exp > 0:
            s = x + y
            return (sq, s, y) if s < 1 else (h(sq), s - 1, y)
        s = x - y
        return (sq, s, y) if s >= 0 else (h.inverse()(sq), s + 1, y)
    if gen == "S":
        if exp > 0:
            if y > 0:
                return (sq, 1 - y, x)
            return (v.inverse()(sq), Fraction(0), x)
        if x > 0:
            return (sq, y, 1 - x)
        return (h.inverse()(sq), y, Fraction(0))
    raise ValueError("unknown generator %r" % (gen,))


def act_word(o, word):
    """Apply a word over S/T (rightmost letter first).

    Returns ``(result, stages)`` where stages is the list of
    ``(gen, exp, origami_after)`` single-letter applications, in the
    order they were applied.  Stages are what point transport needs.
    """
    stages = []
    cur = o
    for gen, exp in reversed(word):
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            cur = act_letter(cur, gen, step)
            stages.append((gen, step, cur))
    return cur, stages


def act_matrix(o, m):
    """Act by a determinant-1 integer matrix."""
    return act_word(o, matrix_to_word(m))[0]


def pull_back_point(stages, point):
    """Undo a stage list (from :func:`act_word`) on a surface point."""
    for gen, exp, after in reversed(stages):
        point = transport_letter(after, gen, -exp, point)
    return point


# ---------------------------------------------------------------------------
# Canonical forms, orbits, primitivity
# ---------------------------------------------------------------------------

def relabel(o, g):
    """Conjugate both permutations by g (square i becomes square g(i))."""
    gi = g.inverse()
    h = Perm(g(o.h(gi(i))) for i in range(o.degree))
    v = Perm(g(o.v(gi(i))) for i in range(o.degree))
    return Origami(h, v)


def canonical_form(o):
    """Canonical relabelling: BFS numbering, minimised over start squares.

    Edges are explored in the fixed order (h, v, h^-1, v^-1); squares are
    renamed by discovery order and the lexicographically smallest
    (h, v) image pair over all d start squares wins.  Two origamis are
    translation-equivalent iff their canonical forms are equal.
    """
    d = o.degree
    h, v = o.h.images, o.v.images
    hi, vi = o.h.inverse().images, o.v.inverse().images
    best = None
    for start in range(d):
        label = [-1] * d
        order = [start]
        label[start] = 0
        for cur in order:
            for nxt in (h[cur], v[cur], hi[cur], vi[cur]):
                if label[nxt] < 0:
                    label[nxt] = len(order)
                    order.append(nxt)
        new_h = [0] * d
        new_v = [0] * d
        for i in range(d):
            new_h[label[i]] = label[h[i]]
            new_v[label[i]] = label[v[i]]
        key = tuple(new_h) + tuple(new_v)
        if best is None or key < best:
            best = key
    return Origami(Perm(best[:d]), Perm(best[d:]))


_ORBIT_GENS = (("S", 1), ("S", -1), ("T", 1), ("T", -1))


def orbit(o, cap=10**6):
    """The SL2(Z) orbit of ``o`` as a frozenset of canonical forms.

    BFS under S and T (and their inverses, which changes nothing: S has
    order 4 and T^-1 = (ST)^5 S).  Raises :class:`OrbitCapExceeded`
    carrying the partial set if more than ``cap`` forms show up.
    """
    start = canonical_form(o)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            for gen, exp in _ORBIT_GENS:
                img = canonical_form(act_letter(cur, gen, exp))
                if img not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded(
                            "orbit exceeded cap of %d" % cap, seen
                        )
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


def same_orbit(o1, o2, cap=10**6):
    return canonical_form(o2) in orbit(o1, cap)


def holonomy_lattice_index(o):
    """Index in Z^2 of the lattice of absolute periods.

    Spanning tree over the square-adjacency graph; every non-tree h- or
    v-edge closes a cycle whose holonomy goes into the lattice.  Returns
    0 if the lattice has rank < 2 (cannot happen for a valid origami).
    """
    d = o.degree
    h, v = o.h.images, o.v.images
    pos = [None] * d
    pos[0] = (0, 0)
    order = [0]
    tree = set()
    for cur in order:
        for img, dx, dy in ((h[cur], 1, 0), (v[cur], 0, 1)):
            if pos[img] is None:
                pos[img] = (pos[cur][0] + dx, pos[cur][1] + dy)
                order.append(img)
                tree.add((cur, img, dx, dy))
    vecs = []
    for i in range(d):
        for img, dx, dy in ((h[i], 1, 0), (v[i], 0, 1)):
            if (i, img, dx, dy) not in tree:
                vecs.append(
                    (pos[i][0] + dx - pos[img][0], pos[i][1] + dy - pos[img][1])
                )
    return _lattice_index(vecs)


def _lattice_index(vecs):
    # Row-reduce the integer vectors to a two-row Hermite-style basis.
    e1 = e2 = None
    for w in vecs:
        if w == (0, 0):
            continue
        if e1 is None:
            e1 = w
            continue
        # gcd on first coordinates
        a, b = e1, w
        while b[0]:
            q = a[0] // b[0]
            a, b = b, (a[0] - q * b[0], a[1] - q * b[1])
        e1 = a
        w = b  # now w[0] == 0
        if w[1]:
            e2 = w if e2 is None else (0, gcd(e2[1], w[1]))
    if e1 is None or e1[0] == 0 or e2 is None:
        return 0
    return abs(e1[0] * e2[1])


def is_primitive(o):
    """True iff the absolute-period lattice is all of Z^2."""
    return holonomy_lattice_index(o) == 1


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def format_origami(o):
    """Serialise to the line format ``d=5 / h=(1 2) / v=(1 3 4 5)``."""
    return "d=%d\nh=%s\nv=%s\n" % (
        o.degree,
        o.h.cycle_string(),
        o.v.cycle_string(),
    )


def _parse_cycles(text, line):
    text = text.strip()
    cycles = []
    if text in ("", "()"):
        return cycles
    if not text.startswith("(") or not text.endswith(")"):
        raise ValueError("line %r: cycles must be parenthesised" % line)
    for chunk in text[1:-1].split(")("):
        syms = chunk.replace(",", " ").split()
        if not syms:
            continue
        cyc = tuple(int(s) for s in syms)
        if any(s < 1 for s in cyc):
            raise ValueError("line %r: squares are numbered from 1" % line)
        cycles.append(cyc)
    return cycles


def parse_origami(text):
    """Parse the text format.

    One line ``h=<cycles>`` and one line ``v=<cycles>``, cycles 1-based
    with fixed points omitted; an optional ``d=<int>`` line pins the
    degree, otherwise the largest symbol mentioned is used.
    """
    d = None
    raw = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition("=")
        key = key.strip().lower()
        if key == "d":
            d = int(rest)
        elif key in ("h", "v"):
            raw[key] = _parse_cycles(rest, line)
        else:
            raise ValueError("unrecognised line %r" % line)
    if "h" not in raw or "v" not in raw:
        raise ValueError("need both an h= line and a v= line")
    if d is None:
        d = max((s for c in raw["h"] + raw["v"] for s in c), default=1)
    return Origami(
        Perm.from_cycles(raw["h"], degree=d),
        Perm.from_cycles(raw["v"], degree=d),
    )
