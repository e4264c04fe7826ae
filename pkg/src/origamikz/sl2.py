"""Integer 2x2 matrices, words in the S/T generators, and subgroup indices.

SL2(Z) is generated by

    S = [[0, -1], [1, 0]]    (quarter turn),
    T = [[1,  1], [0, 1]]    (horizontal shear).

Words over S and T are lists of ``(letter, exponent)`` pairs with letter in
``{"S", "T"}`` and a nonzero integer exponent; the empty list is the
identity.  Index computations rewrite everything over the amalgam
presentation ``< a, b | a^4, a^2 b^-3 >`` with a = S and b = ST (so
T = a^-1 b) and run an HLT-style coset enumeration.  Todd-Coxeter can
certify a finite index but never infiniteness, so running past the
live-coset cap raises :class:`IndexCapExceeded` instead of claiming
anything.
"""

from collections import deque
from dataclasses import dataclass

from .errors import IndexCapExceeded

Word = list  # list of (letter, exponent) pairs


@dataclass(frozen=True)
class Mat2:
    """Row-major integer 2x2 matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def __mul__(self, other):
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self):
        if self.det() != 1:
            raise ValueError("only determinant-1 matrices are inverted here")
        return Mat2(self.d, -self.b, -self.c, self.a)

    def apply(self, vec):
        x, y = vec
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __repr__(self):
        return "Mat2(%d, %d, %d, %d)" % (self.a, self.b, self.c, self.d)


IDENTITY = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)

_GEN = {"S": S, "T": T}


def word_to_matrix(word):
    """Multiply out a word over S and T (left-to-right product)."""
    m = IDENTITY
    for letter, exp in word:
        g = _GEN[letter]
        if exp < 0:
            g = g.inverse()
        for _ in range(abs(exp)):
            m = m * g
    return m


def matrix_to_word(m):
    """Write ``m`` (det 1) as a word over S and T.

    Euclidean reduction on the first column: left-multiplications by T^k
    shrink the top-left entry modulo the bottom-left one, S swaps the
    rows, and -I is absorbed as S^2.  Round-trips exactly:
    ``word_to_matrix(matrix_to_word(m)) == m``.
    """
    if m.det() != 1:
        raise ValueError("matrix_to_word needs determinant 1, got %d" % m.det())
    a, b, c, d = m.a, m.b, m.c, m.d
    ops = []  # letters applied on the left, in application order
    while c != 0:
        k = a // c
        if k:
            a -= k * c
            b -= k * d
            ops.append(("T", -k))
        # S * [[a, b], [c, d]] = [[-c, -d], [a, b]]
        a, b, c, d = -c, -d, a, b
        ops.append(("S", 1))
    if a == -1:
        # (-I) * [[-1, b], [0, -1]] = [[1, -b], [0, 1]]
        a, b, d = 1, -b, 1
        ops.append(("S", 2))
    if b:
        ops.append(("T", -b))
    # ops[-1] * ... * ops[0] * m == I, hence m == inv(ops[0]) * inv(ops[1]) * ...
    return [(g, -e) for g, e in ops]


# ---------------------------------------------------------------------------
# Coset enumeration over < a, b | a^4, a^2 b^-3 >, a = S, b = ST.
# ---------------------------------------------------------------------------

# letters: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1; inverse letter is x ^ 1
_A, _AI, _B, _BI = 0, 1, 2, 3

_RELATORS = (
    (_A, _A, _A, _A),          # a^4
    (_A, _A, _BI, _BI, _BI),   # a^2 b^-3
)


def _amalgam_letters(word):
    """Rewrite an S/T word over the amalgam generators a, b."""
    out = []
    for letter, exp in word:
        if letter == "S":
            out.extend([_A if exp > 0 else _AI] * abs(exp))
        elif exp > 0:
            out.extend([_AI, _B] * exp)        # T = a^-1 b
        else:
            out.extend([_BI, _A] * (-exp))     # T^-1 = b^-1 a
    return tuple(out)


class _CosetTable:
    """HLT coset table over the four letters a, a^-1, b, b^-1."""

    def __init__(self, cap):
        self.cap = cap
        self.tab = [[None, None, None, None]]
        self.p = [0]
        self.n_live = 1
        self._queue = deque()

    def rep(self, k):
        l = k
        p = self.p
        while p[l] != l:
            l = p[l]
        while p[k] != l:
            p[k], k = l, p[k]
        return l

    def define(self, alpha, x):
        if self.n_live >= self.cap:
            raise IndexCapExceeded(
                "coset enumeration exceeded %d live cosets" % self.cap
            )
        beta = len(self.tab)
        self.tab.append([None, None, None, None])
        self.p.append(beta)
        self.n_live += 1
        self.tab[alpha][x] = beta
        self.tab[beta][x ^ 1] = alpha
        return beta

    def _merge(self, k, l):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = (k, l) if k < l else (l, k)
            self.p[hi] = lo
            self.n_live -= 1
            self._queue.append(hi)

    def coincidence(self, alpha, beta):
        self._merge(alpha, beta)
        tab = self.tab
        while self._queue:
            gamma = self._queue.popleft()
            for x in range(4):
                delta = tab[gamma][x]
                if delta is None:
                    continue
                tab[delta][x ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if tab[mu][x] is not None:
                    self._merge(nu, tab[mu][x])
                elif tab[nu][x ^ 1] is not None:
                    self._merge(mu, tab[nu][x ^ 1])
                else:
                    tab[mu][x] = nu
                    tab[nu][x ^ 1] = mu

    def scan_and_fill(self, alpha, word):
        tab = self.tab
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and tab[f][word[i]] is not None:
                f = tab[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and tab[b][word[j] ^ 1] is not None:
                b = tab[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                tab[f][word[i]] = b
                tab[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])


def _enumerate(subgroup_words, cap):
    """Run HLT until the table is closed; return the finished table."""
    t = _CosetTable(cap)
    for w in subgroup_words:
        if w:
            t.scan_and_fill(t.rep(0), w)
    # Sweep until a full pass defines nothing and coincides nothing.
    while True:
        dirty = False
        alpha = 0
        while alpha < len(t.tab):
            if t.rep(alpha) == alpha:
                for rel in _RELATORS:
                    before = t.n_live
                    t.scan_and_fill(alpha, rel)
                    if before != t.n_live:
                        dirty = True
                    if t.rep(alpha) != alpha:
                        break
                if t.rep(alpha) == alpha:
                    for x in range(4):
                        if t.tab[alpha][x] is None:
                            t.define(alpha, x)
                            dirty = True
            alpha += 1
        if not dirty:
            return t


def coset_action(gens, cap=10000):
    """Permutation action of (a, b) on the cosets of <gens> in SL2(Z).

    Returns a pair of image lists (one per letter a, b) over cosets
    relabelled 0..index-1, with coset 0 the subgroup itself.
    """
    words = [_amalgam_letters(matrix_to_word(g)) for g in gens]
    t = _enumerate(words, cap)
    live = [k for k in range(len(t.tab)) if t.rep(k) == k]
    number = {k: i for i, k in enumerate(live)}
    act_a = [number[t.rep(t.tab[k][_A])] for k in live]
    act_b = [number[t.rep(t.tab[k][_B])] for k in live]
    return act_a, act_b


def index_in_sl2(gens, cap=10000):
    """Exact index in SL2(Z) of the subgroup generated by ``gens``.

    Raises :class:`IndexCapExceeded` when the enumeration needs more than
    ``cap`` live cosets (the index is then finite-but-large or infinite).
    """
    for g in gens:
        if g.det() != 1:
            raise ValueError("all generators must have determinant 1")
    act_a, _ = coset_action(gens, cap)
    return len(act_a)


def contains_minus_identity(gens, cap=10000):
    """Whether -I lies in the subgroup generated by ``gens``.

    -I = S^2 = a^2; it is in the subgroup iff a^2 stabilises coset 0 of
    the closed table.
    """
    act_a, _ = coset_action(gens, cap)
    return act_a[act_a[0]] == 0
