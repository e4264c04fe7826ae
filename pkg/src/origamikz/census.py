"""Exhaustive enumeration of H(2) origamis of a given degree.

A degree-d origami lies in H(2) iff the commutator v h v^-1 h^-1 is a
single 3-cycle.  Writing w = v h v^-1, that means w = c h for some
3-cycle c with w of the same cycle type as h.  The enumeration therefore
runs over one canonical h per cycle type, all 3-cycles c whose product
keeps the type, and the full coset v0 Z(h) of conjugators taking h to
c h; transitive pairs are kept and deduplicated by canonical form.

This is exact for every degree, but the centralizer cosets blow up with
the number of fixed points of h: degrees up to 8 take well under a
second, 9 takes seconds, and 10..12 take minutes and beyond.
"""

from itertools import permutations, product

from .origami import Origami, Perm, canonical_form, is_primitive


def _partitions(n, cap=None):
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _canonical_of_type(ptype):
    """Images of the permutation (0 1 .. l1-1)(l1 ..) .. for a cycle type."""
    images = []
    pos = 0
    for length in ptype:
        images.extend(range(pos + 1, pos + length))
        images.append(pos)
        pos += length
    return tuple(images)


def _cycles_of(images):
    d = len(images)
    seen = [False] * d
    out = []
    for i in range(d):
        if seen[i]:
            continue
        c = [i]
        seen[i] = True
        j = images[i]
        while j != i:
            c.append(j)
            seen[j] = True
            j = images[j]
        out.append(tuple(c))
    return out


def _cycle_type(images):
    return tuple(sorted((len(c) for c in _cycles_of(images)), reverse=True))


def _three_cycles(d):
    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                yield (a, b, c)
                yield (a, c, b)


def _apply_cycle(images, cyc):
    """Images of cycle * images (apply images first, then the 3-cycle)."""
    a, b, c = cyc
    move = {a: b, b: c, c: a}
    return tuple(move.get(x, x) for x in images)


def _conjugator(h_cycles, w_cycles):
    """Some g with g h g^-1 = w, matching cycles of equal length in order."""
    d = sum(len(c) for c in h_cycles)
    by_len_h, by_len_w = {}, {}
    for c in h_cycles:
        by_len_h.setdefault(len(c), []).append(c)
    for c in w_cycles:
        by_len_w.setdefault(len(c), []).append(c)
    g = [None] * d
    for length, hs in by_len_h.items():
        ws = by_len_w[length]
        for hc, wc in zip(hs, ws):
            for hx, wx in zip(hc, wc):
                g[hx] = wx
    return tuple(g)


def _centralizer(images):
    """All permutations commuting with ``images``, generated lazily.

    Blocks of equal-length cycles may be permuted and each cycle rotated;
    the blocks are filled in recursively so nothing is materialised.
    """
    d = len(images)
    cycles = _cycles_of(images)
    by_len = {}
    for c in cycles:
        by_len.setdefault(len(c), []).append(c)
    blocks = [block for _, block in sorted(by_len.items())]

    def emit(block_idx, z):
        if block_idx == len(blocks):
            yield tuple(z)
            return
        block = blocks[block_idx]
        length = len(block[0])
        m = len(block)
        for tau in permutations(range(m)):
            for rots in product(range(length), repeat=m):
                for i, cyc in enumerate(block):
                    target = block[tau[i]]
                    r = rots[i]
                    for k in range(length):
                        z[cyc[k]] = target[(k + r) % length]
                yield from emit(block_idx + 1, z)

    yield from emit(0, [None] * d)


def _transitive(h, v):
    d = len(h)
    seen = [False] * d
    stack = [0]
    seen[0] = True
    n = 1
    while stack:
        i = stack.pop()
        for j in (h[i], v[i]):
            if not seen[j]:
                seen[j] = True
                n += 1
                stack.append(j)
    return n == d


def h2_origamis(degree, primitive_only=True):
    """All H(2) origamis of a degree up to equivalence, canonical forms.

    With ``primitive_only`` the absolute-period lattice must be all of
    Z^2 (proper torus covers of H(2) origamis of smaller degree are
    dropped).  Sorted deterministically.
    """
    if degree < 3:
        return []
    found = set()
    for ptype in _partitions(degree):
        h = _canonical_of_type(ptype)
        h_cycles = _cycles_of(h)
        seen_w = set()
        for cyc in _three_cycles(degree):
            w = _apply_cycle(h, cyc)
            if w == h or w in seen_w:
                continue
            if _cycle_type(w) != ptype:
                continue
            seen_w.add(w)
            v0 = _conjugator(h_cycles, _cycles_of(w))
            for z in _centralizer(h):
                v = tuple(v0[z[i]] for i in range(degree))
                if not _transitive(h, v):
                    continue
                o = Origami(Perm(h), Perm(v))
                if primitive_only and not is_primitive(o):
                    continue
                found.add(canonical_form(o))
    return sorted(
        found, key=lambda o: (o.h.images, o.v.images)
    )


def orbit_partition(origamis, cap=10**6):
    """Partition a set of canonical origamis into SL2(Z) orbits."""
    from .origami import orbit

    remaining = set(origamis)
    parts = []
    while remaining:
        seed = min(remaining, key=lambda o: (o.h.images, o.v.images))
        orb = orbit(seed, cap)
        part = orb & remaining
        assert seed in part
        remaining -= part
        parts.append(frozenset(part))
    return parts
