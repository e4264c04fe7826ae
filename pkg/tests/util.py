"""Shared helpers for the test suite: seeded random surfaces and directions."""

from origamikz import (
    Direction,
    Origami,
    Perm,
    act_generator,
    make_l_origami,
    relabel,
    singularity_data,
)

GENS = ["S", "T", "S^-1", "T^-1"]


def random_h2_origami(rng, dmin=4, dmax=12):
    """A pseudo-random H(2) origami of degree in [dmin, dmax].

    Tries random transitive pairs first; if the stratum filter keeps
    missing, falls back to an L-shape pushed around by the SL2(Z) action
    and relabelled, which is always in H(2).
    """
    for _ in range(80):
        d = rng.randrange(dmin, dmax + 1)
        h = list(range(d))
        v = list(range(d))
        rng.shuffle(h)
        rng.shuffle(v)
        try:
            o = Origami(Perm(h), Perm(v))
        except ValueError:
            continue
        if singularity_data(o).is_h2:
            return o
    n = rng.randrange(2, 7)
    m = rng.randrange(max(2, dmin + 1 - n), min(7, dmax + 1 - n) + 1)
    o = make_l_origami(n, m)
    for _ in range(rng.randrange(1, 7)):
        o = act_generator(o, rng.choice(GENS))
    g = list(range(o.degree))
    rng.shuffle(g)
    return relabel(o, Perm(g))


def random_transitive_pair(rng, dmin=2, dmax=10):
    """Any random origami (no stratum restriction)."""
    while True:
        d = rng.randrange(dmin, dmax + 1)
        h = list(range(d))
        v = list(range(d))
        rng.shuffle(h)
        rng.shuffle(v)
        try:
            return Origami(Perm(h), Perm(v))
        except ValueError:
            continue


def random_direction(rng, bound=7):
    while True:
        p = rng.randrange(-bound, bound + 1)
        q = rng.randrange(-bound, bound + 1)
        if (p, q) != (0, 0):
            d = Direction(p, q)
            if abs(d.p) <= bound and abs(d.q) <= bound:
                return d
