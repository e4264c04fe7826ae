import itertools
import random

import pytest

from origamikz import (
    InvalidShapeError,
    OrbitCapExceeded,
    Origami,
    Perm,
    act_generator,
    canonical_form,
    format_origami,
    is_primitive,
    make_l_origami,
    orbit,
    parse_origami,
    relabel,
    same_orbit,
    singularity_data,
)
from util import GENS, random_transitive_pair

TORUS = Origami(Perm.identity(1), Perm.identity(1))


def test_l_origami_shapes():
    o = make_l_origami(2, 4)
    assert o.degree == 5
    assert o.h.cycle_string() == "(1 2)"
    assert o.v.cycle_string() == "(1 3 4 5)"
    o = make_l_origami(2, 2)
    assert o.degree == 3
    assert (o.h.cycle_string(), o.v.cycle_string()) == ("(1 2)", "(1 3)")
    o = make_l_origami(3, 3)
    assert o.degree == 5
    assert (o.h.cycle_string(), o.v.cycle_string()) == ("(1 2 3)", "(1 4 5)")


@pytest.mark.parametrize("n,m", [(1, 4), (4, 1), (0, 2), (2, 1)])
def test_l_origami_rejects_degenerate_shapes(n, m):
    with pytest.raises(InvalidShapeError):
        make_l_origami(n, m)


def test_singularity_data_l22_against_hand_commutator():
    # independent oracle: expand v h v^-1 h^-1 by hand for h=(1 2), v=(1 3)
    h = {1: 2, 2: 1, 3: 3}
    v = {1: 3, 2: 2, 3: 1}
    hi = {val: key for key, val in h.items()}
    vi = {val: key for key, val in v.items()}
    comm = {x: v[h[vi[hi[x]]]] for x in (1, 2, 3)}
    # one 3-cycle: every square moved, orbit of 1 has length 3
    assert comm[1] != 1 and comm[comm[comm[1]]] == 1
    sd = singularity_data(make_l_origami(2, 2))
    assert sd.cone_orders == (2,)
    assert sd.genus == 2
    assert sd.is_h2


def test_singularity_data_torus_and_l24():
    assert singularity_data(TORUS).cone_orders == ()
    assert singularity_data(TORUS).genus == 1
    assert singularity_data(make_l_origami(2, 4)).is_h2


def test_singularity_sum_rule_on_random_pairs():
    rng = random.Random(7)
    for _ in range(50):
        o = random_transitive_pair(rng)
        sd = singularity_data(o)
        assert sum(sd.cone_orders) == 2 * sd.genus - 2


def test_action_inverses():
    o = make_l_origami(2, 4)
    assert act_generator(act_generator(o, "T"), "T^-1") == o
    assert act_generator(act_generator(o, "S"), "S^-1") == o
    x = o
    for _ in range(4):
        x = act_generator(x, "S")
    assert x == o


def test_action_preserves_stratum():
    rng = random.Random(21)
    o = make_l_origami(3, 4)
    for _ in range(20):
        o = act_generator(o, rng.choice(GENS))
        assert singularity_data(o).is_h2
        assert o.degree == 6


def test_canonical_form_idempotent_and_conjugation_invariant():
    rng = random.Random(3)
    o = make_l_origami(2, 4)
    c = canonical_form(o)
    assert canonical_form(c) == c
    for _ in range(25):
        g = list(range(o.degree))
        rng.shuffle(g)
        assert canonical_form(relabel(o, Perm(g))) == c


def test_canonical_form_specific_relabelling():
    o = make_l_origami(2, 4)
    g = Perm.from_cycles([(1, 5, 2)], degree=5)
    assert canonical_form(relabel(o, g)) == canonical_form(o)


def test_orbit_l22_matches_exhaustive_enumeration():
    # oracle: enumerate every degree-3 origami pair directly
    forms = set()
    for him in itertools.permutations(range(3)):
        for vim in itertools.permutations(range(3)):
            try:
                o = Origami(Perm(him), Perm(vim))
            except ValueError:
                continue
            if singularity_data(o).is_h2:
                forms.add(canonical_form(o))
    orb = orbit(make_l_origami(2, 2))
    assert orb == frozenset(forms)
    assert len(orb) == 3


def test_orbit_closed_under_generators():
    orb = orbit(make_l_origami(2, 4))
    for member in orb:
        for g in GENS:
            assert canonical_form(act_generator(member, g)) in orb


def test_orbit_membership_and_separation():
    o24 = make_l_origami(2, 4)
    assert same_orbit(o24, act_generator(o24, "T"))
    assert not same_orbit(o24, make_l_origami(3, 3))


def test_orbit_cap():
    with pytest.raises(OrbitCapExceeded) as err:
        orbit(make_l_origami(2, 4), cap=2)
    assert len(err.value.partial) >= 2


def test_primitivity():
    # unit holonomy loops exist: square 3 is h-fixed and square 2 v-fixed
    o24 = make_l_origami(2, 4)
    assert o24.h(2) == 2 and o24.v(1) == 1
    assert is_primitive(o24)
    o33 = make_l_origami(3, 3)
    assert o33.h(3) == 3 and o33.v(1) == 1
    assert is_primitive(o33)
    # double cover of the torus in both directions: period lattice 2Z x 2Z
    dd = Origami(
        Perm.from_cycles([(1, 2), (3, 4)], degree=4),
        Perm.from_cycles([(1, 3), (2, 4)], degree=4),
    )
    assert not is_primitive(dd)


def test_text_format_round_trip():
    o = make_l_origami(2, 4)
    assert parse_origami(format_origami(o)) == o
    assert parse_origami("h=(1 2)\nv=(1 3 4 5)\n") == o
    assert parse_origami("d=1\nh=()\nv=()") == TORUS
    assert parse_origami("# comment\nd=6\nh=(1 2 3)\nv=(3 4 5 6)").degree == 6


def test_text_format_rejects_garbage():
    with pytest.raises(ValueError):
        parse_origami("h=(1 2)")
    with pytest.raises(ValueError):
        parse_origami("h=1 2\nv=(1 3)")
    with pytest.raises(ValueError):
        parse_origami("h=(0 1)\nv=(1 2)")
    # disconnected surface
    with pytest.raises(ValueError):
        parse_origami("d=4\nh=(1 2)\nv=(3 4)")
