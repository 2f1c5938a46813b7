import numpy as np
import pytest

from vknot import (
    Move,
    StaleMoveError,
    apply_move,
    apply_shadow_move,
    enumerate_moves,
    linking_matrix,
    parse,
    presentations,
    serialize,
    universe,
    validate,
)
from vknot.generate import random_diagram, random_planar_diagram
from vknot.moves import KINDS, R1_ADD, R1_REMOVE, R2_ADD, R2_REMOVE, R3, r3_catalog
from vknot.search import canonical_key

from conftest import KINK, TREFOIL, VIRTUAL_TREFOIL
from oracles import alexander_colorings, brute_force_r3_triples, geometric_r3_patterns

DELTA = {R1_ADD: 1, R1_REMOVE: -1, R2_ADD: 2, R2_REMOVE: -2, R3: 0}


def _random(rng, max_crossings=6, max_comps=3):
    return random_diagram(rng, int(rng.integers(0, max_crossings + 1)), int(rng.integers(1, max_comps + 1)))


def _r3_rich(rng):
    """Start from a planar diagram, then add R2 bigons, which tends to create R3 sites."""
    d = random_planar_diagram(rng, int(rng.integers(1, 3)), int(rng.integers(3, 6)))
    for _ in range(2):
        if d.n_crossings > 6:
            break
        ms = enumerate_moves(d, [R2_ADD])
        d = apply_move(d, ms[int(rng.integers(len(ms)))])
    return d


def test_kink_has_one_r1_remove():
    assert len(enumerate_moves(parse(KINK), [R1_REMOVE])) == 1


def test_unknot_has_no_removals():
    assert enumerate_moves(parse("@"), [R1_REMOVE, R2_REMOVE, R3]) == []


def test_kink_removal_and_addition():
    (m,) = enumerate_moves(parse(KINK), [R1_REMOVE])
    assert serialize(apply_move(parse(KINK), m)) == "@"
    add = Move(R1_ADD, ((0, 0),), sign=1, order="OU")
    assert serialize(apply_move(parse("@"), add)) == "O1+,U1+"


def test_enumeration_is_sorted_and_deterministic(rng):
    for _ in range(50):
        d = _random(rng)
        ms = enumerate_moves(d)
        assert ms == sorted(ms, key=Move.sort_key)
        assert ms == enumerate_moves(parse(serialize(d)))


def test_trefoil_r3_matches_brute_force():
    # no two over-passes are adjacent on the alternating trefoil, so no R3 site
    d = parse("O1+,U2+,O3+,U1+,O2+,U3+")
    moves = enumerate_moves(d, [R3])
    assert brute_force_r3_triples(d, geometric_r3_patterns()) == set()
    assert moves == []


def test_r3_catalog_is_the_geometric_one():
    geo = geometric_r3_patterns()
    assert len(geo) == 16
    assert r3_catalog() == frozenset(geo)
    flip = {"xy": "yx", "yx": "xy", "xz": "zx", "zx": "xz", "yz": "zy", "zy": "yz"}
    for top, mid, bot, s in geo:
        assert (flip[top], flip[mid], flip[bot], s) in geo


def _r3_triples(d):
    out = set()
    for m in enumerate_moves(d, [R3]):
        out.add(frozenset(d.components[c][i].crossing_id for c, i in m.site))
    return out


def test_r3_enumeration_matches_brute_force(rng):
    geo = geometric_r3_patterns()
    hits = 0
    for _ in range(300):
        d = _r3_rich(rng) if rng.random() < 0.7 else _random(rng, 6, 2)
        expected = brute_force_r3_triples(d, geo)
        assert _r3_triples(d) == expected
        hits += bool(expected)
    assert hits > 20


def test_moves_are_sound(rng):
    trials = 0
    while trials < 10_000:
        d = _random(rng, 6)
        ms = enumerate_moves(d)
        for k in rng.choice(len(ms), size=min(len(ms), 30), replace=False):
            m = ms[int(k)]
            r = apply_move(d, m)
            assert validate(r) is None
            assert r.n_crossings - d.n_crossings == DELTA[m.kind]
            assert r.n_components == d.n_components
            trials += 1


def test_fresh_ids():
    d = parse("O3+,U3+,O7-,U7-")
    r = apply_move(d, Move(R2_ADD, ((0, 0), (0, 2)), sign=1, over=0, parallel=True))
    assert set(r.crossing_ids()) == {3, 7, 8, 9}


def test_stale_site_rejected():
    d = parse(VIRTUAL_TREFOIL)
    with pytest.raises(StaleMoveError):
        apply_move(d, Move(R1_REMOVE, ((0, 0), (0, 1))))
    with pytest.raises(StaleMoveError):
        apply_move(d, Move(R1_ADD, ((0, 9),), sign=1, order="OU"))
    with pytest.raises(StaleMoveError):
        apply_move(d, Move(R3, ((0, 0), (0, 1), (0, 2), (0, 3), (0, 0), (0, 1))))


def _equal_up_to_relabel(a, b):
    return canonical_key(a) == canonical_key(b)


def test_removals_have_inverse_adds(rng):
    checked = 0
    for _ in range(400):
        d = _r3_rich(rng) if rng.random() < 0.5 else _random(rng, 6)
        for m in enumerate_moves(d, [R1_REMOVE, R2_REMOVE]):
            r = apply_move(d, m)
            inv = R1_ADD if m.kind == R1_REMOVE else R2_ADD
            assert any(_equal_up_to_relabel(apply_move(r, a), d) for a in enumerate_moves(r, [inv]))
            checked += 1
    assert checked > 100


def test_adds_have_inverse_removals(rng):
    for _ in range(150):
        d = _random(rng, 4)
        ms = enumerate_moves(d, [R1_ADD, R2_ADD])
        for k in rng.choice(len(ms), size=min(len(ms), 10), replace=False):
            r = apply_move(d, ms[int(k)])
            inv = R1_REMOVE if ms[int(k)].kind == R1_ADD else R2_REMOVE
            assert any(_equal_up_to_relabel(apply_move(r, x), d) for x in enumerate_moves(r, [inv]))


def test_r3_is_an_involution(rng):
    checked = 0
    for _ in range(300):
        d = _r3_rich(rng)
        for m in enumerate_moves(d, [R3]):
            ids = frozenset(d.components[c][i].crossing_id for c, i in m.site)
            r = apply_move(d, m)
            back = [x for x in enumerate_moves(r, [R3])
                    if frozenset(r.components[c][i].crossing_id for c, i in x.site) == ids]
            assert len(back) == 1
            assert apply_move(r, back[0]) == d
            checked += 1
    assert checked > 30


def test_universe_compatibility(rng):
    for _ in range(300):
        d = _r3_rich(rng) if rng.random() < 0.5 else _random(rng, 5)
        ms = enumerate_moves(d)
        for k in rng.choice(len(ms), size=min(len(ms), 10), replace=False):
            m = ms[int(k)]
            assert universe(apply_move(d, m)) == apply_shadow_move(universe(d), m)


def test_r3_preserves_crossings_and_linking(rng):
    for _ in range(200):
        d = _r3_rich(rng)
        for m in enumerate_moves(d, [R3]):
            r = apply_move(d, m)
            assert r.n_crossings == d.n_crossings
            assert (linking_matrix(r) == linking_matrix(d)).all()


@pytest.mark.parametrize("p, t", [(3, 2), (5, 2), (5, 3), (7, 3)])
def test_quandle_colorings_are_move_invariant(rng, p, t):
    for _ in range(150):
        d = _r3_rich(rng) if rng.random() < 0.5 else _random(rng, 5, 2)
        base = alexander_colorings(presentations(d)[1], p, t)
        for m in enumerate_moves(d, [R1_REMOVE, R2_REMOVE, R3]) + enumerate_moves(d, [R1_ADD])[:4]:
            assert alexander_colorings(presentations(apply_move(d, m))[1], p, t) == base
        ms = enumerate_moves(d, [R2_ADD])
        for k in rng.choice(len(ms), size=min(len(ms), 8), replace=False):
            assert alexander_colorings(presentations(apply_move(d, ms[int(k)]))[1], p, t) == base


def test_move_json_round_trip(rng):
    d = _r3_rich(rng)
    for m in enumerate_moves(d)[:50]:
        assert Move.from_dict(m.to_dict()) == m
