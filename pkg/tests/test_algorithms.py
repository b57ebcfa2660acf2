import itertools

import pytest

from pairbot.algorithms import (
    COATING_RULES,
    MARCHING_RULES,
    coating_compute,
    coating_dir,
    dir_rule,
    enabled_rules,
    get_algorithm,
    marching_compute,
)
from pairbot.geometry import LABELS, next_label
from pairbot.model import MoveKind, Snapshot

ALL_OBJECT_SETS = [frozenset(c) for r in range(7) for c in itertools.combinations(LABELS, r)]


def valid_snapshots(objects=None, heads=(False, True)):
    """Every snapshot a robot could actually take."""
    for occ in itertools.product((0, 1, 2), repeat=7):
        if occ[0] == 0:
            continue
        for obj in (ALL_OBJECT_SETS if objects is None else objects):
            if any(occ[l] for l in obj):
                continue
            for buddy in range(7):
                if buddy == 0 and occ[0] != 2:
                    continue
                if buddy and (occ[buddy] == 0 or buddy in obj):
                    continue
                for h in heads:
                    yield Snapshot(occ, buddy, obj, h)


# -- marching ---------------------------------------------------------------

def test_marching_examples():
    d = marching_compute(Snapshot.make({1: 0}))
    assert (d.target, d.kind, d.rule) == (1, MoveKind.EXCLUSIVE, 1)
    d = marching_compute(Snapshot.make({1: 1, 4: 0, 0: 1}, buddy=1))
    assert (d.target, d.rule) == (1, 2)
    for occ in itertools.product((0, 1, 2), repeat=6):
        s = Snapshot((1,) + occ[:3] + (1,) + occ[4:], 4)
        assert marching_compute(s) is None
    assert marching_compute(Snapshot.make({1: 2})) is None


def test_marching_line_3_closes_up_under_a_stranger():
    d = marching_compute(Snapshot.make({0: 2, 1: 1, 4: 1}, buddy=1))
    assert (d.target, d.rule) == (1, 3)


def test_marching_only_moves_forward_and_rule_families_disjoint():
    algo = get_algorithm("marching")
    both = 0
    for s in valid_snapshots(objects=[frozenset()], heads=(False,)):
        d = marching_compute(s)
        assert d is None or d.target == 1
        on = enabled_rules(MARCHING_RULES, s, 1)
        assert not (1 in on and len(on) > 1)
        if {2, 3} <= set(on):
            both += 1
            assert "marching-lines-2-and-3-both-enabled" in algo.notes(s)
    assert both > 0  # the overlap is real; it is logged, not an error


# -- dir ----------------------------------------------------------------------

def test_dir_worked_examples():
    assert coating_dir(Snapshot.make()) == 1
    assert coating_dir(Snapshot.make(objects={1})) == 2
    assert coating_dir(Snapshot.make(objects={2, 3, 4})) == 5
    assert coating_dir(Snapshot.make({3: 1}, objects={1, 4})) == 2
    assert dir_rule(Snapshot.make({3: 1}, objects={1, 4})) == (2, 3)
    # without the robot on label 3 nothing matches
    assert coating_dir(Snapshot.make(objects={1, 4})) is None


def test_dir_enclosed_stays():
    s = Snapshot.make(objects=set(LABELS))
    assert coating_dir(s) is None
    assert coating_compute(s) is None


def test_dir_never_targets_object_exhaustive():
    for occ in itertools.product((0, 1, 2), repeat=7):
        for obj in ALL_OBJECT_SETS:
            s = Snapshot(occ, 0, obj)
            for order in ("asc", "desc"):
                d = coating_dir(s, order)
                assert d is None or d not in obj


def dir_by_definition(s, order):
    # the three cases written out directly, as an independent check
    O = s.object_labels
    if not O:
        return 1
    scan = LABELS if order == "asc" else LABELS[::-1]
    hits = [l for l in scan if l in O and all(next_label(l, k) not in O for k in (1, 2, 3))]
    if hits:
        return next_label(hits[0], 1)
    hits = [l for l in scan if l in O and next_label(l, 1) not in O
            and s.occupy[next_label(l, 2)] >= 1 and next_label(l, 3) in O]
    return next_label(hits[0], 1) if hits else None


def test_dir_matches_definition_exhaustive():
    for occ in itertools.product((0, 1, 2), repeat=6):
        for obj in ALL_OBJECT_SETS:
            s = Snapshot((1,) + occ, 0, obj)
            for order in ("asc", "desc"):
                assert coating_dir(s, order) == dir_by_definition(s, order)


def test_scan_disagreement_is_flagged():
    # walls on both sides: only rule 3 can match, and only with a robot beside
    s = Snapshot.make(objects={1, 4})
    assert dir_rule(s, "asc")[0] is None
    s = Snapshot.make({3: 1, 6: 1}, objects={1, 4})
    asc, desc = coating_dir(s, "asc"), coating_dir(s, "desc")
    assert (asc, desc) == (2, 5)
    notes = get_algorithm("coating").notes(s)
    assert notes and notes[0].startswith("dir-scan-disagrees:rule3")


# -- coating compute ------------------------------------------------------------

def test_coating_examples():
    d = coating_compute(Snapshot.make({1: 0}, is_head=True))
    assert (d.target, d.kind, d.rule) == (1, MoveKind.EXCLUSIVE, 1)
    assert coating_compute(Snapshot.make({1: 0})) is None
    d = coating_compute(Snapshot.make({1: 1}))
    assert (d.target, d.rule) == (1, 2)
    d = coating_compute(Snapshot.make({0: 2, 1: 1}, buddy=1))
    assert (d.target, d.kind, d.rule) == (1, MoveKind.CLOSE_UP, 3)
    d = coating_compute(Snapshot.make({0: 1, 1: 1, 4: 0}, buddy=1))
    assert (d.target, d.rule) == (1, 4)


def test_coating_uses_one_direction_per_activation():
    # object on label 1: dir = 2 for every guard
    s = Snapshot.make({2: 1}, objects={1})
    d = coating_compute(s)
    assert (d.target, d.rule) == (2, 2)


def test_coating_line_4_matches_marching_line_2():
    n = 0
    for s in valid_snapshots(objects=[frozenset()]):
        assert coating_dir(s) == 1
        c4 = 4 in enabled_rules(COATING_RULES, s, 1)
        m2 = 2 in enabled_rules(MARCHING_RULES, s, 1)
        assert c4 == m2
        n += c4
    assert n > 0


def test_compute_is_pure():
    for s in itertools.islice(valid_snapshots(), 0, 200000, 37):
        assert coating_compute(s) == coating_compute(s)
        assert marching_compute(s) == marching_compute(s)


def test_unknown_names():
    with pytest.raises(ValueError):
        get_algorithm("flocking")
    with pytest.raises(ValueError):
        get_algorithm("coating", scan="random")
