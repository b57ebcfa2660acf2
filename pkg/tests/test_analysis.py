import pytest
from hypothesis import given, settings, strategies as st

from oracles import (
    center_cell,
    fixed_polyhexes,
    non_coating_by_cuts,
    non_coating_by_path_pairs,
    surface_by_definition,
)
from pairbot.analysis import (
    Region,
    analyze_scene,
    check_coating_solved,
    check_marching_progress,
    coating_set,
    disjoint_path_count,
    free_window,
    non_coating_set,
    surface_set,
)
from pairbot.engine import AsyncRandom, FSync, replay, run
from pairbot.fixtures import (
    BLOB,
    SCENES,
    cavity_object,
    hexagon_object,
    pocket_object,
    short_line,
)
from pairbot.geometry import Point, ball, neighbors
from pairbot.model import Configuration, line_scene

P = Point
ROBOTS = {P(-5, 0), P(-4, 0)}


def test_surface_examples():
    assert surface_set({(0, 0)}) == neighbors((0, 0))
    assert len(surface_set({(0, 0), (1, 0)})) == 8
    with pytest.raises(ValueError):
        surface_set({(0, 0), (3, 0)})
    with pytest.raises(ValueError):
        surface_set(set())


def test_pocket_replica_sets():
    # ring of radius 2 around (5, 0) with the cell at (3, 0) removed
    obj = pocket_object((5, 0), mouth=4)
    c = P(5, 0)
    inner = ball(c, 1) - {c}
    outer = (ball(c, 3) - ball(c, 2)) - {P(2, 0)}  # (2, 0) only touches the gap
    mouth = {P(3, 0)}
    assert surface_set(obj) == inner | outer | mouth
    sets = analyze_scene(short_line(19, front=0, obj=obj))
    assert sets["nonCoating"] == inner
    assert sets["coating"] == outer | mouth


def test_convex_objects_have_empty_non_coating():
    for r in (0, 1, 2):
        obj = hexagon_object((4, 0), r)
        assert non_coating_set(obj, {P(0, 0)}) == frozenset()
        assert coating_set(obj, {P(0, 0)}) == surface_set(obj)
    assert len(coating_set({(3, 0)}, {P(0, 0)})) == 6


def test_cavity_is_non_coating():
    obj = cavity_object((5, 0))
    sets = analyze_scene(short_line(3, front=0, obj=obj))
    inside = ball((5, 0), 1) - {P(5, 0)}  # the centre touches no object cell
    assert sets["nonCoating"] == inside
    assert not sets["coating"] & inside


def test_articulation_point():
    # a one-cell-wide corridor: its far end has a single way in
    obj = {P(x, y) for x, y in [(3, 1), (4, 1), (5, 1), (3, -1), (4, -1), (5, -1), (6, -1), (6, 0)]}
    assert P(5, 0) in non_coating_set(obj, {P(0, 0)})


def test_disjoint_path_count_basics():
    free = frozenset(ball((0, 0), 3))
    assert disjoint_path_count(free, {P(0, 0)}, P(2, 0)) == 2
    assert disjoint_path_count(free, {P(0, 0)}, P(0, 0)) == 2
    line = frozenset(P(x, 0) for x in range(5))
    assert disjoint_path_count(line, {P(0, 0)}, P(4, 0)) == 1
    assert disjoint_path_count(line, {P(0, 0)}, P(9, 0)) == 0


def test_options():
    obj = pocket_object((5, 0), mouth=4)
    robots = {P(0, 0)}
    base = non_coating_set(obj, robots)
    assert non_coating_set(obj, robots, source="each") == base
    assert non_coating_set(obj, robots | {P(0, 1)}, disjoint="full") >= non_coating_set(obj, robots | {P(0, 1)})
    with pytest.raises(ValueError):
        non_coating_set(obj, robots, source="each", disjoint="full")
    with pytest.raises(ValueError):
        non_coating_set(obj, set())
    with pytest.raises(ValueError):
        non_coating_set(obj, {P(4, 1)} | set(obj))


FIXTURE_OBJECTS = [
    hexagon_object((4, 0), 1),
    hexagon_object((5, 0), 2),
    BLOB,
    cavity_object((5, 0)),
    frozenset({P(3, 0)}),
] + [pocket_object((6, 0), m) for m in range(1, 7)]


@pytest.mark.parametrize("obj", FIXTURE_OBJECTS)
def test_window_stability(obj):
    robots = {P(x, 0) for x in range(-3, 1)}
    assert non_coating_set(obj, robots, margin=3) == non_coating_set(obj, robots, margin=6)


@pytest.mark.parametrize("obj", FIXTURE_OBJECTS)
def test_partition_and_cut_oracle(obj):
    robots = {P(x, 0) for x in range(-3, 1)}
    s = surface_set(obj)
    n = non_coating_set(obj, robots)
    c = coating_set(obj, robots)
    assert s == surface_by_definition(obj)
    assert n <= s and not (n & c) and (n | c) == s
    free = free_window(obj, robots)
    assert n == non_coating_by_cuts(obj, robots, free)


coord = st.integers(-20, 20)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FIXTURE_OBJECTS), coord, coord)
def test_translation_invariance(obj, dx, dy):
    robots = {P(x, 0) for x in range(-3, 1)}
    t = (dx, dy)
    moved = frozenset(p + t for p in obj)
    assert surface_set(moved) == {p + t for p in surface_set(obj)}
    assert non_coating_set(moved, {r + t for r in robots}) == {p + t for p in non_coating_set(obj, robots)}


def small_cases():
    """Objects up to 4 cells in a radius-2 window, robots on the window's
    edge: small enough to list every simple path."""
    for shape in sorted(fixed_polyhexes(4), key=sorted):
        c = center_cell(shape)
        obj = frozenset(p - c for p in shape)
        window = ball((0, 0), 2)
        free = frozenset(window - obj)
        for robots in ({P(-2, 0)}, {P(-2, 0), P(-2, 1)}, {P(0, 2)}, {P(2, -2)}):
            if robots <= free:
                yield obj, robots, free


def test_cut_oracle_and_max_flow_match_path_pairs():
    cases = nontrivial = 0
    for obj, robots, free in small_cases():
        truth = non_coating_by_path_pairs(obj, robots, free)
        assert non_coating_by_cuts(obj, robots, free) == truth
        assert non_coating_set(obj, robots, window=free | obj) == truth
        cases += 1
        nontrivial += bool(truth & free)
    assert cases > 100 and nontrivial > 10


# -- checkers -----------------------------------------------------------------

def test_coating_solved_on_a_finished_run(coating):
    scene = SCENES["hexagon"]()
    t = run(scene, coating, FSync(), 5000)
    final = replay(t)[-1]
    rep = check_coating_solved(final, scene)
    assert rep.solved and not rep.missing and not rep.non_short_pairs and not rep.enabled


def test_coating_unsolved_diagnostics(coating):
    scene = SCENES["hexagon"]()
    final = replay(run(scene, coating, FSync(), 5000))[-1]
    cset = analyze_scene(scene)["coating"]
    # empty one coating point by moving its pair far away
    k = next(k for k in range(final.n_pairs) if final.positions[2 * k] in cset)
    pos = list(final.positions)
    hole = pos[2 * k]
    pos[2 * k] = pos[2 * k + 1] = P(-40, 0)
    rep = check_coating_solved(final.with_positions(pos), scene)
    assert not rep.solved and hole in rep.missing
    # make one pair long instead
    pos = list(final.positions)
    far = P(-40, 0)
    k = next(k for k in range(final.n_pairs) if final.positions[2 * k] not in cset)
    pos[2 * k], pos[2 * k + 1] = far, far + (1, 0)
    rep = check_coating_solved(final.with_positions(pos), scene)
    assert not rep.solved and rep.non_short_pairs == [k]


def test_marching_progress(marching):
    scene = line_scene([(0, 0), (1, 1), (2, 2)])
    t = run(scene, marching, AsyncRandom(1), 2000)
    rep = check_marching_progress(replay(t), t.events)
    assert rep.line_formed_always
    assert len(rep.head_advances) >= 10
    # a stationary pair: nothing to report
    still = [Configuration((P(0, 0), P(0, 0)))] * 5
    rep = check_marching_progress(still)
    assert rep.line_formed_always and rep.head_advances == []


def test_region():
    r = Region.around([(0, 0), (2, -1)], margin=3)
    assert (r.xmin, r.xmax, r.ymin, r.ymax) == (-3, 5, -4, 3)
    assert (5, 3) in r and (6, 0) not in r
    with pytest.raises(ValueError):
        Region.around([])
