"""Named scenes used by tests, scripts and the shipped ``scenes/`` files."""
from __future__ import annotations

import itertools

from .geometry import Point, ball, label_offset
from .model import Configuration, Scene, is_line_formed, line_scene


def short_line(n_pairs: int, front: int = 0, y: int = 0, obj=()) -> Scene:
    """``n_pairs`` short pairs on consecutive points ending at ``x = front``."""
    return line_scene([(x, x) for x in range(front - n_pairs + 1, front + 1)], y=y, obj=obj)


def line_arrangements(n_pairs: int) -> list[tuple[tuple[int, int], ...]]:
    """Every line-formed placement of ``n_pairs`` pairs on the row y = 0, up
    to translation and relabelling of pairs. Spans are ``(x_a, x_b)`` with
    ``x_b - x_a`` in {0, 1}; the leftmost point is x = 0."""
    choices = [(x, x) for x in range(2 * n_pairs)] + [(x, x + 1) for x in range(2 * n_pairs)]
    seen = set()
    out = []
    for spans in itertools.combinations_with_replacement(choices, n_pairs):
        lo = min(a for a, _ in spans)
        spans = tuple(sorted((a - lo, b - lo) for a, b in spans))
        if spans in seen:
            continue
        seen.add(spans)
        c = Configuration(tuple(Point(x, 0) for s in spans for x in s))
        if is_line_formed(c):
            out.append(spans)
    return out


# objects ------------------------------------------------------------------

def hexagon_object(center=(4, 0), radius: int = 1) -> frozenset[Point]:
    return ball(center, radius)


def pocket_object(center=(6, 0), mouth: int = 4) -> frozenset[Point]:
    """Radius-2 ring with one cell removed; the gap faces label ``mouth``."""
    c = Point(*center)
    dx, dy = label_offset(mouth)
    return (ball(c, 2) - ball(c, 1)) - {Point(c.x + 2 * dx, c.y + 2 * dy)}


def cavity_object(center=(6, 0)) -> frozenset[Point]:
    """Closed radius-2 ring: its inside is unreachable."""
    return ball(center, 2) - ball(center, 1)


# irregular blob with a concave bay, used as a coating fixture
BLOB = frozenset(Point(x, y) for x, y in [
    (4, 0), (5, 0), (6, 0), (4, 1), (5, 1), (3, 2), (4, 2), (5, -1), (6, -1), (7, -1),
])


# scenes -------------------------------------------------------------------

def two_pair_line() -> Scene:
    """A short pair at x=0 and a long pair over x=1..2."""
    return line_scene([(0, 0), (1, 2)])


def three_pair_line() -> Scene:
    return line_scene([(0, 0), (1, 1), (2, 2)])


def single_point_coating() -> Scene:
    return short_line(7, front=0, obj=[(3, 0)])


def hexagon_coating() -> Scene:
    return short_line(13, front=0, obj=hexagon_object((4, 0)))


def blob_coating() -> Scene:
    return short_line(16, front=0, obj=BLOB)


def pocket_coating() -> Scene:
    return short_line(19, front=0, obj=pocket_object((5, 0), mouth=4))


def cavity_scene() -> Scene:
    return short_line(3, front=0, obj=cavity_object((5, 0)))


SCENES = {
    "two-pair-line": two_pair_line,
    "three-pair-line": three_pair_line,
    "single-point": single_point_coating,
    "hexagon": hexagon_coating,
    "blob": blob_coating,
    "pocket": pocket_coating,
    "cavity": cavity_scene,
}

COATING_FIXTURES = ("hexagon", "blob", "pocket")
