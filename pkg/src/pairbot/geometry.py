"""Triangular grid geometry.

Points are integer pairs ``(x, y)``. Two points are adjacent when their
offset is one of ``(±1, 0)``, ``(0, ±1)``, ``(1, -1)`` or ``(-1, 1)``.

Local labels follow total agreement: every robot uses the same table.
Label 0 is the robot's own point; labels 1..6 go clockwise starting from
the positive x direction::

    label   offset
      1     ( 1,  0)
      2     ( 1, -1)
      3     ( 0, -1)
      4     (-1,  0)
      5     (-1,  1)
      6     ( 0,  1)
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

HERE = 0
LABELS = (1, 2, 3, 4, 5, 6)

_OFFSETS = {
    1: (1, 0),
    2: (1, -1),
    3: (0, -1),
    4: (-1, 0),
    5: (-1, 1),
    6: (0, 1),
}
_LABEL_OF_OFFSET = {v: k for k, v in _OFFSETS.items()}
DIRECTION_OFFSETS = tuple(_OFFSETS[l] for l in LABELS)


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Point(-self.x, -self.y)

    def step(self, label: int) -> "Point":
        """The point reached by following ``label`` from here (label 0 stays)."""
        if label == HERE:
            return self
        dx, dy = label_offset(label)
        return Point(self.x + dx, self.y + dy)


def as_point(p: Iterable[int]) -> Point:
    x, y = p
    return Point(int(x), int(y))


def dist(u, v) -> int:
    dx = u[0] - v[0]
    dy = u[1] - v[1]
    if dx * dy >= 0:
        return abs(dx) + abs(dy)
    return abs(dx) + abs(dy) - min(abs(dx), abs(dy))


def _check_direction(label: int) -> None:
    if label not in _OFFSETS:
        raise ValueError(f"label must be a direction in 1..6, got {label!r}")


def label_offset(label: int) -> tuple[int, int]:
    _check_direction(label)
    return _OFFSETS[label]


def next_label(label: int, s: int) -> int:
    """Rotate ``label`` clockwise by ``s`` steps (``s`` may be negative)."""
    _check_direction(label)
    return (label - 1 + s) % 6 + 1


def opposite(label: int) -> int:
    return next_label(label, 3)


def label_between(here, there) -> int:
    """Label under which ``there`` appears to a robot standing at ``here``.

    Raises ValueError when the two points are neither equal nor adjacent.
    """
    d = (there[0] - here[0], there[1] - here[1])
    if d == (0, 0):
        return HERE
    try:
        return _LABEL_OF_OFFSET[d]
    except KeyError:
        raise ValueError(f"{tuple(there)} is not adjacent to {tuple(here)}") from None


def neighbors(p) -> frozenset[Point]:
    x, y = p
    return frozenset(Point(x + dx, y + dy) for dx, dy in _OFFSETS.values())


def ball(center, radius: int) -> frozenset[Point]:
    """All points within ``radius`` of ``center``."""
    cx, cy = center
    out = set()
    for dx in range(-radius, radius + 1):
        for dy in range(-radius, radius + 1):
            if dist((0, 0), (dx, dy)) <= radius:
                out.add(Point(cx + dx, cy + dy))
    return frozenset(out)


def bfs_distances(source, allowed: Iterable | None = None) -> dict[Point, int]:
    """Hop distances from ``source`` over the adjacency graph.

    ``allowed`` restricts the vertex set; it must be finite when given. With no
    restriction the search would not terminate, so callers pass a window.
    """
    if allowed is None:
        raise ValueError("bfs_distances needs a finite vertex set")
    allowed = set(allowed)
    src = as_point(source)
    seen = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in neighbors(u):
            if w in allowed and w not in seen:
                seen[w] = seen[u] + 1
                queue.append(w)
    return seen


def is_connected(points: Iterable) -> bool:
    pts = {as_point(p) for p in points}
    if not pts:
        return True
    start = next(iter(pts))
    return len(bfs_distances(start, pts)) == len(pts)


def screen_xy(p) -> tuple[float, float]:
    """Cartesian position with unit spacing between adjacent points."""
    return (p[0] + p[1] / 2.0, p[1] * 3 ** 0.5 / 2.0)
