"""Surface / non-coating / coating sets and the problem checkers.

The grid is infinite, so path questions are answered inside a finite window:
the bounding box of the object and the robots grown by ``margin`` cells.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .algorithms import Algorithm, get_algorithm
from .engine import is_terminated
from .geometry import Point, as_point, is_connected, neighbors
from .model import Configuration, PairState, Scene, is_line_formed, pair_state

DEFAULT_MARGIN = 3
_INF = 1 << 30


@dataclass(frozen=True)
class Region:
    xmin: int
    xmax: int
    ymin: int
    ymax: int

    @classmethod
    def around(cls, points: Iterable, margin: int = DEFAULT_MARGIN) -> "Region":
        pts = list(points)
        if not pts:
            raise ValueError("cannot build a window around no points")
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return cls(min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin)

    def points(self) -> frozenset[Point]:
        return frozenset(
            Point(x, y) for x in range(self.xmin, self.xmax + 1) for y in range(self.ymin, self.ymax + 1)
        )

    def __contains__(self, p) -> bool:
        return self.xmin <= p[0] <= self.xmax and self.ymin <= p[1] <= self.ymax


def _check_object(obj) -> frozenset[Point]:
    obj = frozenset(as_point(p) for p in obj)
    if not obj:
        raise ValueError("object must be nonempty")
    if not is_connected(obj):
        raise ValueError("object must be connected")
    return obj


def surface_set(obj) -> frozenset[Point]:
    obj = _check_object(obj)
    return frozenset(q for p in obj for q in neighbors(p)) - obj


# -- vertex-disjoint paths ---------------------------------------------------

def _max_flow(cap: dict, source, sink, limit: int) -> int:
    """Edmonds-Karp on a sparse capacity dict; stops once ``limit`` is reached."""
    adj = defaultdict(set)
    for u, v in cap:
        adj[u].add(v)
        adj[v].add(u)
    flow = defaultdict(int)
    total = 0
    while total < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and cap.get((u, v), 0) - flow[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        v = sink
        while parent[v] is not None:
            u = parent[v]
            flow[(u, v)] += 1
            flow[(v, u)] -= 1
            v = u
        total += 1
    return total


def disjoint_path_count(free: frozenset, sources, sink, *, limit: int = 2,
                        uncapacitated_sources: bool = True) -> int:
    """Number (capped at ``limit``) of paths from the source set to ``sink``
    that share no vertex other than their endpoints.

    ``free`` is the vertex set of the graph. Each vertex becomes an in/out
    node pair with capacity 1, except the sink and, when
    ``uncapacitated_sources`` is true, the source vertices.
    """
    sources = frozenset(sources) & free
    if sink in sources:
        return limit
    cap = {}
    for v in free:
        open_node = v == sink or (uncapacitated_sources and v in sources)
        cap[((v, 0), (v, 1))] = _INF if open_node else 1
        for w in neighbors(v):
            if w in free:
                cap[((v, 1), (w, 0))] = 1
    for s in sources:
        cap[("S", (s, 0))] = _INF
    return _max_flow(cap, "S", (sink, 1), limit)


def free_window(obj, robot_points, margin: int = DEFAULT_MARGIN, window=None) -> frozenset[Point]:
    if window is None:
        window = Region.around(list(obj) + list(robot_points), margin).points()
    return frozenset(as_point(p) for p in window) - frozenset(obj)


def non_coating_set(obj, robot_points, *, margin: int = DEFAULT_MARGIN, window=None,
                    source: str = "union", disjoint: str = "internal") -> frozenset[Point]:
    """Surface points lacking two disjoint paths from the robots.

    ``source="union"`` lets paths start at any robot point (default);
    ``source="each"`` requires one robot with two paths on its own.
    ``disjoint="internal"`` lets the two paths share their start point
    (default); ``"full"`` requires distinct start points, which only makes
    sense with ``source="union"``.
    """
    obj = _check_object(obj)
    robots = frozenset(as_point(p) for p in robot_points)
    if not robots:
        raise ValueError("need at least one robot point")
    if robots & obj:
        raise ValueError("robot points overlap the object")
    if source not in ("union", "each") or disjoint not in ("internal", "full"):
        raise ValueError(f"bad option source={source!r} disjoint={disjoint!r}")
    if disjoint == "full" and source == "each":
        raise ValueError("fully disjoint paths need distinct start points; use source='union'")
    free = free_window(obj, robots, margin, window)
    out = set()
    for p in surface_set(obj):
        if p not in free:
            out.add(p)  # outside the window: unreachable by construction
            continue
        if source == "union":
            n = disjoint_path_count(free, robots, p, uncapacitated_sources=(disjoint == "internal"))
        else:
            n = max(disjoint_path_count(free, {r}, p) for r in robots)
        if n < 2:
            out.add(p)
    return frozenset(out)


def coating_set(obj, robot_points, **kw) -> frozenset[Point]:
    return surface_set(obj) - non_coating_set(obj, robot_points, **kw)


def analyze_scene(scene: Scene, **kw) -> dict[str, frozenset[Point]]:
    c = scene.configuration()
    robots = set(c.positions)
    s = surface_set(scene.obj)
    n = non_coating_set(scene.obj, robots, **kw)
    return {"surface": s, "nonCoating": n, "coating": s - n}


def sorted_points(points) -> list[list[int]]:
    return [list(p) for p in sorted(points)]


# -- checkers -----------------------------------------------------------------

@dataclass
class CoatingReport:
    solved: bool
    missing: frozenset
    non_short_pairs: list
    enabled: bool  # some robot can still move

    def to_dict(self) -> dict:
        return {"solved": self.solved, "missing": sorted_points(self.missing),
                "nonShortPairs": self.non_short_pairs, "enabled": self.enabled}


def check_coating_solved(c: Configuration, initial: Scene, algo: Optional[Algorithm] = None,
                         coating: Optional[frozenset] = None, **kw) -> CoatingReport:
    """Judge ``c`` against the coating set of the *initial* scene."""
    if coating is None:
        coating = analyze_scene(initial, **kw)["coating"]
    algo = algo or get_algorithm("coating")
    occupied = set(c.positions)
    missing = frozenset(p for p in coating if p not in occupied)
    non_short = [k for k in range(c.n_pairs) if pair_state(c, k) is not PairState.SHORT]
    enabled = not is_terminated(c, algo)
    return CoatingReport(not missing and not non_short and not enabled, missing, non_short, enabled)


@dataclass
class MarchingReport:
    line_formed_always: bool
    head_advances: list[int]
    first_bad_frame: Optional[int] = None

    def to_dict(self) -> dict:
        return {"lineFormedAlways": self.line_formed_always, "headAdvances": self.head_advances,
                "firstBadFrame": self.first_bad_frame}


def check_marching_progress(frames: list[Configuration], events: Optional[list[dict]] = None) -> MarchingReport:
    """``frames[0]`` is the initial configuration, ``frames[i + 1]`` the one
    after event ``i`` (as returned by :func:`pairbot.engine.replay`)."""
    bad = None
    for i, c in enumerate(frames):
        if not is_line_formed(c):
            bad = i
            break
    advances = []
    prev = max((p.x for p in frames[0].positions), default=None)
    for i, c in enumerate(frames[1:]):
        top = max((p.x for p in c.positions), default=None)
        if top is not None and top > prev:
            advances.append(events[i]["index"] if events else i)
        prev = top
    return MarchingReport(bad is None, advances, bad)
