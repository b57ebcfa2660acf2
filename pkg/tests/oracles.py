"""Independent reference implementations used to check the package.

None of these import the code they check beyond plain geometry.
"""
from __future__ import annotations

from collections import deque

from pairbot.geometry import Point, neighbors

# offsets written out again rather than imported
_STEPS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


def bfs_hops(src, window):
    seen = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for dx, dy in _STEPS:
            w = (u[0] + dx, u[1] + dy)
            if w in window and w not in seen:
                seen[w] = seen[u] + 1
                q.append(w)
    return seen


def _reach(free, sources, banned=frozenset(), cut_edge=None):
    start = [s for s in sources if s in free and s not in banned]
    seen = set(start)
    q = deque(start)
    while q:
        u = q.popleft()
        for w in neighbors(u):
            if w in free and w not in seen and w not in banned:
                if cut_edge and {u, w} == cut_edge:
                    continue
                seen.add(w)
                q.append(w)
    return seen


def surface_by_definition(obj):
    obj = set(obj)
    return {q for p in obj for q in neighbors(p)} - obj


def non_coating_by_cuts(obj, robots, free):
    """Surface points with fewer than two disjoint robot paths, by Menger.

    Paths may share robot points (the sources) and the target. Two such
    paths exist iff the target is reachable and no single non-robot vertex
    and no single robot-to-target edge separates the robots from it.
    """
    robots = frozenset(robots) & free
    reach_without = {v: _reach(free, robots, banned={v}) for v in free - robots}
    base = _reach(free, robots)
    out = set()
    for p in surface_by_definition(obj):
        if p not in free or p not in base:
            out.add(p)
            continue
        if p in robots:
            continue
        if any(p not in r for v, r in reach_without.items() if v != p):
            out.add(p)
            continue
        for s in robots & neighbors(p):
            if p not in _reach(free, robots, cut_edge={s, p}):
                out.add(p)
                break
    return out


def simple_paths(free, robots, target, limit=500_000):
    """All simple paths from some robot point to ``target`` that touch a
    robot point only at their start."""
    out = []
    path = []
    on_path = set()
    adj = {u: [(u[0] + dx, u[1] + dy) for dx, dy in _STEPS if (u[0] + dx, u[1] + dy) in free] for u in free}

    def walk(u):
        path.append(u)
        on_path.add(u)
        if u == target:
            out.append(tuple(path))
            if len(out) > limit:
                raise RuntimeError("window too large for path enumeration")
        else:
            for w in adj[u]:
                if w not in on_path and (w not in robots or w == target):
                    walk(w)
        path.pop()
        on_path.discard(u)

    for s in robots:
        walk(s)
    return out


def non_coating_by_path_pairs(obj, robots, free):
    """Same question answered by listing every pair of simple paths."""
    robots = frozenset(robots) & free
    out = set()
    for p in surface_by_definition(obj):
        if p not in free:
            out.add(p)
            continue
        if p in robots:
            continue
        paths = simple_paths(free, robots, p)
        inner = [frozenset(path[1:-1]) for path in paths]
        ok = any(not (inner[i] & inner[j]) for i in range(len(paths)) for j in range(i + 1, len(paths)))
        if not ok:
            out.add(p)
    return out


def fixed_polyhexes(max_cells):
    """All connected cell sets of size <= max_cells, up to translation
    (normalised so the lexicographically smallest cell is the origin)."""
    seen = {frozenset({Point(0, 0)})}
    layer = set(seen)
    for _ in range(max_cells - 1):
        nxt = set()
        for shape in layer:
            for c in shape:
                for n in neighbors(c):
                    if n in shape:
                        continue
                    grown = shape | {n}
                    m = min(grown)
                    norm = frozenset(Point(p.x - m.x, p.y - m.y) for p in grown)
                    if norm not in seen:
                        seen.add(norm)
                        nxt.add(norm)
        layer = nxt
    return seen


def center_cell(shape):
    return min(shape, key=lambda c: (max(max(abs(c.x - p.x), abs(c.y - p.y), abs((c.x + c.y) - (p.x + p.y)))
                                         for p in shape), c))
