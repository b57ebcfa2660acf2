"""Robots, pairbots, configurations and what a robot can see.

Robot ``r`` belongs to pair ``r // 2``; robots ``2k`` and ``2k + 1`` are
buddies. Robot indices only exist inside the engine, a :class:`Snapshot`
never carries one.
"""
from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional

from .geometry import DIRECTION_OFFSETS, HERE, LABELS, Point, as_point, dist, is_connected, label_between

MAX_SEEN = 2  # weak multiplicity detection


class CorruptionError(RuntimeError):
    """An engine-maintained invariant no longer holds (a bug, not user error)."""


class SceneError(ValueError):
    """A scene description is malformed or violates the model's assumptions."""


class PairState(enum.Enum):
    SHORT = "short"
    LONG = "long"


class MoveKind(enum.Enum):
    EXCLUSIVE = "exclusive"  # one robot of a short pair steps out
    CLOSE_UP = "close-up"  # a robot of a long pair joins its buddy
    STAY = "stay"


@dataclass(frozen=True)
class Decision:
    """Output of an algorithm's compute step for one robot."""

    target: int
    kind: MoveKind
    rule: int = 0  # line number of the guard that fired


@dataclass(frozen=True)
class MoveIntent:
    mover: int
    target: int
    kind: MoveKind

    def __post_init__(self):
        if self.kind is not MoveKind.STAY and self.target not in LABELS:
            raise ValueError(f"move target must be in 1..6, got {self.target}")


@dataclass(frozen=True)
class Snapshot:
    occupy: tuple[int, ...]  # indexed by label 0..6
    buddy: int
    object_labels: frozenset[int] = frozenset()
    is_head: bool = False

    def __post_init__(self):
        if len(self.occupy) != 7:
            raise ValueError("occupy needs one entry per label 0..6")
        if any(v not in (0, 1, 2) for v in self.occupy):
            raise ValueError(f"occupancy values must be 0, 1 or 2: {self.occupy}")

    @classmethod
    def make(cls, occupy: dict[int, int] | None = None, buddy: int = HERE,
             objects: Iterable[int] = (), is_head: bool = False) -> "Snapshot":
        """Build a snapshot from a sparse occupancy dict (handy in tests).

        The observing robot is always counted at label 0, and a long buddy is
        counted at its label, unless the dict says otherwise.
        """
        occ = [0] * 7
        occ[HERE] = 2 if buddy == HERE else 1
        if buddy != HERE:
            occ[buddy] = 1
        for k, v in (occupy or {}).items():
            occ[k] = v
        return cls(tuple(occ), buddy, frozenset(objects), is_head)

    @property
    def short(self) -> bool:
        return self.buddy == HERE


@dataclass(frozen=True)
class Configuration:
    positions: tuple[Point, ...]
    obj: frozenset[Point] = frozenset()
    head_pair: Optional[int] = None

    @property
    def n_robots(self) -> int:
        return len(self.positions)

    @property
    def n_pairs(self) -> int:
        return len(self.positions) // 2

    @cached_property
    def counts(self) -> Counter:
        return Counter(self.positions)

    def pair_points(self, k: int) -> tuple[Point, Point]:
        return self.positions[2 * k], self.positions[2 * k + 1]

    def occupied(self) -> set[Point]:
        return set(self.counts)

    def with_positions(self, positions) -> "Configuration":
        return Configuration(tuple(positions), self.obj, self.head_pair)

    def key(self) -> tuple:
        return self.positions

    def translated(self, d) -> "Configuration":
        return Configuration(
            tuple(p + d for p in self.positions),
            frozenset(p + d for p in self.obj),
            self.head_pair,
        )


def buddy_of(r: int) -> int:
    return r ^ 1


def pair_state(c: Configuration, k: int) -> PairState:
    a, b = c.pair_points(k)
    d = dist(a, b)
    if d == 0:
        return PairState.SHORT
    if d == 1:
        return PairState.LONG
    raise CorruptionError(f"pair {k} is split: {tuple(a)} and {tuple(b)} are {d} apart")


def take_snapshot(c: Configuration, r: int) -> Snapshot:
    here = c.positions[r]
    counts = c.counts
    obj = c.obj
    x, y = here
    occ = [min(MAX_SEEN, counts.get(here, 0))]
    objs = set()
    # hot path: plain tuples hash and compare like Points
    for label, (dx, dy) in zip(LABELS, DIRECTION_OFFSETS):
        q = (x + dx, y + dy)
        occ.append(min(MAX_SEEN, counts.get(q, 0)))
        if q in obj:
            objs.add(label)
    buddy = label_between(here, c.positions[buddy_of(r)])
    is_head = c.head_pair is not None and r // 2 == c.head_pair
    return Snapshot(tuple(occ), buddy, frozenset(objs), is_head)


def safety_violations(c: Configuration) -> list[str]:
    """Model invariants that must hold at every observable instant."""
    out = []
    for p, n in sorted(c.counts.items()):
        if n > MAX_SEEN:
            out.append(f"crowded: {n} robots at {list(p)}")
        if p in c.obj:
            out.append(f"on-object: robot at {list(p)}")
    for k in range(c.n_pairs):
        a, b = c.pair_points(k)
        if dist(a, b) > 1:
            out.append(f"split: pair {k} spans {list(a)}-{list(b)}")
    return out


def apply_moves(c: Configuration, intents: Iterable[MoveIntent]) -> Configuration:
    """Relocate every mover at once. Nothing is validated here; callers run
    :func:`safety_violations` on the result so breaches get recorded."""
    pos = list(c.positions)
    for m in intents:
        if m.kind is MoveKind.STAY:
            continue
        pos[m.mover] = c.positions[m.mover].step(m.target)
    return c.with_positions(pos)


def apply_move(c: Configuration, m: MoveIntent) -> tuple[Configuration, list[str]]:
    out = apply_moves(c, [m])
    return out, safety_violations(out)


def is_line_formed(c: Configuration) -> bool:
    if not c.positions:
        return True
    counts = c.counts
    ys = {p.y for p in counts}
    if len(ys) != 1:
        return False
    xs = sorted(p.x for p in counts)
    if xs[-1] - xs[0] + 1 != len(xs):
        return False
    if max(counts.values()) > MAX_SEEN:
        return False
    spans = []
    for k in range(c.n_pairs):
        a, b = c.pair_points(k)
        if a != b:
            spans.append(frozenset((a, b)))
    return len(spans) == len(set(spans))


# -- scenes ---------------------------------------------------------------

@dataclass(frozen=True)
class PairSpec:
    a: Point
    b: Point
    head: bool = False


@dataclass(frozen=True)
class Scene:
    pairs: tuple[PairSpec, ...]
    obj: frozenset[Point] = field(default_factory=frozenset)

    @property
    def head_pair(self) -> Optional[int]:
        for k, p in enumerate(self.pairs):
            if p.head:
                return k
        return None

    def configuration(self) -> Configuration:
        pos = []
        for p in self.pairs:
            pos += [p.a, p.b]
        return Configuration(tuple(pos), self.obj, self.head_pair)

    def to_dict(self) -> dict:
        pairs = []
        for p in self.pairs:
            d = {"a": list(p.a), "b": list(p.b)}
            if p.head:
                d["head"] = True
            pairs.append(d)
        return {"pairs": pairs, "object": [list(q) for q in sorted(self.obj)]}

    @classmethod
    def from_configuration(cls, c: Configuration) -> "Scene":
        pairs = tuple(
            PairSpec(*c.pair_points(k), head=(k == c.head_pair)) for k in range(c.n_pairs)
        )
        return cls(pairs, c.obj)


def _point_field(raw, where: str) -> Point:
    if (not isinstance(raw, (list, tuple)) or len(raw) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw)):
        raise SceneError(f"{where}: expected [x, y] integer pair, got {raw!r}")
    return as_point(raw)


def parse_scene(data: dict) -> Scene:
    if not isinstance(data, dict):
        raise SceneError("scene: top level must be an object")
    raw_pairs = data.get("pairs")
    if not isinstance(raw_pairs, list):
        raise SceneError("pairs: expected a list")
    pairs = []
    for i, rp in enumerate(raw_pairs):
        if not isinstance(rp, dict) or "a" not in rp or "b" not in rp:
            raise SceneError(f"pairs[{i}]: each pair needs both robots 'a' and 'b' (robot count must be even)")
        a = _point_field(rp["a"], f"pairs[{i}].a")
        b = _point_field(rp["b"], f"pairs[{i}].b")
        head = rp.get("head", False)
        if not isinstance(head, bool):
            raise SceneError(f"pairs[{i}].head: expected a boolean")
        if dist(a, b) > 1:
            raise SceneError(f"pairs[{i}]: robots {list(a)} and {list(b)} are {dist(a, b)} apart (max 1)")
        pairs.append(PairSpec(a, b, head))
    obj = frozenset(_point_field(q, f"object[{j}]") for j, q in enumerate(data.get("object", [])))
    scene = Scene(tuple(pairs), obj)
    validate_scene(scene)
    return scene


def validate_scene(scene: Scene) -> None:
    heads = [k for k, p in enumerate(scene.pairs) if p.head]
    if len(heads) > 1:
        raise SceneError(f"pairs: at most one head pair allowed, got {heads}")
    counts = Counter()
    for p in scene.pairs:
        counts[p.a] += 1
        counts[p.b] += 1
    for q, n in sorted(counts.items()):
        if n > MAX_SEEN:
            raise SceneError(f"pairs: {n} robots at {list(q)} (max 2 per point)")
        if q in scene.obj:
            raise SceneError(f"pairs: robot placed on object point {list(q)}")
    if not is_connected(scene.obj):
        raise SceneError("object: points do not form a connected shape")


def load_scene(path) -> Scene:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SceneError(f"{path}: line {e.lineno}: {e.msg}") from None
    return parse_scene(data)


def line_scene(spans: Iterable[tuple[int, int]], y: int = 0, obj: Iterable = (),
               head: Optional[int] = None) -> Scene:
    """Scene of pairs along the row ``y``; each span is ``(x_a, x_b)``.

    With ``head=None`` the pair holding the largest x is flagged as head when an
    object is present.
    """
    spans = list(spans)
    obj = frozenset(as_point(p) for p in obj)
    if head is None and obj:
        head = max(range(len(spans)), key=lambda k: (max(spans[k]), min(spans[k])))
    pairs = tuple(
        PairSpec(Point(xa, y), Point(xb, y), head=(k == head)) for k, (xa, xb) in enumerate(spans)
    )
    scene = Scene(pairs, obj)
    validate_scene(scene)
    return scene
