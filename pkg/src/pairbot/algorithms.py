"""Marching and object-coating algorithms as guarded rules over a Snapshot.

Each rule's guard sees the snapshot and the direction chosen for this
activation. Marching always heads for label 1; coating asks :func:`coating_dir`
once per activation and reuses that answer in every guard.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .geometry import HERE, LABELS, next_label, opposite
from .model import Decision, MoveKind, Snapshot

FORWARD = 1
BACKWARD = opposite(FORWARD)


@dataclass(frozen=True)
class GuardedRule:
    id: int
    guard: Callable[[Snapshot, int], bool]
    kind: MoveKind

    def fire(self, s: Snapshot, d: int) -> Decision:
        # every rule of both algorithms moves toward the chosen direction
        return Decision(d, self.kind, self.id)


def enabled_rules(rules, s: Snapshot, d: Optional[int]) -> list[int]:
    if d is None:
        return []
    return [r.id for r in rules if r.guard(s, d)]


def evaluate(rules, s: Snapshot, d: Optional[int]) -> Optional[Decision]:
    """First enabled rule in ascending id order, or None (stay)."""
    if d is None:
        return None
    for r in sorted(rules, key=lambda r: r.id):
        if r.guard(s, d):
            return r.fire(s, d)
    return None


MARCHING_RULES = (
    GuardedRule(1, lambda s, d: s.buddy == HERE and s.occupy[d] < 2, MoveKind.EXCLUSIVE),
    GuardedRule(2, lambda s, d: s.buddy == d and s.occupy[d] == 1 and s.occupy[BACKWARD] == 0,
                MoveKind.CLOSE_UP),
    GuardedRule(3, lambda s, d: s.buddy == d and s.occupy[d] == 1 and s.occupy[HERE] == 2,
                MoveKind.CLOSE_UP),
)


def marching_compute(s: Snapshot) -> Optional[Decision]:
    return evaluate(MARCHING_RULES, s, FORWARD)


def _scan(order: str):
    if order == "asc":
        return LABELS
    if order == "desc":
        return LABELS[::-1]
    raise ValueError(f"scan order must be 'asc' or 'desc', got {order!r}")


def dir_rule(s: Snapshot, order: str = "asc") -> tuple[Optional[int], int]:
    """``(direction, rule)`` chosen by the coating direction function.

    ``rule`` is 1, 2 or 3 for the matching case and 0 when nothing matched
    (direction None).
    """
    objs = s.object_labels
    if not objs:
        return FORWARD, 1
    labels = _scan(order)
    for li in labels:
        if li in objs and not {next_label(li, 1), next_label(li, 2), next_label(li, 3)} & objs:
            return next_label(li, 1), 2
    for li in labels:
        if (li in objs and next_label(li, 1) not in objs
                and s.occupy[next_label(li, 2)] >= 1 and next_label(li, 3) in objs):
            return next_label(li, 1), 3
    return None, 0


def coating_dir(s: Snapshot, order: str = "asc") -> Optional[int]:
    return dir_rule(s, order)[0]


COATING_RULES = (
    GuardedRule(1, lambda s, d: s.buddy == HERE and s.is_head and s.occupy[d] == 0,
                MoveKind.EXCLUSIVE),
    GuardedRule(2, lambda s, d: s.buddy == HERE and not s.is_head and s.occupy[d] == 1,
                MoveKind.EXCLUSIVE),
    GuardedRule(3, lambda s, d: (s.buddy != HERE and s.occupy[d] == 1 and s.occupy[HERE] >= 2
                                 and s.buddy == d), MoveKind.CLOSE_UP),
    GuardedRule(4, lambda s, d: (s.buddy != HERE and s.occupy[d] == 1 and not s.object_labels
                                 and s.occupy[BACKWARD] == 0 and s.buddy == d), MoveKind.CLOSE_UP),
)


def coating_compute(s: Snapshot, order: str = "asc") -> Optional[Decision]:
    return evaluate(COATING_RULES, s, coating_dir(s, order))


@dataclass(frozen=True)
class Algorithm:
    """A named snapshot -> decision function plus its rule table."""

    name: str
    rules: tuple[GuardedRule, ...]
    scan: str = "asc"

    def direction(self, s: Snapshot) -> Optional[int]:
        if self.name == "marching":
            return FORWARD
        return coating_dir(s, self.scan)

    def decide(self, s: Snapshot) -> Optional[Decision]:
        return evaluate(self.rules, s, self.direction(s))

    def enabled(self, s: Snapshot) -> list[int]:
        return enabled_rules(self.rules, s, self.direction(s))

    def notes(self, s: Snapshot) -> list[str]:
        """Situations the algorithm text leaves open, worth flagging in traces."""
        out = []
        if self.name == "marching":
            if {2, 3} <= set(self.enabled(s)):
                out.append("marching-lines-2-and-3-both-enabled")
        elif s.object_labels:
            asc, ra = dir_rule(s, "asc")
            desc, rd = dir_rule(s, "desc")
            if asc != desc:
                out.append(f"dir-scan-disagrees:rule{ra}:asc={asc}:desc={desc}")
        return out


ALGORITHM_NAMES = ("marching", "coating")


def get_algorithm(name: str, scan: str = "asc") -> Algorithm:
    _scan(scan)
    if name == "marching":
        return Algorithm("marching", MARCHING_RULES, scan)
    if name == "coating":
        return Algorithm("coating", COATING_RULES, scan)
    raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHM_NAMES)}")
