"""Breadth-first enumeration of ASYNC interleavings.

States are ``(positions, pending intents)`` keyed on exact coordinates. Every
reachable state is checked against the safety monitor and an optional
predicate; each failure comes with the event sequence that reaches it.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .algorithms import Algorithm, get_algorithm
from .engine import AsyncState, Event, step_async
from .model import Configuration, is_line_formed, safety_violations

PREDICATES: dict[str, Callable[[Configuration], bool]] = {
    "line-formed": is_line_formed,
    "true": lambda c: True,
    "false": lambda c: False,
}


@dataclass
class Counterexample:
    kind: str  # "predicate" or "safety"
    depth: int
    events: list[dict]
    detail: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "depth": self.depth, "events": self.events, "detail": self.detail}


@dataclass
class ExploreReport:
    states: int
    depth: int  # deepest level fully expanded
    states_by_depth: list[int]
    violations: int
    counterexamples: list[Counterexample]
    complete: bool  # False when the state budget cut the search short

    def to_dict(self) -> dict:
        return {
            "states": self.states,
            "depth": self.depth,
            "statesByDepth": self.states_by_depth,
            "violations": self.violations,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "complete": self.complete,
        }


def _resolve_predicate(predicate) -> tuple[Optional[str], Optional[Callable]]:
    if predicate is None:
        return None, None
    if isinstance(predicate, str):
        try:
            return predicate, PREDICATES[predicate]
        except KeyError:
            raise ValueError(f"unknown predicate {predicate!r}; known: {sorted(PREDICATES)}") from None
    return getattr(predicate, "__name__", "predicate"), predicate


def _expand(args) -> list[list[tuple[Event, AsyncState]]]:
    states, algo_name, scan = args
    algo = get_algorithm(algo_name, scan)
    return [[(ev, step_async(s, ev, algo)) for ev in s.legal_events()] for s in states]


def explore(config: Configuration, algo: Algorithm, depth: int,
            predicate: Union[str, Callable, None] = "line-formed",
            max_states: int = 2_000_000, max_counterexamples: int = 10,
            jobs: int = 1) -> ExploreReport:
    """Enumerate all ASYNC event sequences of length <= ``depth``.

    With ``jobs > 1`` each BFS level is expanded by worker processes; merging
    happens in frontier order so the report does not depend on ``jobs``.
    Only named predicates (see ``PREDICATES``) can be shipped to workers, but
    predicates are evaluated in this process anyway.
    """
    _, check = _resolve_predicate(predicate)
    start = AsyncState.initial(config)
    parent: dict[tuple, Optional[tuple[tuple, Event]]] = {start.key(): None}
    counterexamples: list[Counterexample] = []
    violations = 0

    def path_to(key) -> list[dict]:
        evs = []
        while parent[key] is not None:
            key, ev = parent[key]
            evs.append(ev.to_dict())
        return evs[::-1]

    def inspect(state: AsyncState, d: int) -> None:
        nonlocal violations
        found = []
        bad = safety_violations(state.config)
        if bad:
            found.append(("safety", bad))
        if check is not None and not check(state.config):
            found.append(("predicate", []))
        for kind, detail in found:
            violations += 1
            if len(counterexamples) < max_counterexamples:
                counterexamples.append(Counterexample(kind, d, path_to(state.key()), detail))

    inspect(start, 0)
    frontier = [start]
    by_depth = [1]
    complete = True
    reached = 0
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for d in range(1, depth + 1):
            if not frontier:
                break
            if pool is not None:
                chunk = max(1, len(frontier) // (jobs * 4))
                parts = [frontier[i:i + chunk] for i in range(0, len(frontier), chunk)]
                expanded = [x for part in pool.map(_expand, [(p, algo.name, algo.scan) for p in parts]) for x in part]
            else:
                expanded = [[(ev, step_async(s, ev, algo)) for ev in s.legal_events()] for s in frontier]
            nxt = []
            for s, succs in zip(frontier, expanded):
                for ev, t in succs:
                    k = t.key()
                    if k in parent:
                        continue
                    parent[k] = (s.key(), ev)
                    inspect(t, d)
                    nxt.append(t)
                    if len(parent) >= max_states:
                        complete = False
                        break
                if not complete:
                    break
            by_depth.append(len(nxt))
            frontier = nxt
            if not complete:
                break
            reached = d
    finally:
        if pool is not None:
            pool.shutdown()
    if complete:
        reached = depth  # includes running out of new states early
    return ExploreReport(len(parent), reached, by_depth, violations, counterexamples, complete)
