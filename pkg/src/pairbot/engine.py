"""Schedulers and the event loop.

Buddies are always activated together. Under ASYNC a pair's activation is
two events: ``look`` (snapshot both robots and compute) and ``move`` (apply
what was computed, however stale). Moves are atomic.

All randomness comes from one ``random.Random(seed)`` (MT19937) per run.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .algorithms import Algorithm, get_algorithm
from .model import (
    Configuration,
    CorruptionError,
    MoveIntent,
    MoveKind,
    PairState,
    Scene,
    apply_moves,
    pair_state,
    parse_scene,
    safety_violations,
    take_snapshot,
)
from .trace import TRACE_VERSION, Trace, digest


# -- schedulers -----------------------------------------------------------

@dataclass(frozen=True)
class FSync:
    name = "fsync"

    def to_dict(self):
        return {"kind": self.name}


@dataclass(frozen=True)
class SSync:
    seed: int = 0
    p: float = 0.5
    name = "ssync"

    def to_dict(self):
        return {"kind": self.name, "seed": self.seed, "p": self.p}


@dataclass(frozen=True)
class AsyncRandom:
    seed: int = 0
    name = "async-random"

    def to_dict(self):
        return {"kind": self.name, "seed": self.seed}


@dataclass(frozen=True)
class AsyncExhaustive:
    depth: int = 12
    name = "async-exhaustive"

    def to_dict(self):
        return {"kind": self.name, "depth": self.depth}


Scheduler = Union[FSync, SSync, AsyncRandom, AsyncExhaustive]
SCHEDULER_NAMES = ("fsync", "ssync", "async-random", "async-exhaustive")


def make_scheduler(name: str, seed: int = 0, depth: int = 12, p: float = 0.5) -> Scheduler:
    if name == "fsync":
        return FSync()
    if name == "ssync":
        return SSync(seed, p)
    if name == "async-random":
        return AsyncRandom(seed)
    if name == "async-exhaustive":
        return AsyncExhaustive(depth)
    raise ValueError(f"unknown scheduler {name!r}; choose from {', '.join(SCHEDULER_NAMES)}")


def scheduler_from_dict(d: dict) -> Scheduler:
    return make_scheduler(d["kind"], seed=d.get("seed", 0), depth=d.get("depth", 12), p=d.get("p", 0.5))


# -- one activation ---------------------------------------------------------

def pair_intents(c: Configuration, k: int, algo: Algorithm) -> tuple[MoveIntent, ...]:
    """Look + Compute for both robots of pair ``k``; stays are dropped."""
    ra, rb = 2 * k, 2 * k + 1
    da = algo.decide(take_snapshot(c, ra))
    db = algo.decide(take_snapshot(c, rb))
    if pair_state(c, k) is PairState.SHORT:
        # colocated buddies see identical snapshots, hence decide identically
        if da != db:
            raise CorruptionError(f"short pair {k} decided differently: {da} vs {db}")
        if da is None:
            return ()
        return (MoveIntent(ra, da.target, da.kind),)
    out = []
    for r, d in ((ra, da), (rb, db)):
        if d is not None:
            out.append(MoveIntent(r, d.target, d.kind))
    return tuple(out)


def pair_notes(c: Configuration, k: int, algo: Algorithm) -> list[str]:
    out = []
    for r in (2 * k, 2 * k + 1):
        for note in algo.notes(take_snapshot(c, r)):
            if note not in out:
                out.append(note)
    return out


def sync_round(c: Configuration, algo: Algorithm, active) -> tuple[Configuration, list[MoveIntent]]:
    intents = [m for k in sorted(active) for m in pair_intents(c, k, algo)]
    return apply_moves(c, intents), intents


def step_fsync(c: Configuration, algo: Algorithm) -> Configuration:
    return sync_round(c, algo, range(c.n_pairs))[0]


def step_ssync(c: Configuration, algo: Algorithm, active) -> Configuration:
    active = set(active)
    if not active:
        raise ValueError("SSYNC activation set must be nonempty")
    if not active <= set(range(c.n_pairs)):
        raise ValueError(f"unknown pairs in activation set: {sorted(active)}")
    return sync_round(c, algo, active)[0]


def is_terminated(c: Configuration, algo: Algorithm) -> bool:
    return all(not pair_intents(c, k, algo) for k in range(c.n_pairs))


# -- ASYNC ------------------------------------------------------------------

class SchedulingError(RuntimeError):
    """An event was issued that the ASYNC contract forbids."""


@dataclass(frozen=True)
class Event:
    kind: str  # "look", "move" or "round"
    pair: Optional[int] = None
    active: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        if self.kind == "round":
            return {"kind": self.kind, "active": list(self.active)}
        return {"kind": self.kind, "pair": self.pair}

    @classmethod
    def from_dict(cls, d: dict) -> "Event":
        if d["kind"] == "round":
            return cls("round", None, tuple(d["active"]))
        return cls(d["kind"], d["pair"])


@dataclass(frozen=True)
class AsyncState:
    config: Configuration
    # per pair: None when idle, else the intents computed at its last look
    pending: tuple[Optional[tuple[MoveIntent, ...]], ...]

    @classmethod
    def initial(cls, c: Configuration) -> "AsyncState":
        return cls(c, (None,) * c.n_pairs)

    def key(self) -> tuple:
        return self.config.positions, self.pending

    def legal_events(self) -> list[Event]:
        return [Event("look" if p is None else "move", k) for k, p in enumerate(self.pending)]

    def quiescent(self) -> bool:
        """No stored intent would move anybody."""
        return all(not p for p in self.pending)


def step_async(state: AsyncState, event: Event, algo: Algorithm) -> AsyncState:
    k = event.pair
    if k is None or not 0 <= k < len(state.pending):
        raise SchedulingError(f"no such pair: {k}")
    pending = list(state.pending)
    if event.kind == "look":
        if pending[k] is not None:
            raise SchedulingError(f"look({k}) while pair {k} still has a pending move")
        pending[k] = pair_intents(state.config, k, algo)
        return AsyncState(state.config, tuple(pending))
    if event.kind == "move":
        if pending[k] is None:
            raise SchedulingError(f"move({k}) without a preceding look")
        c = apply_moves(state.config, pending[k])
        pending[k] = None
        return AsyncState(c, tuple(pending))
    raise SchedulingError(f"unknown ASYNC event kind {event.kind!r}")


# -- run loop ---------------------------------------------------------------

def _moves_field(intents) -> list[list]:
    return [[m.mover, m.target] for m in intents if m.kind is not MoveKind.STAY]


def _event_record(index: int, ev: Event, intents, c: Configuration, notes) -> dict:
    rec = {"index": index, **ev.to_dict(), "moves": _moves_field(intents), "digest": digest(c),
           "violations": safety_violations(c) if ev.kind != "look" else []}
    if notes:
        rec["notes"] = notes
    return rec


def make_header(scene: Scene, algo: Algorithm, scheduler: Scheduler, max_events: int) -> dict:
    return {
        "version": TRACE_VERSION,
        "scene": scene.to_dict(),
        "algorithm": algo.name,
        "scan": algo.scan,
        "scheduler": scheduler.to_dict(),
        "seed": getattr(scheduler, "seed", None),
        "max_events": max_events,
        "initial_digest": digest(scene.configuration()),
    }


def _ssync_active(rng: random.Random, n: int, p: float) -> tuple[int, ...]:
    while True:
        active = tuple(k for k in range(n) if rng.random() < p)
        if active:
            return active


def run(scene: Scene, algo: Algorithm, scheduler: Scheduler, max_events: int) -> Trace:
    """Drive ``scheduler`` until termination or ``max_events`` events.

    Sync schedulers emit one ``round`` event per round; ASYNC emits separate
    ``look`` and ``move`` events.
    """
    if isinstance(scheduler, AsyncExhaustive):
        raise ValueError("async-exhaustive is a search, use explore()")
    if max_events < 1:
        raise ValueError("max_events must be positive")
    c = scene.configuration()
    trace = Trace(make_header(scene, algo, scheduler, max_events))
    n = c.n_pairs
    rng = random.Random(getattr(scheduler, "seed", 0))
    terminated = False
    if isinstance(scheduler, (FSync, SSync)):
        for i in range(max_events):
            if is_terminated(c, algo):
                terminated = True
                break
            active = tuple(range(n)) if isinstance(scheduler, FSync) else _ssync_active(rng, n, scheduler.p)
            notes = [x for k in active for x in pair_notes(c, k, algo)]
            c, intents = sync_round(c, algo, active)
            trace.events.append(_event_record(i, Event("round", None, active), intents, c, notes))
        else:
            terminated = is_terminated(c, algo)
    else:
        state = AsyncState.initial(c)
        config_done = is_terminated(c, algo)  # recomputed only when positions change
        for i in range(max_events):
            if n == 0 or (config_done and state.quiescent()):
                terminated = True
                break
            k = rng.randrange(n)
            ev = state.legal_events()[k]
            notes = pair_notes(state.config, k, algo) if ev.kind == "look" else []
            before = state
            state = step_async(state, ev, algo)
            intents = state.pending[k] if ev.kind == "look" else before.pending[k]
            trace.events.append(_event_record(i, ev, intents, state.config, notes))
            if ev.kind == "move" and intents:
                config_done = is_terminated(state.config, algo)
        else:
            terminated = config_done and state.quiescent()
        c = state.config
    trace.summary = {
        "events": len(trace.events),
        "terminated": terminated,
        "violations": trace.violation_count,
        "final_digest": digest(c),
        "final_positions": [list(p) for p in c.positions],
    }
    return trace


# -- replay -----------------------------------------------------------------

class ReplayError(RuntimeError):
    pass


def replay(trace: Trace) -> list[Configuration]:
    """Re-execute a trace from its header; returns the configuration after
    every event (index 0 is the initial one). Raises ReplayError on any
    digest mismatch."""
    h = trace.header
    scene = parse_scene(h["scene"])
    algo = get_algorithm(h["algorithm"], h.get("scan", "asc"))
    c = scene.configuration()
    if h.get("initial_digest") not in (None, digest(c)):
        raise ReplayError("initial configuration does not match header digest")
    frames = [c]
    state = AsyncState.initial(c)
    for rec in trace.events:
        ev = Event.from_dict(rec)
        if ev.kind == "round":
            c, _ = sync_round(c, algo, ev.active)
        else:
            state = step_async(state, ev, algo)
            c = state.config
        if digest(c) != rec["digest"]:
            raise ReplayError(f"event {rec['index']}: digest {digest(c)} != recorded {rec['digest']}")
        frames.append(c)
    return frames
