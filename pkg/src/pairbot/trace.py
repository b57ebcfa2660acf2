"""JSON Lines traces: a header, one line per scheduler event, a summary."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .model import Configuration

TRACE_VERSION = 1


def digest(c: Configuration) -> str:
    """Short stable hash of all robot positions (robot order matters)."""
    payload = json.dumps([list(p) for p in c.positions], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class Trace:
    header: dict
    events: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def lines(self) -> Iterator[str]:
        yield _dumps({"type": "header", **self.header})
        for e in self.events:
            yield _dumps({"type": "event", **e})
        if self.summary:
            yield _dumps({"type": "summary", **self.summary})

    def to_jsonl(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    def write(self, path) -> None:
        Path(path).write_text(self.to_jsonl())

    @classmethod
    def from_jsonl(cls, text: str) -> "Trace":
        header, events, summary = None, [], {}
        for n, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            rec = json.loads(line)
            kind = rec.pop("type", None)
            if kind == "header":
                header = rec
            elif kind == "event":
                events.append(rec)
            elif kind == "summary":
                summary = rec
            else:
                raise ValueError(f"line {n}: unknown record type {kind!r}")
        if header is None:
            raise ValueError("trace has no header line")
        return cls(header, events, summary)

    @classmethod
    def read(cls, path) -> "Trace":
        return cls.from_jsonl(Path(path).read_text())

    @property
    def violation_count(self) -> int:
        return sum(len(e.get("violations", ())) for e in self.events)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)
