"""JSON/CSV report objects and the on-disk ball cache."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .chambers import ball
from .coxeter import CoxSystem, Elem, reduced_word


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": self.witness}

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["pass"], d.get("witness"))


@dataclass
class Report:
    command: str
    system: str
    q: dict[str, int] | None = None
    result: Any = None
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"command": self.command, "system": self.system, "q": self.q,
                "result": self.result, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["command"], d["system"], d.get("q"), d.get("result"),
                   [Check.from_dict(c) for c in d.get("checks", [])])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def word_str(w: Elem) -> str:
    return " ".join(reduced_word(w)) or "1"


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (" ".join(map(str, v)) if isinstance(v, (list, tuple)) else v)
                         for k, v in row.items()})
    return buf.getvalue()


def rows_to_table(rows: list[dict]) -> str:
    if not rows:
        return "(empty)\n"
    cols = list(rows[0])
    cells = [[(" ".join(map(str, r[c])) if isinstance(r[c], (list, tuple)) else str(r[c]))
              for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# ball cache

def cache_dir() -> Path:
    env = os.environ.get("FLATBLDG_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "flatbldg"


def _ball_key(system: CoxSystem, radius: int) -> str:
    payload = json.dumps({"generators": system.generators, "cartan": system.cartan,
                          "radius": radius}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def cached_ball(system: CoxSystem, radius: int, use_cache: bool = False) -> list[Elem]:
    """``chambers.ball`` backed by a content-addressed JSON file when enabled."""
    if not use_cache:
        return ball(system, radius)
    path = cache_dir() / f"ball-{_ball_key(system, radius)}.json"
    if path.exists():
        words = json.loads(path.read_text())["words"]
        return [system.element(w) for w in words]
    members = ball(system, radius)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = json.dumps({"system": system.name, "radius": radius,
                       "words": [list(reduced_word(w)) for w in members]})
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(data)
    os.replace(tmp, path)
    return members
