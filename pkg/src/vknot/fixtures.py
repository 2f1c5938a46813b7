"""Named example diagrams, read from a plain-text manifest.

Manifest lines are ``name | code | notes``; ``#`` starts a comment.  A code
of ``?`` marks an entry that has not been transcribed yet.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .diagram import LinkDiagram, parse

PENDING = "?"


@dataclass(frozen=True)
class Fixture:
    name: str
    code: str
    notes: str

    @property
    def pending(self) -> bool:
        return self.code == PENDING

    def diagram(self) -> LinkDiagram:
        if self.pending:
            raise ValueError(f"fixture {self.name!r} has not been transcribed yet")
        return parse(self.code)


def parse_manifest(text: str) -> list[Fixture]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise ValueError(f"manifest line {lineno}: expected 'name | code | notes'")
        out.append(Fixture(*parts))
    return out


def load_fixtures(path: str | Path | None = None) -> dict[str, Fixture]:
    if path is None:
        text = resources.files("vknot").joinpath("data/fixtures.txt").read_text()
    else:
        text = Path(path).read_text()
    return {f.name: f for f in parse_manifest(text)}
