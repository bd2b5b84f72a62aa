"""Construction scripts and their line-oriented text form.

::

    grid 3 3
    fork cell 4 8      # by bottom and top id of the 4-cell
    fork index 0       # by position in the sorted cell list
    remove id 12
    remove side left   # bottom-most corner on that side
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError


@dataclass(frozen=True)
class Grid:
    m: int
    n: int

    def __str__(self):
        return f"grid {self.m} {self.n}"


@dataclass(frozen=True)
class ForkCell:
    o: int
    i: int

    def __str__(self):
        return f"fork cell {self.o} {self.i}"


@dataclass(frozen=True)
class ForkIndex:
    index: int

    def __str__(self):
        return f"fork index {self.index}"


@dataclass(frozen=True)
class RemoveId:
    a: int

    def __str__(self):
        return f"remove id {self.a}"


@dataclass(frozen=True)
class RemoveSide:
    side: str

    def __str__(self):
        return f"remove side {self.side}"


FORK_STEPS = (ForkCell, ForkIndex)
REMOVE_STEPS = (RemoveId, RemoveSide)


@dataclass(frozen=True)
class ConstructionScript:
    steps: tuple
    # free-form remarks (e.g. skipped random removals); not part of equality
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "notes", tuple(self.notes))

    def __len__(self):
        return len(self.steps)


def format_script(script):
    lines = [f"# {note}" for note in script.notes]
    lines.extend(str(step) for step in script.steps)
    return "\n".join(lines) + "\n"


def _int(tok, lineno, col):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno, col) from None


def parse_script(text):
    steps = []
    notes = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        toks = body.split()
        if not toks:
            if comment.strip() and not body.strip():
                notes.append(comment.strip())
            continue
        cols = []
        pos = 0
        for tok in toks:
            pos = raw.index(tok, pos)
            cols.append(pos + 1)
            pos += len(tok)

        def arity(k):
            if len(toks) != k:
                raise ParseError(
                    f"{' '.join(toks[:2])!r} takes {k - 1} fields, got {len(toks) - 1}",
                    lineno, cols[0])

        head = toks[0]
        if head == "grid":
            arity(3)
            steps.append(Grid(_int(toks[1], lineno, cols[1]), _int(toks[2], lineno, cols[2])))
        elif head == "fork" and len(toks) > 1 and toks[1] == "cell":
            arity(4)
            steps.append(ForkCell(_int(toks[2], lineno, cols[2]), _int(toks[3], lineno, cols[3])))
        elif head == "fork" and len(toks) > 1 and toks[1] == "index":
            arity(3)
            steps.append(ForkIndex(_int(toks[2], lineno, cols[2])))
        elif head == "remove" and len(toks) > 1 and toks[1] == "id":
            arity(3)
            steps.append(RemoveId(_int(toks[2], lineno, cols[2])))
        elif head == "remove" and len(toks) > 1 and toks[1] == "side":
            arity(3)
            if toks[2] not in ("left", "right"):
                raise ParseError(f"side must be left or right, got {toks[2]!r}", lineno, cols[2])
            steps.append(RemoveSide(toks[2]))
        else:
            raise ParseError(f"unknown step {' '.join(toks[:2])!r}", lineno, cols[0])
    return ConstructionScript(tuple(steps), tuple(notes))
