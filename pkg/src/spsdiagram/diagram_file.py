"""Text persistence for diagrams.

Format (one record per line, ``#`` starts a comment)::

    spsdiagram 1
    element <id> <u> <v>        u, v as "numerator/denominator"
    cover <lo> <hi>
    meta <key> <value ...>

Element ids must be exactly ``0 .. n-1``.  Rationals are written in lowest
terms and read back exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DiagramError, LatticeError, ParseError
from .geometry import Coord, Diagram, validate_diagram
from .order import Lattice

MAGIC = "spsdiagram"
VERSION = 1
_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


@dataclass(frozen=True)
class DiagramRecord:
    """A parsed but unchecked diagram file."""

    n: int
    covers: tuple
    pos: tuple
    meta: tuple = field(default=())


def _rational(s):
    return f"{s.numerator}/{s.denominator}"


def encode(D, meta=()):
    lines = [f"{MAGIC} {VERSION}"]
    for key, value in meta:
        if not re.fullmatch(r"[A-Za-z0-9_.-]+", key):
            raise ValueError(f"bad meta key {key!r}")
        if "\n" in str(value) or "#" in str(value):
            raise ValueError("meta values must be single-line and free of '#'")
        lines.append(f"meta {key} {value}".rstrip())
    for e, c in enumerate(D.pos):
        lines.append(f"element {e} {_rational(c.u)} {_rational(c.v)}")
    for lo, hi in D.edges:
        lines.append(f"cover {lo} {hi}")
    return "\n".join(lines) + "\n"


def _tokens(raw):
    body = raw.split("#", 1)[0]
    out = []
    for m in re.finditer(r"\S+", body):
        out.append((m.group(), m.start() + 1))
    return out


def _parse_int(tok, line, col):
    if not re.fullmatch(r"-?\d+", tok):
        raise ParseError(f"expected an integer, got {tok!r}", line, col)
    return int(tok)


def _parse_rational(tok, line, col):
    m = _RATIONAL.match(tok)
    if not m:
        raise ParseError(f"expected numerator/denominator, got {tok!r}", line, col)
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise ParseError("zero denominator", line, col)
    return Fraction(num, den)


def parse_diagram(text):
    """Parse ``text`` into a :class:`DiagramRecord` without checking it."""
    tag = f"{MAGIC} {VERSION}"
    header = None
    elements = {}
    covers = []
    meta = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        words = [t for t, _ in toks]
        if header is None:
            if words[0] != MAGIC:
                raise ParseError(f"missing '{tag}' header", lineno, toks[0][1])
            if len(words) != 2 or words[1] != str(VERSION):
                raise ParseError(f"unsupported version {' '.join(words[1:])!r}, expected {VERSION}",
                                 lineno, toks[-1][1])
            header = lineno
            continue
        kind = words[0]
        if kind == "element":
            if len(toks) != 4:
                raise ParseError(f"element takes 3 fields ({tag})", lineno, toks[0][1])
            e = _parse_int(toks[1][0], lineno, toks[1][1])
            if e in elements:
                raise ParseError(f"element {e} defined twice", lineno, toks[1][1])
            elements[e] = Coord(_parse_rational(toks[2][0], lineno, toks[2][1]),
                                _parse_rational(toks[3][0], lineno, toks[3][1]))
        elif kind == "cover":
            if len(toks) != 3:
                raise ParseError(f"cover takes 2 fields ({tag})", lineno, toks[0][1])
            covers.append((_parse_int(toks[1][0], lineno, toks[1][1]),
                           _parse_int(toks[2][0], lineno, toks[2][1])))
        elif kind == "meta":
            if len(toks) < 2:
                raise ParseError(f"meta needs a key ({tag})", lineno, toks[0][1])
            value = raw.split("#", 1)[0][toks[1][1] - 1 + len(toks[1][0]):].strip()
            meta.append((toks[1][0], value))
        else:
            raise ParseError(f"unknown field {kind!r} in {tag}", lineno, toks[0][1])
    if header is None:
        raise ParseError(f"missing '{tag}' header", 1, 1)
    n = len(elements)
    if sorted(elements) != list(range(n)):
        raise ParseError(f"element ids must be 0..{n - 1}")
    return DiagramRecord(n, tuple(covers), tuple(elements[e] for e in range(n)), tuple(meta))


def decode(text):
    """Parse and fully check a diagram file."""
    rec = parse_diagram(text)
    try:
        D = Diagram(Lattice(rec.n, rec.covers), rec.pos)
    except LatticeError as exc:
        raise DiagramError(f"not a lattice: {exc}", exc.witness) from exc
    bad = validate_diagram(D)
    if bad:
        raise DiagramError("invalid diagram: " + "; ".join(str(v) for v in bad))
    return D
