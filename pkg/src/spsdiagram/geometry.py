"""Exact diagram geometry in the rotated (u, v) basis.

``u`` runs along the 45 degree direction and ``v`` along 135 degrees, so the
Cartesian position is ``x = u - v``, ``y = u + v``.  Slope classes reduce to
sign tests on exact rationals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from math import lcm
from typing import NamedTuple

from .errors import DiagramError
from .order import SUBLATTICE, Lattice, doubly_irreducibles, find_covering_S7s


class Coord(NamedTuple):
    u: Fraction
    v: Fraction

    @classmethod
    def of(cls, u, v):
        return cls(Fraction(u), Fraction(v))

    @property
    def x(self):
        return self.u - self.v

    @property
    def y(self):
        return self.u + self.v


class EdgeClass(enum.Enum):
    NORMAL_UP = "normal-up"
    NORMAL_DOWN = "normal-down"
    STEEP = "steep"
    INVALID = "invalid"

    @property
    def is_normal(self):
        return self in (EdgeClass.NORMAL_UP, EdgeClass.NORMAL_DOWN)


def edge_class(p, q):
    """Class of the segment from ``p`` up to ``q`` (both :class:`Coord`)."""
    du = q.u - p.u
    dv = q.v - p.v
    if dv == 0 and du > 0:
        return EdgeClass.NORMAL_UP
    if du == 0 and dv > 0:
        return EdgeClass.NORMAL_DOWN
    if du > 0 and dv > 0:
        return EdgeClass.STEEP
    return EdgeClass.INVALID


@dataclass(frozen=True)
class Diagram:
    """A lattice together with a rotated coordinate for every element.

    Only the lattice is validated on construction; geometric invariants are
    checked by :func:`validate_diagram`.
    """

    lattice: Lattice
    pos: tuple

    def __post_init__(self):
        pos = tuple(Coord(Fraction(u), Fraction(v)) for u, v in self.pos)
        if len(pos) != self.lattice.n:
            raise DiagramError(
                f"{len(pos)} positions for {self.lattice.n} elements")
        object.__setattr__(self, "pos", pos)

    @property
    def n(self):
        return self.lattice.n

    @property
    def edges(self):
        return self.lattice.edges

    def x(self, e):
        return self.pos[e].x

    def y(self, e):
        return self.pos[e].y

    @cached_property
    def _upper_lr(self):
        return tuple(tuple(sorted(u, key=self.x)) for u in self.lattice.upper)

    @cached_property
    def _lower_lr(self):
        return tuple(tuple(sorted(l, key=self.x)) for l in self.lattice.lower)

    def upper_covers(self, e):
        """Upper covers of ``e`` from left to right."""
        return self._upper_lr[e]

    def lower_covers(self, e):
        return self._lower_lr[e]

    @cached_property
    def int_xy(self):
        """Cartesian coordinates scaled by a common denominator to integers."""
        scale = 1
        for c in self.pos:
            scale = lcm(scale, c.u.denominator, c.v.denominator)
        return tuple(
            (int((c.u - c.v) * scale), int((c.u + c.v) * scale)) for c in self.pos
        )


def classify_edge(D, p, q):
    if not D.lattice.covered_by(p, q):
        raise DiagramError(f"({p}, {q}) is not a cover", (p, q))
    return edge_class(D.pos[p], D.pos[q])


def edge_classes(D):
    return {e: edge_class(D.pos[e[0]], D.pos[e[1]]) for e in D.edges}


class Violation(NamedTuple):
    kind: str
    witness: tuple

    def __str__(self):
        return f"{self.kind} {self.witness}"


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, q, r):
    """r is collinear with p, q; is it within their bounding box?"""
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_touch(p1, p2, q1, q2):
    """Closed segments p1p2 and q1q2 share at least one point."""
    d1 = _cross(q1, q2, p1)
    d2 = _cross(q1, q2, p2)
    d3 = _cross(p1, p2, q1)
    d4 = _cross(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
            ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    return ((d1 == 0 and _on_segment(q1, q2, p1))
            or (d2 == 0 and _on_segment(q1, q2, p2))
            or (d3 == 0 and _on_segment(p1, p2, q1))
            or (d4 == 0 and _on_segment(p1, p2, q2)))


def _edges_conflict(xy, e, f):
    shared = set(e) & set(f)
    if not shared:
        return segments_touch(xy[e[0]], xy[e[1]], xy[f[0]], xy[f[1]])
    # one shared endpoint: the only bad case is overlap along a common ray
    s = shared.pop()
    a = xy[e[1] if e[0] == s else e[0]]
    b = xy[f[1] if f[0] == s else f[0]]
    o = xy[s]
    if _cross(o, a, b) != 0:
        return False
    return (a[0] - o[0]) * (b[0] - o[0]) + (a[1] - o[1]) * (b[1] - o[1]) > 0


def crossing_edges(D):
    """Pairs of edges that meet anywhere other than a shared endpoint.

    Every pair with overlapping x-extents is tested exactly; sorting by the
    left end only skips pairs that cannot meet.
    """
    xy = D.int_xy
    segs = []
    for e in D.edges:
        (x1, y1), (x2, y2) = xy[e[0]], xy[e[1]]
        segs.append((min(x1, x2), max(x1, x2), min(y1, y2), max(y1, y2), e))
    segs.sort()
    bad = []
    for k, (lx, hx, ly, hy, e) in enumerate(segs):
        for lx2, hx2, ly2, hy2, f in segs[k + 1:]:
            if lx2 > hx:
                break
            if ly2 > hy or hy2 < ly:
                continue
            if _edges_conflict(xy, e, f):
                bad.append(tuple(sorted((e, f))))
    return sorted(bad)


def validate_diagram(D):
    """List every violated diagram invariant; an empty list means valid."""
    out = []
    seen = {}
    for e, c in enumerate(D.pos):
        if c in seen:
            out.append(Violation("duplicate position", (seen[c], e)))
        else:
            seen[c] = e
    for p, q in D.edges:
        if not D.y(q) > D.y(p):
            out.append(Violation("cover not upward", (p, q)))
    for e, f in crossing_edges(D):
        out.append(Violation("edges cross", (e, f)))
    return out


def boundary_chains(D):
    """Left and right boundary chains, bottom to top."""
    L = D.lattice
    chains = []
    for pick in (0, -1):
        chain = [L.bottom]
        while chain[-1] != L.top:
            chain.append(D.upper_covers(chain[-1])[pick])
        chains.append(chain)
    return tuple(chains)


@dataclass(frozen=True)
class FourCell:
    o: int
    c: int
    d: int
    i: int

    @property
    def elements(self):
        return (self.o, self.c, self.d, self.i)


def _angle_cmp(a, b):
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    cr = a[0] * b[1] - a[1] * b[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


def faces(D):
    """Bounded faces of the drawing as counterclockwise vertex cycles."""
    L = D.lattice
    xy = D.int_xy
    rot = []
    for v in range(L.n):
        nbrs = list(L.upper[v]) + list(L.lower[v])
        key = cmp_to_key(lambda a, b, o=xy[v]: _angle_cmp(
            (xy[a][0] - o[0], xy[a][1] - o[1]), (xy[b][0] - o[0], xy[b][1] - o[1])))
        rot.append(sorted(nbrs, key=key))
    where = [{w: k for k, w in enumerate(r)} for r in rot]
    seen = set()
    out = []
    for p, q in L.edges:
        for start in ((p, q), (q, p)):
            if start in seen:
                continue
            cycle = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                a, b = dart
                cycle.append(a)
                r = rot[b]
                dart = (b, r[where[b][a] - 1])
            area2 = 0
            for k, a in enumerate(cycle):
                b = cycle[(k + 1) % len(cycle)]
                area2 += xy[a][0] * xy[b][1] - xy[b][0] * xy[a][1]
            if area2 > 0:
                out.append(cycle)
    return out


def enumerate_4cells(D):
    """All 4-cells, sorted by (y(o), x(o), x(c)).

    Raises :class:`DiagramError` on a bounded face that is not a 4-cell.
    """
    L = D.lattice
    cells = []
    for cycle in faces(D):
        if len(cycle) != 4:
            raise DiagramError(f"non-quadrilateral face {cycle}", cycle)
        k = min(range(4), key=lambda j: D.y(cycle[j]))
        o, d, i, c = (cycle[(k + j) % 4] for j in range(4))
        if not all(L.covered_by(lo, hi) for lo, hi in ((o, c), (o, d), (c, i), (d, i))):
            raise DiagramError(f"face {cycle} is not a 4-cell", cycle)
        cells.append(FourCell(o, c, d, i))
    cells.sort(key=lambda f: (D.y(f.o), D.x(f.o), D.x(f.c)))
    return cells


@dataclass(frozen=True)
class Corner:
    a: int
    a_star: int
    a_upper: int
    side: str


def find_corners(D):
    """Corners, left side first, each side bottom to top."""
    L = D.lattice
    dis = doubly_irreducibles(L)
    out = []
    taken = set()
    for side, chain in zip(("left", "right"), boundary_chains(D)):
        for a in chain:
            if a in dis and a not in taken:
                star = L.lower[a][0]
                if len(L.upper[star]) >= 2:
                    taken.add(a)
                    out.append(Corner(a, star, L.upper[a][0], side))
    out.sort(key=lambda c: (c.side, D.y(c.a)))
    return out


class Check(NamedTuple):
    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def check_rectangular(D):
    L = D.lattice
    dis = doubly_irreducibles(L)
    left, right = boundary_chains(D)
    lcs = [e for e in left if e in dis]
    rcs = [e for e in right if e in dis]
    if not lcs or not rcs or lcs == rcs:
        return Check(False, "no doubly irreducible boundary element pair")
    if len(lcs) != 1:
        return Check(False, "left boundary has several doubly irreducible elements", tuple(lcs))
    if len(rcs) != 1:
        return Check(False, "right boundary has several doubly irreducible elements", tuple(rcs))
    lc, rc = lcs[0], rcs[0]
    if L.meet(lc, rc) != L.bottom or L.join(lc, rc) != L.top:
        return Check(False, "boundary elements not complementary", (lc, rc))
    return Check(True, "", (lc, rc))


class Offender(NamedTuple):
    edge: tuple
    actual: EdgeClass
    expected: str
    note: str

    def __str__(self):
        return f"{self.edge[0]}->{self.edge[1]} {self.actual.value}: {self.note}"


@dataclass(frozen=True)
class CzedliReport:
    mode: str
    middles: frozenset
    steep: frozenset
    offenders: tuple

    @property
    def ok(self):
        return not self.offenders

    def __bool__(self):
        return self.ok


def check_czedli(D, mode=SUBLATTICE):
    """Check that the steep edges are exactly the middle edges of the covering
    S7s (under ``mode``) and that every other edge is normal."""
    middles = frozenset(s.middle for s in find_covering_S7s(D.lattice, mode))
    classes = edge_classes(D)
    steep = frozenset(e for e, c in classes.items() if c is EdgeClass.STEEP)
    offenders = []
    for e, cls in sorted(classes.items()):
        if e in middles:
            if cls is not EdgeClass.STEEP:
                offenders.append(Offender(e, cls, "steep", f"{mode} middle not steep"))
        elif cls is EdgeClass.STEEP:
            offenders.append(Offender(e, cls, "normal", f"steep but not a {mode} middle"))
        elif cls is EdgeClass.INVALID:
            offenders.append(Offender(e, cls, "normal", "edge slope outside [45, 135] degrees"))
    return CzedliReport(mode, middles, steep, tuple(offenders))
