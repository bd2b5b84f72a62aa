"""Grids, fork extensions and corner removals with exact placement."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import DiagramError, ScriptError
from .geometry import (
    Coord, Diagram, EdgeClass, FourCell, edge_class, enumerate_4cells,
    find_corners, validate_diagram,
)
from .order import Lattice
from .script import (
    ConstructionScript, ForkCell, ForkIndex, Grid, RemoveId, RemoveSide,
)

log = logging.getLogger(__name__)


def grid(m, n):
    """The product of an m-chain and an n-chain.

    Element ``(i, j)`` gets id ``i * n + j`` and sits at ``u = j, v = i``.
    """
    if m < 2 or n < 2:
        raise ValueError(f"grid dimensions must be >= 2, got {m}x{n}")
    covers = []
    for i in range(m):
        for j in range(n):
            e = i * n + j
            if j + 1 < n:
                covers.append((e, e + 1))
            if i + 1 < m:
                covers.append((e, e + n))
    pos = [Coord.of(j, i) for i in range(m) for j in range(n)]
    return Diagram(Lattice(m * n, covers), pos)


@dataclass(frozen=True)
class ForkResult:
    diagram: Diagram
    id_map: dict
    a: int
    b: int
    t: int
    left: tuple   # new elements of the left trajectory, top to bottom
    right: tuple

    def __iter__(self):
        yield self.diagram
        yield self.id_map


def resolve_cell(D, cell):
    """Accept a :class:`FourCell`, an ``(o, i)`` pair or a cell index."""
    cells = enumerate_4cells(D)
    if isinstance(cell, FourCell):
        if cell not in cells:
            raise DiagramError(f"{cell} is not a 4-cell of the diagram", cell.elements)
        return cell
    if isinstance(cell, int):
        if not 0 <= cell < len(cells):
            raise DiagramError(f"cell index {cell} out of range ({len(cells)} cells)")
        return cells[cell]
    o, i = cell
    hits = [c for c in cells if c.o == o and c.i == i]
    if len(hits) != 1:
        raise DiagramError(f"no 4-cell with bottom {o} and top {i}", (o, i))
    return hits[0]


def _min_gap_above(values, base):
    return min(v - base for v in values if v > base)


def fork_extend(D, cell):
    """Fork extension of ``D`` at ``cell``.

    New ids are appended in the order a, b, t, left trajectory, right
    trajectory, so the id map is the identity on old elements.
    """
    L = D.lattice
    C = resolve_cell(D, cell)
    o, c, d, i = C.o, C.c, C.d, C.i
    P = D.pos
    assert edge_class(P[o], P[c]) is EdgeClass.NORMAL_DOWN, "left lower edge of cell not normal"
    assert edge_class(P[o], P[d]) is EdgeClass.NORMAL_UP, "right lower edge of cell not normal"

    uo, vo = P[o]
    half = Fraction(1, 2)
    dv = half * _min_gap_above([p.v for p in P], vo)
    du = half * _min_gap_above([p.u for p in P], uo)
    # no old element in the open strips vo < v < vo + dv, uo < u < uo + du
    assert not any(vo < p.v < vo + dv or uo < p.u < uo + du for p in P)

    pos = list(P)
    covers = set(L.covers)
    n = L.n
    a, b, t = n, n + 1, n + 2
    pos += [Coord(uo, vo + dv), Coord(uo + du, vo), Coord(uo + du, vo + dv)]
    covers -= {(o, c), (o, d)}
    covers |= {(o, a), (a, c), (o, b), (b, d), (a, t), (b, t), (t, i)}
    nxt = n + 3

    trajectories = []
    for side, start, prev in (("left", c, a), ("right", d, b)):
        added = []
        p, q = o, start
        while True:
            lowers = D.lower_covers(q)
            k = lowers.index(p)
            k += -1 if side == "left" else 1
            if not 0 <= k < len(lowers):
                break
            x = lowers[k]
            e0 = L.meet(x, p)
            assert L.covered_by(e0, x) and L.covered_by(e0, p), "trajectory face not a 4-cell"
            cls = edge_class(P[e0], P[x])
            if cls is EdgeClass.STEEP:
                raise AssertionError(f"steep edge on trajectory: {(e0, x)}")
            if side == "left":
                assert cls is EdgeClass.NORMAL_DOWN and P[e0].v == vo
                y = Coord(P[e0].u, vo + dv)
            else:
                assert cls is EdgeClass.NORMAL_UP and P[e0].u == uo
                y = Coord(uo + du, P[e0].v)
            pos.append(y)
            covers.discard((e0, x))
            covers |= {(e0, nxt), (nxt, x), (nxt, prev)}
            added.append(nxt)
            prev = nxt
            nxt += 1
            p, q = e0, x
        trajectories.append(tuple(added))

    new = Diagram(Lattice(len(pos), covers), pos)
    return ForkResult(new, {e: e for e in range(n)}, a, b, t, *trajectories)


def remove_corner(D, a):
    """Delete corner ``a`` and compact ids; returns ``(diagram, id_map)``."""
    L = D.lattice
    corners = {k.a: k for k in find_corners(D)}
    if a not in corners:
        raise DiagramError(f"element {a} is not a corner", (a,))
    k = corners[a]
    assert any(z != a and L.lt(k.a_star, z) and L.lt(z, k.a_upper) for z in range(L.n)), \
        "removing the corner would need a new cover"
    id_map = {e: (e if e < a else e - 1) for e in range(L.n) if e != a}
    covers = [(id_map[p], id_map[q]) for p, q in L.covers if a not in (p, q)]
    pos = [c for e, c in enumerate(D.pos) if e != a]
    return Diagram(Lattice(L.n - 1, covers), pos), id_map


@dataclass(frozen=True)
class StepRecord:
    step: object
    elements: int
    edges: int
    cells: int
    id_map: dict
    left: int = 0    # trajectory lengths, forks only
    right: int = 0


@dataclass(frozen=True)
class Run:
    diagram: Diagram
    log: tuple


def _corner_on_side(D, side):
    hits = [k for k in find_corners(D) if k.side == side]
    if not hits:
        raise DiagramError(f"no corner on the {side} side")
    return hits[0].a


def apply_step(D, step):
    """Apply one non-grid step; returns ``(diagram, id_map, (p, q))``."""
    if isinstance(step, ForkCell):
        res = fork_extend(D, (step.o, step.i))
    elif isinstance(step, ForkIndex):
        res = fork_extend(D, step.index)
    elif isinstance(step, RemoveId):
        return (*remove_corner(D, step.a), (0, 0))
    elif isinstance(step, RemoveSide):
        return (*remove_corner(D, _corner_on_side(D, step.side)), (0, 0))
    else:
        raise ScriptError(f"unexpected step {step!r}")
    return res.diagram, res.id_map, (len(res.left), len(res.right))


def _record(step, D, id_map, traj=(0, 0)):
    return StepRecord(step, D.n, len(D.edges), len(enumerate_4cells(D)), id_map, *traj)


def run_script(script, validate=True):
    """Fold the steps of ``script``; every intermediate diagram is validated
    unless ``validate`` is False."""
    steps = script.steps if isinstance(script, ConstructionScript) else tuple(script)
    if not steps or not isinstance(steps[0], Grid):
        raise ScriptError("grid-not-first", 0)
    if any(isinstance(s, Grid) for s in steps[1:]):
        raise ScriptError("grid may appear only once, first")
    try:
        D = grid(steps[0].m, steps[0].n)
    except ValueError as exc:
        raise ScriptError(str(exc), 0) from None
    records = [_record(steps[0], D, {})]
    for k, step in enumerate(steps[1:], start=1):
        try:
            D, id_map, traj = apply_step(D, step)
        except DiagramError as exc:
            raise ScriptError(str(exc), k) from None
        if validate:
            bad = validate_diagram(D)
            if bad:
                raise ScriptError(f"invalid diagram: {bad[0]}", k)
        records.append(_record(step, D, id_map, traj))
    return Run(D, tuple(records))


MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator (Steele, Lea, Flood)."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k):
        """Uniform integer in ``[0, k)`` by rejection."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            r = self.next()
            if r < limit:
                return r % k


def random_script(m, n, forks, removals, seed):
    """A random script: grid, then ``forks`` forks, then ``removals`` corner
    removals, each choice uniform over what the current diagram offers."""
    rng = SplitMix64(seed)
    steps = [Grid(m, n)]
    notes = []
    D = grid(m, n)
    for _ in range(forks):
        k = rng.below(len(enumerate_4cells(D)))
        steps.append(ForkIndex(k))
        D = fork_extend(D, k).diagram
    for r in range(removals):
        corners = find_corners(D)
        if not corners:
            msg = f"removal {r + 1} skipped: no corners"
            log.info(msg)
            notes.append(msg)
            continue
        a = corners[rng.below(len(corners))].a
        steps.append(RemoveId(a))
        D, _ = remove_corner(D, a)
    return ConstructionScript(tuple(steps), tuple(notes))
