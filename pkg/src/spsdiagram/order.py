"""Finite lattices described by their cover relation.

Elements are the integers ``0 .. n-1``.  A :class:`Lattice` is validated on
construction and never mutated afterwards; joins and meets are read off
bit-set reachability computed once from the covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import LatticeError

STRICT = "strict"
SUBLATTICE = "sublattice"
MODES = (STRICT, SUBLATTICE)

# S7 labelled o, a, b, c, d, t, i; the middle edge is t -> i.
S7_LABELS = ("o", "a", "b", "c", "d", "t", "i")
S7_COVERS = (
    ("o", "a"), ("o", "b"), ("a", "c"), ("b", "d"), ("a", "t"),
    ("b", "t"), ("t", "i"), ("c", "i"), ("d", "i"),
)


def _s7_order():
    idx = {name: k for k, name in enumerate(S7_LABELS)}
    leq = [[p == q for q in range(7)] for p in range(7)]
    for lo, hi in S7_COVERS:
        leq[idx[lo]][idx[hi]] = True
    # close transitively; 7 elements, three rounds are plenty
    for _ in range(3):
        for p in range(7):
            for q in range(7):
                if leq[p][q]:
                    for r in range(7):
                        if leq[q][r]:
                            leq[p][r] = True
    return tuple(tuple(row) for row in leq)


S7_LEQ = _s7_order()


class Lattice:
    """A finite bounded lattice given by its covering pairs ``(lo, hi)``.

    Raises :class:`LatticeError` if the covers are not the transitive
    reduction of a lattice order.
    """

    def __init__(self, n, covers):
        n = int(n)
        if n < 1:
            raise LatticeError("empty lattice")
        pairs = set()
        for lo, hi in covers:
            lo, hi = int(lo), int(hi)
            if not (0 <= lo < n and 0 <= hi < n):
                raise LatticeError("id out of range", (lo, hi))
            if lo == hi:
                raise LatticeError("cycle", (lo,))
            pairs.add((lo, hi))
        self.n = n
        self.covers = frozenset(pairs)

        upper = [[] for _ in range(n)]
        lower = [[] for _ in range(n)]
        for lo, hi in sorted(pairs):
            upper[lo].append(hi)
            lower[hi].append(lo)
        self.upper = tuple(tuple(u) for u in upper)
        self.lower = tuple(tuple(l) for l in lower)

        self.topo = self._topological_order()
        self.rank_of = [0] * n
        for k, x in enumerate(self.topo):
            self.rank_of[x] = k

        # bit k of down[x] is set iff topo[k] <= x
        down = [0] * n
        for x in self.topo:
            bits = 1 << self.rank_of[x]
            for p in self.lower[x]:
                bits |= down[p]
            down[x] = bits
        up = [0] * n
        for x in reversed(self.topo):
            bits = 1 << self.rank_of[x]
            for q in self.upper[x]:
                bits |= up[q]
            up[x] = bits
        self._down = down
        self._up = up

        for lo, hi in sorted(pairs):
            for other in self.lower[hi]:
                if other != lo and (down[other] >> self.rank_of[lo]) & 1:
                    raise LatticeError("not a transitive reduction", (lo, hi))

        minima = [x for x in range(n) if not self.lower[x]]
        maxima = [x for x in range(n) if not self.upper[x]]
        if len(minima) != 1:
            raise LatticeError("no minimum", minima[:2])
        if len(maxima) != 1:
            raise LatticeError("no maximum", maxima[:2])
        self.bottom = minima[0]
        self.top = maxima[0]

        self.join_table, self.meet_table = self._tables()

    def _topological_order(self):
        indeg = [len(l) for l in self.lower]
        ready = [x for x in range(self.n) if indeg[x] == 0]
        order = []
        while ready:
            x = ready.pop()
            order.append(x)
            for q in self.upper[x]:
                indeg[q] -= 1
                if indeg[q] == 0:
                    ready.append(q)
        if len(order) < self.n:
            seen = set(order)
            x = next(y for y in range(self.n) if y not in seen)
            path = []
            while x not in path:
                path.append(x)
                x = next(p for p in self.lower[x] if p not in seen)
            cycle = path[path.index(x):]
            raise LatticeError("cycle", sorted(cycle))
        return tuple(order)

    def _tables(self):
        n = self.n
        topo = self.topo
        up, down = self._up, self._down
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for x in range(n):
            join[x][x] = meet[x][x] = x
            ux, dx = up[x], down[x]
            for y in range(x + 1, n):
                common = ux & up[y]
                z = topo[(common & -common).bit_length() - 1]
                if up[z] != common:
                    raise LatticeError("no join", (x, y))
                join[x][y] = join[y][x] = z
                common = dx & down[y]
                z = topo[common.bit_length() - 1]
                if down[z] != common:
                    raise LatticeError("no meet", (x, y))
                meet[x][y] = meet[y][x] = z
        return tuple(map(tuple, join)), tuple(map(tuple, meet))

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))

    def __repr__(self):
        return f"Lattice(n={self.n}, covers={len(self.covers)})"

    def __len__(self):
        return self.n

    def leq(self, x, y):
        return bool((self._down[y] >> self.rank_of[x]) & 1)

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def covered_by(self, x, y):
        return (x, y) in self.covers

    def join(self, x, y):
        return self.join_table[x][y]

    def meet(self, x, y):
        return self.meet_table[x][y]

    def below(self, x):
        """All elements ``<= x``."""
        bits = self._down[x]
        return [self.topo[k] for k in range(bits.bit_length()) if (bits >> k) & 1]

    def above(self, x):
        bits = self._up[x]
        return [self.topo[k] for k in range(bits.bit_length()) if (bits >> k) & 1]

    @cached_property
    def edges(self):
        return tuple(sorted(self.covers))


def check_lattice(covers, n):
    """Validate ``covers`` on ``n`` elements and return the :class:`Lattice`.

    >>> check_lattice({(0, 1), (0, 2), (1, 3), (2, 3)}, 4).top
    3
    """
    return Lattice(n, covers)


def lub_glb(L, x, y):
    return L.join(x, y), L.meet(x, y)


def check_semimodular(L):
    """Return None if ``L`` is (upper) semimodular, else a witness ``(x, y)``
    with ``x ∧ y ≺ x`` but not ``y ≺ x ∨ y``."""
    for x in range(L.n):
        for y in range(L.n):
            if L.covered_by(L.meet(x, y), x) and not L.covered_by(y, L.join(x, y)):
                return (x, y)
    return None


def find_M3(L):
    """Find a diamond ``M3`` sublattice.

    Returns ``(bottom, x, y, z, top)`` or None; None means ``L`` is slim.
    Incomparable pairs are bucketed by their (join, meet) and a triangle is
    searched inside each bucket.
    """
    buckets = {}
    for x in range(L.n):
        for y in range(x + 1, L.n):
            if not L.comparable(x, y):
                key = (L.join(x, y), L.meet(x, y))
                buckets.setdefault(key, []).append((x, y))
    for (top, bottom), pairs in sorted(buckets.items()):
        if len(pairs) < 3:
            continue
        adj = {}
        for x, y in pairs:
            adj.setdefault(x, set()).add(y)
            adj.setdefault(y, set()).add(x)
        for x, y in pairs:
            common = adj[x] & adj[y]
            if common:
                z = min(common)
                return (bottom,) + tuple(sorted((x, y, z))) + (top,)
    return None


@dataclass(frozen=True, order=True)
class CoveringS7:
    """An S7 inside a lattice, labelled as in ``S7_LABELS``.

    The swap ``a <-> b, c <-> d`` is an automorphism of S7; records are
    normalised so that ``a < b``.
    """

    t: int
    i: int
    o: int
    a: int
    b: int
    c: int
    d: int
    mode: str = SUBLATTICE

    @property
    def middle(self):
        return (self.t, self.i)

    @property
    def elements(self):
        return (self.o, self.a, self.b, self.c, self.d, self.t, self.i)

    def labelled(self):
        return dict(zip(S7_LABELS, self.elements))


def is_s7_sublattice(L, elems):
    """True if ``elems`` (labelled o, a, b, c, d, t, i) span a sublattice of
    ``L`` whose order matches S7 under that labelling."""
    if len(set(elems)) != 7:
        return False
    for p in range(7):
        for q in range(7):
            if L.leq(elems[p], elems[q]) != S7_LEQ[p][q]:
                return False
    members = set(elems)
    for x, y in combinations(elems, 2):
        if L.join(x, y) not in members or L.meet(x, y) not in members:
            return False
    return True


def _is_strict(L, elems):
    named = dict(zip(S7_LABELS, elems))
    return all(L.covered_by(named[lo], named[hi]) for lo, hi in S7_COVERS)


def find_covering_S7s(L, mode=SUBLATTICE):
    """All covering S7s of ``L``.

    Middles are elements ``t`` with a unique upper cover ``i`` and at least
    two lower covers.  For such a middle, every ``c`` incomparable to ``t``
    with ``c ∨ t = i`` fixes ``a = c ∧ t``; pairs of such ``c`` complete the
    pattern and the candidate is checked as a sublattice.  In strict mode
    all nine S7 covers must also be covers of ``L``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    found = {}
    for t in range(L.n):
        if len(L.upper[t]) != 1 or len(L.lower[t]) < 2:
            continue
        i = L.upper[t][0]
        sides = [
            c for c in range(L.n)
            if c != i and L.leq(c, i) and not L.comparable(c, t) and L.join(c, t) == i
        ]
        for c, d in combinations(sides, 2):
            a, b = L.meet(c, t), L.meet(d, t)
            if a > b:
                a, b, c, d = b, a, d, c
            elems = (L.meet(a, b), a, b, c, d, t, i)
            if not is_s7_sublattice(L, elems):
                continue
            if mode == STRICT and not _is_strict(L, elems):
                continue
            key = frozenset(elems)
            if key not in found:
                o = elems[0]
                found[key] = CoveringS7(t=t, i=i, o=o, a=a, b=b, c=c, d=d, mode=mode)
    return sorted(found.values())


def doubly_irreducibles(L):
    return {x for x in range(L.n) if len(L.lower[x]) == 1 and len(L.upper[x]) == 1}
