from fractions import Fraction

import pytest

from conftest import L3_T2, S7
from oracles import inner_face_count
from spsdiagram.construction import grid
from spsdiagram.errors import DiagramError
from spsdiagram.geometry import (
    Coord, Diagram, EdgeClass, FourCell, boundary_chains, check_czedli,
    check_rectangular, classify_edge, edge_class, enumerate_4cells, find_corners,
    segments_touch, validate_diagram,
)
from spsdiagram.order import STRICT, SUBLATTICE, Lattice

H = Fraction(1, 2)


def two_chain(p, q):
    return Diagram(Lattice(2, {(0, 1)}), [p, q])


@pytest.mark.parametrize("p, q, cls", [
    ((0, 0), (1, 0), EdgeClass.NORMAL_UP),
    ((0, 0), (0, 1), EdgeClass.NORMAL_DOWN),
    ((H, H), (1, 1), EdgeClass.STEEP),
    ((0, 0), (2, 1), EdgeClass.STEEP),
    ((0, 0), (1, -1), EdgeClass.INVALID),
    ((0, 0), (-1, 0), EdgeClass.INVALID),
])
def test_classify_edge(p, q, cls):
    assert classify_edge(two_chain(p, q), 0, 1) is cls


def test_classify_rejects_non_cover(s7):
    with pytest.raises(DiagramError):
        classify_edge(s7, S7["o"], S7["i"])


def test_classification_has_no_tolerance():
    eps = Fraction(1, 10**30)
    assert edge_class(Coord.of(0, 0), Coord.of(1, eps)) is EdgeClass.STEEP
    assert edge_class(Coord.of(0, 0), Coord.of(1, 0)) is EdgeClass.NORMAL_UP
    assert edge_class(Coord.of(0, 0), Coord.of(1, -eps)) is EdgeClass.INVALID


def test_cartesian_derivation():
    c = Coord.of(3, 1)
    assert (c.x, c.y) == (2, 4)


def test_validate_grid_passes():
    assert validate_diagram(grid(3, 3)) == []


def test_validate_duplicate_position():
    D = grid(2, 2)
    pos = list(D.pos)
    pos[2] = pos[1]
    bad = validate_diagram(Diagram(D.lattice, pos))
    assert ("duplicate position", (1, 2)) in [(v.kind, v.witness) for v in bad]


def test_validate_cover_not_upward():
    D = grid(2, 2)
    pos = list(D.pos)
    pos[3] = Coord.of(H, -1)
    kinds = {(v.kind, v.witness) for v in validate_diagram(Diagram(D.lattice, pos))}
    assert ("cover not upward", (1, 3)) in kinds
    assert ("cover not upward", (2, 3)) in kinds


def test_validate_crossing_edges():
    # cartesian 0(0,0) 1(2,2) 2(1,1/2) 3(-1,3): edges 0-1 and 2-3 cross
    D = grid(2, 2)
    pos = [Coord.of(0, 0), Coord.of(2, 0), Coord.of(Fraction(3, 4), Fraction(-1, 4)), Coord.of(1, 2)]
    bad = validate_diagram(Diagram(D.lattice, pos))
    assert any(v.kind == "edges cross" for v in bad)


def test_validate_collinear_overlap_at_shared_endpoint():
    # chain 0 < 1 < 2 plus a second route 0 < 3 < 2 drawn on top of it
    L = Lattice(4, {(0, 1), (1, 2), (0, 3), (3, 2)})
    pos = [Coord.of(0, 0), Coord.of(1, 0), Coord.of(3, 0), Coord.of(2, 0)]
    bad = validate_diagram(Diagram(L, pos))
    assert any(v.kind == "edges cross" for v in bad)


def test_segments_touch():
    assert segments_touch((0, 0), (2, 2), (0, 2), (2, 0))
    assert segments_touch((0, 0), (2, 2), (1, 1), (5, 0))
    assert not segments_touch((0, 0), (1, 1), (2, 2), (3, 3))
    assert not segments_touch((0, 0), (2, 0), (0, 1), (2, 1))


def test_wrong_position_count():
    with pytest.raises(DiagramError):
        Diagram(Lattice(2, {(0, 1)}), [Coord.of(0, 0)])


def test_boundary_chains(s7):
    left, right = boundary_chains(grid(3, 3))
    assert left == [0, 3, 6, 7, 8]
    assert right == [0, 1, 2, 5, 8]
    left, _ = boundary_chains(s7)
    assert left == [S7["o"], S7["a"], S7["c"], S7["i"]]
    one = Diagram(Lattice(1, []), [Coord.of(0, 0)])
    assert boundary_chains(one) == ([0], [0])


def test_cells_of_grids():
    assert enumerate_4cells(grid(2, 2)) == [FourCell(0, 2, 1, 3)]
    cells = enumerate_4cells(grid(3, 3))
    assert len(cells) == 4
    assert [c.o for c in cells] == [0, 3, 1, 4]


def test_cells_of_s7(s7):
    o, a, b, c, d, t, i = (S7[k] for k in "oabcdti")
    assert enumerate_4cells(s7) == [
        FourCell(o, a, b, t), FourCell(a, c, t, i), FourCell(b, t, d, i)]


def test_cells_agree_with_order_and_euler(l3):
    for D in (grid(4, 3), l3):
        cells = enumerate_4cells(D)
        assert len(cells) == inner_face_count(D.n, len(D.edges))
        L = D.lattice
        for cell in cells:
            assert L.join(cell.c, cell.d) == cell.i
            assert L.meet(cell.c, cell.d) == cell.o
            assert D.x(cell.c) < D.x(cell.d)


def test_pentagon_face_is_rejected():
    # N5 drawn planar: its single bounded face has five vertices
    L = Lattice(5, {(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)})
    pos = [Coord.of(0, 0), Coord.of(0, 1), Coord.of(0, 2), Coord.of(1, 0), Coord.of(1, 2)]
    assert validate_diagram(Diagram(L, pos)) == []
    with pytest.raises(DiagramError, match="non-quadrilateral"):
        enumerate_4cells(Diagram(L, pos))


def test_corners():
    chain = Diagram(Lattice(4, {(0, 1), (1, 2), (2, 3)}),
                    [Coord.of(k, 0) for k in range(4)])
    assert find_corners(chain) == []
    corners = find_corners(grid(2, 2))
    assert [(k.a, k.side) for k in corners] == [(2, "left"), (1, "right")]
    assert all(k.a_star == 0 and k.a_upper == 3 for k in corners)


def test_corners_of_s7(s7):
    corners = find_corners(s7)
    assert [(k.a, k.a_star, k.side) for k in corners] == [
        (S7["c"], S7["a"], "left"), (S7["d"], S7["b"], "right")]


def test_rectangular(s7):
    assert check_rectangular(grid(2, 2))
    assert check_rectangular(grid(4, 3))
    chain = Diagram(Lattice(3, {(0, 1), (1, 2)}), [Coord.of(k, 0) for k in range(3)])
    res = check_rectangular(chain)
    assert not res
    assert res.reason == "no doubly irreducible boundary element pair"
    res = check_rectangular(s7)
    assert res and res.witness == (S7["c"], S7["d"])


def test_czedli_on_grid_and_s7(s7):
    rep = check_czedli(grid(3, 4))
    assert rep.ok and rep.steep == frozenset()
    for mode in (STRICT, SUBLATTICE):
        rep = check_czedli(s7, mode)
        assert rep.ok
        assert rep.steep == {(S7["t"], S7["i"])}


def test_czedli_modes_disagree_on_l3(l3):
    assert check_czedli(l3, SUBLATTICE).ok
    rep = check_czedli(l3, STRICT)
    assert not rep.ok
    (off,) = rep.offenders
    assert off.edge == (S7["t"], S7["i"])
    assert off.actual is EdgeClass.STEEP and off.expected == "normal"
    assert rep.steep == {(S7["t"], S7["i"]), (L3_T2, S7["t"])}


def test_czedli_flags_normal_middle(s7):
    # flatten the middle edge by lifting t onto the line through i
    pos = list(s7.pos)
    pos[S7["t"]] = Coord.of(H, 1)
    D = Diagram(s7.lattice, pos)
    rep = check_czedli(D)
    assert [(o.edge, o.expected) for o in rep.offenders if o.expected == "steep"] == [
        ((S7["t"], S7["i"]), "steep")]
