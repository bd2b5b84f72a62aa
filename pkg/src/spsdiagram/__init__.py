"""Diagrams of slim planar semimodular lattices built from grids by fork
extensions and corner removals, with exact rational coordinates."""

from .construction import (
    SplitMix64, fork_extend, grid, random_script, remove_corner, run_script,
)
from .diagram_file import decode, encode, parse_diagram
from .errors import DiagramError, LatticeError, ParseError, ScriptError, SPSError
from .geometry import (
    Coord, Diagram, EdgeClass, FourCell, boundary_chains, check_czedli,
    check_rectangular, classify_edge, enumerate_4cells, find_corners,
    validate_diagram,
)
from .order import (
    CoveringS7, Lattice, check_lattice, check_semimodular, doubly_irreducibles,
    find_covering_S7s, find_M3, lub_glb,
)
from .render import render_svg, render_tikz
from .script import ConstructionScript, format_script, parse_script
from .verify import signature, verify_all

__version__ = "0.1.0"
