import pytest
from hypothesis import given, settings, strategies as st

from spsdiagram.construction import random_script
from spsdiagram.errors import ParseError
from spsdiagram.script import (
    ConstructionScript, ForkCell, ForkIndex, Grid, RemoveId, RemoveSide,
    format_script, parse_script,
)

TEXT = """\
# built by hand
grid 3 3
fork cell 4 8   # centre cell
fork index 0
remove id 12
remove side left
"""


def test_parse_example():
    s = parse_script(TEXT)
    assert s.steps == (Grid(3, 3), ForkCell(4, 8), ForkIndex(0), RemoveId(12), RemoveSide("left"))
    assert s.notes == ("built by hand",)


def test_round_trip():
    s = parse_script(TEXT)
    assert parse_script(format_script(s)) == s
    assert format_script(parse_script(format_script(s))) == format_script(s)


def test_notes_do_not_affect_equality():
    a = ConstructionScript([Grid(2, 2)], ["x"])
    assert a == ConstructionScript([Grid(2, 2)])


@pytest.mark.parametrize("text, line, column", [
    ("grid 3\n", 1, 1),
    ("grid 3 3\nfork index x\n", 2, 12),
    ("grid 3 3\n\n  remove side up\n", 3, 15),
    ("grid 2 2\nshrink 1\n", 2, 1),
    ("grid 2 2\nfork 1\n", 2, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_script(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}: ")


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 4), st.integers(0, 3),
       st.integers(0, 2**64 - 1))
def test_random_scripts_round_trip(m, n, forks, removals, seed):
    s = random_script(m, n, forks, removals, seed)
    back = parse_script(format_script(s))
    assert back == s and back.notes == s.notes
