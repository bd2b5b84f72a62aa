import io
import re
from fractions import Fraction

from spsdiagram.construction import grid
from spsdiagram.plotting import diagram_figure, save_diagram_png, summary_figure
from spsdiagram.render import decimal, render_svg, render_tikz
from spsdiagram.verify import verify_all


def test_decimal():
    assert decimal(Fraction(1, 2)) == "0.5"
    assert decimal(Fraction(1, 3)) == "0.333333"
    assert decimal(Fraction(-2, 3)) == "-0.666667"
    assert decimal(Fraction(4)) == "4"
    assert decimal(Fraction(0)) == "0"


def test_svg_of_s7(s7):
    svg = render_svg(s7)
    assert svg.count("<circle") == 7
    assert svg.count("<line") == 9
    assert len(re.findall(r'<line class="steep"', svg)) == 1


def test_svg_of_grid():
    svg = render_svg(grid(3, 3))
    assert (svg.count("<circle"), svg.count("<line"), svg.count('class="steep"')) == (9, 12, 0)


def test_svg_labels(l3):
    assert render_svg(l3).count("<text") == 0
    assert render_svg(l3, labels=True).count("<text") == l3.n


def test_svg_scale_applies_to_coordinates():
    small = render_svg(grid(2, 2), scale=1)
    big = render_svg(grid(2, 2), scale=10)
    assert small != big
    assert 'cy="-20"' in big


def test_tikz(s7):
    tex = render_tikz(s7)
    assert tex.count("\\draw") == 9
    assert tex.count("\\draw[steep]") == 1
    assert render_tikz(grid(2, 2)).count("\\draw") == 4
    assert "scale=1" in render_tikz(grid(2, 2))
    assert render_tikz(s7, labels=True).count("\\node") == 7


def test_text_renderers_are_deterministic(l3):
    assert render_svg(l3, labels=True) == render_svg(l3, labels=True)
    assert render_tikz(l3) == render_tikz(l3)


def test_png_is_deterministic(tmp_path, l3):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    save_diagram_png(l3, a, labels=True, highlight=[(6, 3)], title="L3")
    save_diagram_png(l3, b, labels=True, highlight=[(6, 3)], title="L3")
    data = a.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert data == b.read_bytes()


def test_figures_draw(s7):
    fig = diagram_figure(s7, labels=True)
    assert len(fig.axes) == 1
    fig = summary_figure([(1, verify_all(s7)), (2, verify_all(grid(2, 3)))])
    buf = io.BytesIO()
    fig.savefig(buf, format="png")
    assert buf.getvalue()
