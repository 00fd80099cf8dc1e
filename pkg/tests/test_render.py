import xml.etree.ElementTree as ET

from pdgwebster import Algebra
from pdgwebster.parser import parse
from pdgwebster.render import render_svg, render_tikz


def test_svg_is_well_formed():
    A = Algebra("D", (2,), 1, 3)
    el = parse("psi@1 psi@1 e(b,2) + 2 E(1)@2 e(b,2)", A)
    root = ET.fromstring(render_svg(el))
    assert root.tag.endswith("svg")
    circles = [c for c in root.iter() if c.tag.endswith("circle")]
    assert len(circles) == 1
    texts = "".join(t.text or "" for t in root.iter() if t.tag.endswith("text"))
    assert "E1" in texts and "2" in texts


def test_zero_element():
    A = Algebra("NH", (), 1, 3)
    assert ET.fromstring(render_svg(A.zero())) is not None
    assert "zero" in render_tikz(A.zero())


def test_tikz_one_picture_per_term():
    A = Algebra("NH", (), 2, 3)
    out = render_tikz(parse("x@1 + psi@1", A))
    assert out.count("\\begin{tikzpicture}") == 2


def test_merge_vertex():
    A = Algebra("D", (2, 1), 1, 3)
    el = parse("psi@2 psi@1 e(b,2,1)", A)
    plain = render_svg(el)
    merged = render_svg(el, ("up", 1))
    assert merged.count("<line") == plain.count("<line") + 2
    assert ">3</text>" in merged
