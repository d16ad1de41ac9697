import xml.etree.ElementTree as ET

import pytest

from bncm.errors import EmptyMatching, IndexOutOfRange
from bncm.matching import Matching
from bncm.svg import render_svg

NS = "{http://www.w3.org/2000/svg}"
PTS = [(0, 0), (1, 0), (0, 3), (1, 3)]


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


def test_structure():
    root = parse(render_svg(PTS, Matching.from_pairs([(0, 2), (1, 3)]), title="t"))
    assert len(root.findall(f"{NS}circle")) == 4
    assert len(root.findall(f"{NS}line")) == 2


def test_longest_edge_is_styled():
    root = parse(render_svg(PTS, Matching.from_pairs([(0, 1), (2, 3)])))
    lines = root.findall(f"{NS}line")
    assert sorted(l.get("class") for l in lines) == ["edge", "longest"]
    styles = {l.get("class"): l.get("stroke") for l in lines}
    assert styles["edge"] != styles["longest"]


def test_viewport_margin():
    root = parse(render_svg(PTS, Matching.from_pairs([(0, 1), (2, 3)]), size=100))
    w, h = float(root.get("width")), float(root.get("height"))
    assert h == pytest.approx(100) and w == pytest.approx(100 * 1.3 / 3.3, abs=0.01)
    xs = [float(c.get("cx")) for c in root.findall(f"{NS}circle")]
    assert min(xs) == pytest.approx(100 * 0.15 / 3.3, abs=1e-3)


def test_errors():
    with pytest.raises(EmptyMatching):
        render_svg(PTS, Matching(()))
    with pytest.raises(IndexOutOfRange):
        render_svg(PTS, Matching.from_pairs([(0, 9)]))
