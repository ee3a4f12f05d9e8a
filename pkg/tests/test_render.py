import xml.etree.ElementTree as ET

from tdeform.divisor import ZERO
from tdeform.polyhedra import LatticePolyhedron
from tdeform.render import centered_box, clipped_region, count_lattice_points, default_box, render_svg

from .conftest import QUADRANT, e1

NS = "{http://www.w3.org/2000/svg}"


def counts(svg: str) -> dict:
    root = ET.fromstring(svg)
    out: dict = {}
    for el in root.iter():
        cls = el.get("class")
        if cls:
            out[cls] = out.get(cls, 0) + 1
    return out


def test_e1_at_zero():
    p = e1().coefficient(ZERO)
    c = counts(render_svg(p))
    assert c["vertex"] == 2 and c["edge-finite"] == 1 and c["edge-infinite"] == 2
    assert c["fan-ray"] == 3
    assert c["lattice-point"] == count_lattice_points(p, default_box(p))


def test_sigma_alone():
    p = LatticePolyhedron.cone(QUADRANT)
    c = counts(render_svg(p))
    assert c["vertex"] == 1 and c.get("edge-finite", 0) == 0 and c["edge-infinite"] == 2


def test_default_box_grows_by_two_tail_steps():
    p = e1().coefficient(ZERO)
    assert default_box(p) == (0, -2, 4, 2)


def test_deterministic_bytes():
    p = e1().coefficient(ZERO)
    assert render_svg(p) == render_svg(p)
    assert render_svg(p, centered_box(p, 6, 6)) == render_svg(p, centered_box(p, 6, 6))


def test_clipped_region_lies_in_polyhedron_and_box():
    p = e1().coefficient(ZERO)
    box = centered_box(p, 4, 3)
    region = clipped_region(p, box)
    assert region
    for x, y in region:
        assert box[0] <= x <= box[2] and box[1] <= y <= box[3]
        assert all(n[0] * x + n[1] * y >= p.eval(n) for n in p.fan.rays)


def test_lattice_points_are_in_polyhedron():
    p = e1().coefficient(ZERO)
    root = ET.fromstring(render_svg(p))
    dots = [el for el in root.iter(NS + "circle") if el.get("class") == "lattice-point"]
    assert len(dots) == count_lattice_points(p, default_box(p)) > 0
