import json

import pytest

from snweb.diagram import (DOWN, UP, Slice, SlicedDiagram, braid_closure, closed,
                           component_count, juxtapose, kinked_unknot, parse_web, render_web,
                           rotate_basepoint, theta, unknot, vertex_count, vertex_slices,
                           writhe)
from snweb.errors import ValidationError, WebSyntaxError


def test_signatures_track_orientation():
    d = closed(3, [Slice("cupE", 0), Slice("cupQ", 0), Slice("capE", 0), Slice("capQ", 0)])
    assert d.signatures[2] == (DOWN, UP, UP, DOWN)
    assert d.is_closed()


def test_roundtrip():
    d = braid_closure(3, [1, 2, 1], gens=["xp", "xm", "xp"])
    again = parse_web(render_web(d))
    assert again.slices == d.slices and again.n == d.n
    assert render_web(again) == render_web(d)


@pytest.mark.parametrize("text, needle", [
    ("not json", "JSON"),
    ('{"n": 2}', "required"),
    ('{"n": 2, "slices": [{"gen": "zz", "at": 0}]}', "slice 0"),
    ('{"n": 2, "slices": [{"gen": "cupE", "at": true}]}', "slice 0"),
])
def test_syntax_errors(text, needle):
    with pytest.raises(WebSyntaxError, match=needle):
        parse_web(text)


def test_validation_names_slice():
    text = json.dumps({"n": 2, "slices": [{"gen": "cupE", "at": 0}, {"gen": "vin", "at": 0}]})
    with pytest.raises(ValidationError, match="slice 1"):
        parse_web(text)


def test_open_diagram_rejected():
    with pytest.raises(ValidationError, match="close"):
        parse_web(json.dumps({"n": 2, "slices": [{"gen": "cupE", "at": 0}]}))


def test_writhe_and_components():
    assert writhe(braid_closure(2, [1, 1, 1])) in (3, -3)
    assert component_count(braid_closure(2, [1, 1], strands=2)) == 2
    assert component_count(braid_closure(2, [1, 1, 1], strands=2)) == 1
    assert writhe(kinked_unknot(3)) == 1
    assert writhe(kinked_unknot(3, gen="xm")) == -1


def test_vertices():
    assert vertex_count(theta(3)) == (1, 1)
    assert vertex_slices(theta(3)) == [0, 1]
    assert component_count(unknot(2)) == 1


def test_juxtapose_counts():
    d = juxtapose(unknot(2), unknot(2))
    assert component_count(d) == 2 and d.is_closed()


def test_rotate_basepoint_stays_valid():
    d = rotate_basepoint(theta(3), 0, 1)
    assert d.is_closed()
    assert vertex_count(d) == (1, 1)


def test_x4_only_when_singular():
    with pytest.raises(WebSyntaxError):
        parse_web('{"n": 2, "slices": [{"gen": "x4", "at": 0}]}')
