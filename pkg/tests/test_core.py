import pytest

from elliptri import (
    ClosedTriangulation,
    Patch,
    canonical_code,
    canonical_form,
    is_isomorphic,
    parse_face_list,
    serialize,
    validate,
)
from elliptri.core import parse_token, rotate_min
from elliptri.errors import (
    BoundaryNotSingleCycle,
    Disconnected,
    MalformedToken,
    NonManifoldEdge,
    NotOrientable,
    ValidationError,
)

TETRA = "123 134 142 243"
OCTA = "123 134 145 152 623 634 645 652"


def test_tokens():
    assert parse_token("12A") == (1, 2, 10)
    assert parse_token("10-11-12") == (10, 11, 12)
    with pytest.raises(MalformedToken):
        parse_token("12")
    assert rotate_min((3, 1, 2)) == (1, 2, 3)
    assert rotate_min((3, 2, 1)) == (1, 3, 2)


def test_tetrahedron_is_closed():
    t = parse_face_list(TETRA)
    assert isinstance(t, ClosedTriangulation)
    assert (t.f1, t.f2, t.f3, t.euler) == (4, 6, 4, 2)
    assert set(t.degrees.values()) == {3}


def test_single_triangle_patch():
    p = parse_face_list("123")
    assert isinstance(p, Patch)
    assert p.b == 3
    # boundary convention adds 2
    assert all(p.deg(v) == 4 for v in p.vertices)
    assert p.boundary_degrees() == (4, 4, 4)


def test_boundary_declaration_is_kept():
    p = parse_face_list("triangles: 123 124\nboundary: 1324")
    assert p.boundary[0] == 1 and set(p.boundary) == {1, 2, 3, 4}


@pytest.mark.parametrize("text,exc", [
    ("123 124 125", NonManifoldEdge),
    ("123 456", Disconnected),
    ("1x3", MalformedToken),
])
def test_malformed_inputs_raise(text, exc):
    with pytest.raises(exc):
        parse_face_list(text)


def test_validation_errors_share_a_base():
    for exc in (NonManifoldEdge, Disconnected, BoundaryNotSingleCycle, NotOrientable):
        assert issubclass(exc, ValidationError)
        assert exc.exit_code == 2


def test_validate_reports_every_check():
    rep = validate("123 124 125")
    assert not rep.ok
    assert rep.get("NonManifoldEdge").passed is False
    assert rep.as_dict()["ok"] is False
    assert validate(TETRA).ok


def test_two_cycles_on_boundary():
    # two triangles sharing only a point: boundary pinches
    rep = validate("123 145")
    assert not rep.ok


def test_serialize_round_trip():
    t = parse_face_list(OCTA)
    again = parse_face_list(serialize(t))
    assert again.triangles == t.triangles
    big = t.relabel({v: v + 40 for v in t.vertices})
    assert "-" in serialize(big)
    assert parse_face_list(serialize(big)).triangles == big.triangles


def test_canonical_code_ignores_labels():
    t = parse_face_list(OCTA)
    u = t.relabel({1: 9, 2: 7, 3: 8, 4: 10, 5: 11, 6: 12})
    assert canonical_code(t) == canonical_code(u)
    assert is_isomorphic(t, u)
    assert not is_isomorphic(t, parse_face_list(TETRA))
    assert canonical_form(u).triangles == canonical_form(t).triangles


def test_mirror_is_identified_by_default():
    t = parse_face_list(OCTA)
    assert canonical_code(t) == canonical_code(t.mirror())


def test_patch_cone_is_closed():
    p = parse_face_list("123 134 145")
    c = p.cone()
    assert isinstance(c, ClosedTriangulation)
    assert c.f1 == p.f1 + 1
