import pytest

from elliptri import catalog, is_isomorphic
from elliptri.analysis import classify
from elliptri.errors import BoundaryLengthMismatch, InvalidTriangleChoice, PlacementUnsatisfied, StaleSite
from elliptri.rewrites import (
    KINDS,
    RewriteSite,
    apply_rewrite_ex,
    connected_sum,
    delta,
    edge_fullering,
    face_fullering,
    find_sites,
    glue_method,
    glue_strip,
    insert_belt,
    iterate_rewrite,
    straight_loops,
    triangles_with_degrees,
)

import oracle


def test_every_kind_has_a_delta():
    for kind, stages in KINDS.items():
        for pat in stages:
            # curvature is conserved: 3da3 + 2da4 + da5 = 0
            d3, d4, d5, _ = pat.delta
            assert 3 * d3 + 2 * d4 + d5 == 0, kind


def test_a_iterates_to_any_n():
    t = catalog.closed("(2,2,2,0)")
    chain = iterate_rewrite(t, "A", 6)
    assert [classify(c).N for c in chain] == [1, 2, 3, 4, 5, 6]


def test_stale_site_is_rejected():
    t = catalog.closed("(2,2,2,0)")
    site = find_sites(t, "A")[0]
    bogus = RewriteSite("A", tuple(reversed(site.vertices)))
    with pytest.raises(StaleSite):
        apply_rewrite_ex(t, bogus)


def test_site_dict():
    t = catalog.closed("(0,6,0,0)")
    site = find_sites(t, "B1")[0]
    d = site.as_dict()
    assert d["kind"] == "B1" and set(d["roles"]) >= {"v", "w", "x"}


def test_face_fullering_tetrahedron():
    tet = catalog.closed("(4,0,0,0)")
    ff = face_fullering(tet)
    assert (ff.f1, ff.f2, ff.f3) == (8, 18, 12)
    assert is_isomorphic(ff, catalog.closed("(4,0,0,4)"))
    assert classify(face_fullering(catalog.closed("(0,6,0,0)"))).tuple == (0, 6, 0, 8)


def test_edge_fullering_tetrahedron():
    ef = edge_fullering(catalog.closed("(4,0,0,0)"))
    assert classify(ef).tuple == (4, 0, 0, 6) and ef.f1 == 10
    assert oracle.sphere_signature(ef.triangles) == (4, 0, 0, 6)


def test_edge_fullering_patch_doubles_b():
    p = catalog.patch("(1,1,1,2)_4")
    q = edge_fullering(p)
    assert classify(q).b == 2 * p.b and q.f3 == 4 * p.f3


def test_glue_strip_length_mismatch():
    with pytest.raises(BoundaryLengthMismatch):
        glue_strip(catalog.patch("(0,0,6,3)_6"), catalog.patch("(1,1,1,2)_4"))


def test_glue_method_c_and_b():
    p, q = catalog.patch("(1,1,1,4)_5"), catalog.patch("(1,1,1,11)_5")
    assert classify(glue_method(p, q, "C").triangulation).tuple == (2, 3, 0, 17)
    with pytest.raises(PlacementUnsatisfied):
        glue_method(p, q, "B")


def test_glue_path_patches():
    from elliptri.patches import build_200

    g = glue_strip(build_200(3, 0), build_200(3, 0))
    assert classify(g.triangulation).tuple == (4, 0, 0, 4)


def test_connected_sum_checks_triangles():
    octa = catalog.closed("(0,6,0,0)")
    with pytest.raises(InvalidTriangleChoice):
        connected_sum(octa, (1, 2, 99), octa, octa.triangles[0])


def test_connected_sum_degrees():
    octa = catalog.closed("(0,6,0,0)")
    tri = triangles_with_degrees(octa, (4, 4, 4))[0]
    s = connected_sum(octa, tri, octa, tri)
    assert delta(octa, s) == (0, 0, 0, 3)


def test_insert_belt_adds_a_ring():
    t = catalog.closed("(0,0,12,2)")
    loops = straight_loops(t)
    assert loops
    u = insert_belt(t, loops[0], 2)
    assert classify(u).type == (0, 0, 12)
    assert classify(u).N == classify(t).N + 2 * len(loops[0])
