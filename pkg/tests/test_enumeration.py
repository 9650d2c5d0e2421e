import pytest

from elliptri.analysis import classify
from elliptri.core import ClosedTriangulation, Patch, canonical_code
from elliptri.enumeration import (
    enumerate_closed,
    enumerate_closed_naive,
    enumerate_patches,
    vertex_splits,
)
from elliptri.errors import CapExceeded

import oracle


def test_small_counts():
    assert [len(enumerate_closed(n)) for n in range(4, 9)] == [1, 1, 2, 5, 14]


def test_results_are_pairwise_distinct_spheres():
    res = enumerate_closed(8)
    assert len(set(res.codes)) == len(res)
    for t in res:
        assert isinstance(t, ClosedTriangulation)
        oracle.sphere_signature_loose(t.triangles)


def test_elliptic_filter():
    res = enumerate_closed(6, elliptic_only=True)
    assert sorted(res.signatures()) == [(0, 6, 0, 0), (2, 2, 2, 0)]


def test_naive_agrees():
    for n in range(4, 8):
        assert set(enumerate_closed(n).codes) == set(enumerate_closed_naive(n).codes)


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_closed(11)
    with pytest.raises(CapExceeded):
        enumerate_closed_naive(8)


def test_deterministic():
    a, b = enumerate_closed(8), enumerate_closed(8)
    assert a.codes == b.codes


def test_vertex_splits_add_one_point():
    t = next(iter(enumerate_closed(6)))
    for tris in vertex_splits(t.triangles):
        assert len(tris) == len(t.triangles) + 2
        assert len({v for f in tris for v in f}) == t.f1 + 1


def test_patches_of_030_at_b3():
    res = enumerate_patches(3, (0, 3, 0))
    assert sorted(classify(p).N for p in res) == [0, 3]
    for p in res:
        assert isinstance(p, Patch)
        assert oracle.patch_signature(p.triangles)[:4] == classify(p).tuple


def test_patch_result_dict():
    d = enumerate_patches(4, max_f1=6).as_dict()
    assert d["kind"] == "patch" and d["size"] == 4
    assert d["count"] == sum(d["tally"].values())


def test_codes_are_label_free():
    res = enumerate_closed(7)
    for t in res:
        u = t.relabel({v: v + 10 for v in t.vertices})
        assert canonical_code(u).code in set(res.codes)
