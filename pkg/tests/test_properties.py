"""Seeded randomized checks of invariants against the networkx oracle."""

import random

import pytest

from elliptri.analysis import classify, parameters
from elliptri.core import ClosedTriangulation, canonical_code, parse_face_list, serialize
from elliptri.enumeration import enumerate_closed
from elliptri.rewrites import KINDS, apply_rewrite_ex, edge_fullering, face_fullering, find_sites

import oracle

SEEDS = range(12)


@pytest.fixture(scope="module")
def spheres():
    return list(enumerate_closed(9, elliptic_only=True))


@pytest.mark.parametrize("seed", SEEDS)
def test_relabel_keeps_code(seed, spheres):
    rng = random.Random(seed)
    t = rng.choice(spheres)
    labels = rng.sample(range(1, 200), t.f1)
    u = t.relabel(dict(zip(t.vertices, labels)))
    assert canonical_code(u) == canonical_code(t)
    assert parse_face_list(serialize(u)).face_set == u.face_set


@pytest.mark.parametrize("seed", SEEDS)
def test_random_rewrites_match_oracle(seed, spheres):
    rng = random.Random(seed)
    t = rng.choice(spheres)
    for _ in range(6):
        options = [s for k in KINDS for s in find_sites(t, k)]
        if not options:
            break
        res = apply_rewrite_ex(t, rng.choice(options))
        before = oracle.sphere_signature(t.triangles)
        after = oracle.sphere_signature(res.triangulation.triangles)
        assert tuple(y - x for x, y in zip(before, after)) == res.delta
        t = res.triangulation
    assert classify(t).tuple == oracle.sphere_signature(t.triangles)


@pytest.mark.parametrize("seed", SEEDS)
def test_fullering_identities(seed, spheres):
    t = random.Random(seed).choice(spheres)
    for op, grow, mult in ((face_fullering, t.f3, 3), (edge_fullering, t.f2, 4)):
        u = op(t)
        assert isinstance(u, ClosedTriangulation)
        a, b = oracle.sphere_signature(t.triangles), oracle.sphere_signature(u.triangles)
        assert b[:3] == a[:3] and b[3] == a[3] + grow
        assert u.f2 == mult * t.f2


def test_curvature_is_twelve(spheres):
    for t in spheres:
        assert parameters(t).curvature() == 12
