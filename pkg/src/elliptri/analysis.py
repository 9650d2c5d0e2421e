"""Degrees, parameter vectors and type signatures."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Union

from .core import ClosedTriangulation, Patch, PathPatch
from .errors import NotElliptic, UnknownVertex, VertexOnBoundary

Obj = Union[ClosedTriangulation, Patch, PathPatch]

# the seven solutions of 3*a3 + 2*a4 + a5 = 6
PATCH_TYPES = tuple(
    (a3, a4, a5)
    for a3 in range(3) for a4 in range(4) for a5 in range(7)
    if 3 * a3 + 2 * a4 + a5 == 6
)
# the nineteen solutions of 3*a3 + 2*a4 + a5 = 12
CLOSED_TYPES = tuple(
    (a3, a4, a5)
    for a3 in range(5) for a4 in range(7) for a5 in range(13)
    if 3 * a3 + 2 * a4 + a5 == 12
)


def degree(obj: Obj, v: int) -> int:
    """Triangle count inside, triangles + 3 on a patch boundary."""
    if v not in obj.vertices:
        raise UnknownVertex(f"no vertex {v}")
    return obj.deg(v)


@dataclass(frozen=True)
class ParamVector:
    alpha: dict[int, int]
    f1: int
    f2: int
    f3: int
    euler: int

    def __getitem__(self, d: int) -> int:
        return self.alpha.get(d, 0)

    def curvature(self) -> int:
        return sum((6 - d) * n for d, n in self.alpha.items())


def parameters(obj: Obj) -> ParamVector:
    hist = Counter(obj.deg(v) for v in obj.vertices)
    f1, f2, f3 = obj.f1, obj.f2, obj.f3
    pv = ParamVector(dict(sorted(hist.items())), f1, f2, f3, f1 - f2 + f3)
    assert sum(hist.values()) == f1
    # degree sums: 2*f2 on a sphere, with the boundary convention adding 3 per boundary point
    if isinstance(obj, ClosedTriangulation):
        assert sum(d * n for d, n in hist.items()) == 2 * f2
        assert pv.curvature() == 6 * pv.euler == 12
    else:
        assert pv.curvature() == 6
    return pv


@dataclass(frozen=True)
class ClosedSignature:
    a3: int
    a4: int
    a5: int
    a6: int

    @property
    def type(self) -> tuple[int, int, int]:
        return (self.a3, self.a4, self.a5)

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.a3, self.a4, self.a5, self.a6)

    @property
    def N(self) -> int:
        return self.a6

    def __str__(self) -> str:
        return f"({self.a3},{self.a4},{self.a5},{self.a6})"

    def as_dict(self) -> dict:
        return {"kind": "closed", "type": list(self.type), "a6": self.a6, "notation": str(self)}


@dataclass(frozen=True)
class PatchSignature:
    a3: int
    a4: int
    a5: int
    a6: int
    b: int
    beta4: int
    beta5: int
    boundary_degrees: tuple[int, ...] = field(default=(), compare=False)

    @property
    def type(self) -> tuple[int, int, int]:
        return (self.a3, self.a4, self.a5)

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.a3, self.a4, self.a5, self.a6)

    @property
    def N(self) -> int:
        return self.a6

    def notation(self) -> str:
        return f"({self.a3},{self.a4},{self.a5},{self.a6})_{self.b}"

    def __str__(self) -> str:
        parts = [self.notation()]
        if self.beta4:
            parts.append(f"β4={self.beta4}")
        if self.beta5:
            parts.append(f"β5={self.beta5}")
        return " ".join(parts)

    def as_dict(self) -> dict:
        return {
            "kind": "patch",
            "type": list(self.type),
            "a6": self.a6,
            "b": self.b,
            "beta4": self.beta4,
            "beta5": self.beta5,
            "boundary_degrees": list(self.boundary_degrees),
            "notation": self.notation(),
        }


Signature = Union[ClosedSignature, PatchSignature]


def classify(obj: Obj) -> Signature:
    """Type tuple and N; for a patch also b, β4 and β5."""
    degs = obj.degrees
    bad = tuple(sorted(v for v, d in degs.items() if d > 6))
    if bad:
        raise NotElliptic(f"degree above 6 at {list(bad)}", bad)
    hist = Counter(degs.values())
    if isinstance(obj, ClosedTriangulation):
        return ClosedSignature(hist[3], hist[4], hist[5], hist[6])
    bdeg = obj.boundary_degrees()
    if isinstance(obj, PathPatch):
        # multiplicities on the walk do not change the point counts
        bset = Counter(degs[v] for v in obj.path)
        b4 = b5 = 0
    else:
        bset = Counter(degs[v] for v in obj.boundary)
        b4, b5 = bset[4], bset[5]
    return PatchSignature(hist[3], hist[4], hist[5], hist[6], obj.b, b4, b5, bdeg)


def is_elliptic(obj: Obj) -> bool:
    return all(d <= 6 for d in obj.degrees.values())


def format_signature(sig: Signature) -> str:
    return str(sig)


# ---------------------------------------------------------------------------
# distance of an interior point from the boundary
# ---------------------------------------------------------------------------

def _strip_boundary(p: Patch) -> Patch | None:
    """Remove every boundary point with its triangles; None if no disc remains."""
    keep = [t for t in p.triangles if not (set(t) & p.boundary_set)]
    if not keep:
        return None
    try:
        return Patch.from_triangles(keep)
    except Exception:
        return None


def graph_distance_to_boundary(p: Patch, v: int) -> int:
    """Edge distance from ``v`` to the nearest boundary point."""
    seen = {v}
    frontier = [v]
    dist = 0
    while frontier:
        if any(u in p.boundary_set for u in frontier):
            return dist
        nxt = []
        for u in frontier:
            for w in p.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        dist += 1
    raise ValueError("boundary unreachable")


def interior_distance(patch: Patch, v: int, with_flag: bool = False):
    """Rounds of corner cutting plus belt peeling needed to expose ``v``.

    Each round cuts every cuttable degree-4 corner and then removes the
    boundary ring.  When the peeled remainder is no longer a disc the count
    falls back to graph distance and the result is flagged approximate.
    """
    from .patches import cut_corner  # local import, patches depends on this module

    if v not in patch.vertex_set:
        raise UnknownVertex(f"no vertex {v}")
    if v in patch.boundary_set:
        raise VertexOnBoundary(f"vertex {v} lies on the boundary")
    p = patch
    k = 0
    while True:
        changed = True
        while changed:
            changed = False
            for x in p.boundary:
                if p.deg(x) != 4:
                    continue
                try:
                    q = cut_corner(p, x)
                except Exception:
                    continue
                if v in q.vertex_set:
                    p = q
                    changed = True
                    break
        if v in p.boundary_set:
            return (k, False) if with_flag else k
        q = _strip_boundary(p)
        k += 1
        if q is None or v not in q.vertex_set:
            d = k - 1 + graph_distance_to_boundary(p, v)
            return (d, True) if with_flag else d
        p = q
        if v in p.boundary_set:
            return (k, False) if with_flag else k
