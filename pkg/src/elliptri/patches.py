"""Constructions on patches.

Belts, corner cutting, lattice tessellations and their truncations, the
(0,3,0) and (2,0,0) builders, generic enlargement, strip insertion and the
(1,1,1) families.  Every builder returns a validated object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import catalog
from .analysis import classify
from .core import Patch, PathPatch, Tri, ekey
from .errors import (
    BoundaryDegreeNotSix,
    FamilyWitnessUnavailable,
    ForbiddenChord,
    InsufficientBoundaryPoints,
    NotDegree4Corner,
    ParameterDomainError,
    PlacementUnsatisfied,
    ValidationError,
)
from .formulas import PLAIN_FAMILIES, STRIP_FAMILIES, family_signature

AnyPatch = Union[Patch, PathPatch]


def _next_id(p: AnyPatch) -> int:
    return max(p.vertices) + 1


# ---------------------------------------------------------------------------
# belts
# ---------------------------------------------------------------------------

def _belt_triangles(walk: Sequence[int], start: int,
                    push: dict[int, int] | None = None) -> tuple[list[Tri], list[int]]:
    """Triangles of a belt around the boundary walk plus the new boundary.

    ``push`` maps walk positions to 4 or 5: the point at that position is
    pushed out so that a new boundary point of that degree appears.
    """
    b = len(walk)
    n = list(range(start, start + b))
    nxt = start + b
    tris: list[Tri] = []
    outer: list[int] = []
    push = push or {}
    for i in range(b):
        w0, w1 = walk[i], walk[(i + 1) % b]
        tris.append((w1, w0, n[i]))
        # the triangle (w1, n_i, n_{i+1}) sits at w1 = walk[i+1]
        j = (i + 1) % b
        outer.append(n[i])
        kind = push.get(j)
        if kind is None:
            tris.append((w1, n[i], n[j]))
        elif kind == 5:
            p = nxt
            nxt += 1
            tris += [(w1, n[i], p), (w1, p, n[j])]
            outer.append(p)
        elif kind == 4:
            x, y, z = nxt, nxt + 1, nxt + 2
            nxt += 3
            tris += [(w1, n[i], x), (w1, x, y), (w1, y, n[j]), (x, z, y)]
            outer += [x, z, y]
        else:
            raise ValueError(kind)
    return tris, outer


def add_belt(patch: AnyPatch, m: int = 1) -> AnyPatch:
    """Surround the patch with ``m`` belts of 2b triangles each."""
    p = patch
    for _ in range(m):
        tris, outer = _belt_triangles(p.boundary, _next_id(p))
        p = Patch.from_triangles(list(p.triangles) + tris, outer)
    return p


@dataclass(frozen=True)
class Residue:
    """Lower-dimensional remainder of a peel: a graph or isolated points."""

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def _path_of(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> tuple[int, ...] | None:
    vs = set(vertices)
    es = set(edges)
    adj: dict[int, list[int]] = {v: [] for v in vs}
    for a, b in es:
        adj[a].append(b)
        adj[b].append(a)
    ends = [v for v, n in adj.items() if len(n) == 1]
    if len(es) != len(vs) - 1 or len(ends) != 2 or any(len(n) > 2 for n in adj.values()):
        return None
    path = [min(ends)]
    prev = None
    while len(path) < len(vs):
        cur = path[-1]
        nxt = [w for w in adj[cur] if w != prev]
        prev = cur
        path.append(nxt[0])
    return tuple(path)


def peel_belt(patch: Patch) -> Patch | PathPatch | Residue:
    """Remove the boundary ring; every boundary point must have degree 6."""
    bad = [v for v in patch.boundary if patch.deg(v) != 6]
    if bad:
        raise BoundaryDegreeNotSix(f"boundary points of degree != 6: {bad}")
    bset = patch.boundary_set
    keep = [t for t in patch.triangles if not (set(t) & bset)]
    inner = [v for v in patch.vertices if v not in bset]
    if keep:
        q = Patch.from_triangles(keep)
        b = patch.b
        assert (q.f1, q.f2, q.f3) == (patch.f1 - b, patch.f2 - 3 * b, patch.f3 - 2 * b)
        return q
    edges = tuple(e for e in patch.edges if e[0] not in bset and e[1] not in bset)
    path = _path_of(inner, edges)
    if path is not None and len(path) >= 3:
        return PathPatch(path)
    return Residue("graph" if edges else "points", tuple(inner), edges)


# ---------------------------------------------------------------------------
# corners
# ---------------------------------------------------------------------------

def _corner_frame(patch: Patch, x: int) -> tuple[int, int]:
    """Boundary successor and predecessor of the degree-4 corner ``x``."""
    if x not in patch.boundary_set:
        raise NotDegree4Corner(f"{x} is not a boundary point")
    if patch.deg(x) != 4:
        raise NotDegree4Corner(f"{x} has degree {patch.deg(x)}, not 4")
    a, b = patch.rotation(x)
    return a, b


def cut_corner(patch: Patch, x: int) -> Patch:
    """Replace the four triangles at the corner ``x`` by a single triangle.

    With ``x1 x2 x3`` the corner triangle and ``x2 x4 x5, x2 x3 x5, x3 x5 x6``
    its neighbours, the result has ``x4 x5 x6`` instead; b drops by 3.
    """
    x2, x3 = _corner_frame(patch, x)
    r2 = patch.rotation(x2)
    r3 = patch.rotation(x3)
    if len(r2) != 4 or len(r3) != 4 or r2[1] != r3[2]:
        raise ForbiddenChord(f"corner at {x} is too small to cut")
    x4, x5, x6 = r2[0], r2[1], r3[3]
    if len({x, x2, x3, x4, x5, x6}) < 6:
        raise ForbiddenChord(f"corner at {x} is too small to cut (frame points coincide)")
    if x5 in patch.boundary_set:
        raise ForbiddenChord(f"corner at {x} is too small to cut (x5 on the boundary)")
    if patch.has_edge(x4, x6):
        raise ForbiddenChord(f"x4 x6 = {x4} {x6} is already an edge")
    drop = {frozenset(t) for t in ((x, x2, x3), (x2, x4, x5), (x2, x3, x5), (x3, x5, x6))}
    tris = [t for t in patch.triangles if frozenset(t) not in drop] + [(x6, x4, x5)]
    bd = [v for v in patch.boundary if v not in (x, x2, x3)]
    return Patch.from_triangles(tris, bd)


# ---------------------------------------------------------------------------
# lattice patches
# ---------------------------------------------------------------------------

Point = tuple[int, int]


def _lattice_patch(up: Iterable[Point], down: Iterable[Point], start: Point) -> tuple[Patch, dict[Point, int]]:
    """Patch from unit lattice triangles; ``start`` becomes the first boundary point."""
    tris_xy: list[tuple[Point, Point, Point]] = []
    for i, j in up:
        tris_xy.append(((i, j), (i + 1, j), (i, j + 1)))
    for i, j in down:
        tris_xy.append(((i + 1, j), (i + 1, j + 1), (i, j + 1)))
    pts = sorted({q for t in tris_xy for q in t}, key=lambda q: (q[1], q[0]))
    ids = {q: n + 1 for n, q in enumerate(pts)}
    p = Patch.from_triangles([tuple(ids[q] for q in t) for t in tris_xy])
    p = p.with_boundary_start(ids[start])
    return p, ids


def tessellation(h: int) -> Patch:
    """P_h: the triangle of side h cut into h^2 unit triangles."""
    if h < 1:
        raise ParameterDomainError("tessellation needs h >= 1")
    up = [(i, j) for i in range(h) for j in range(h) if i + j <= h - 1]
    down = [(i, j) for i in range(h) for j in range(h) if i + j <= h - 2]
    return _lattice_patch(up, down, (0, 0))[0]


def lattice_corners(h: int) -> tuple[int, int, int]:
    """Ids of the corners (0,0), (h,0), (0,h) of ``tessellation(h)``."""
    pts = sorted(((i, j) for j in range(h + 1) for i in range(h + 1 - j)), key=lambda q: (q[1], q[0]))
    ids = {q: n + 1 for n, q in enumerate(pts)}
    return ids[(0, 0)], ids[(h, 0)], ids[(0, h)]


@dataclass(frozen=True)
class Truncation:
    patch: Patch
    segments: dict[str, tuple[int, ...]]


def truncate(k: int, g: int) -> Truncation:
    """Tr_g(P_k): remove the corner copy of P_g at the origin.

    Segments: ``lower`` is the far side (k edges), ``upper`` the cut line
    (g edges), ``left`` and ``right`` the two legs.
    """
    if not 0 < g < k:
        raise ParameterDomainError("truncation needs 0 < g < k")
    up = [(i, j) for i in range(k) for j in range(k) if g <= i + j <= k - 1]
    down = [(i, j) for i in range(k) for j in range(k) if g - 1 <= i + j <= k - 2]
    p, ids = _lattice_patch(up, down, (g, 0))
    seg = {
        "lower": tuple(ids[(k - t, t)] for t in range(k + 1)),
        "upper": tuple(ids[(g - t, t)] for t in range(g + 1)),
        "right": tuple(ids[(i, 0)] for i in range(g, k + 1)),
        "left": tuple(ids[(0, j)] for j in range(g, k + 1)),
    }
    return Truncation(p, seg)


def parallelogram(u: int, v: int) -> Patch:
    """Lattice parallelogram with sides u and v; corners of degree 4,5,4,5."""
    if u < 1 or v < 1:
        raise ParameterDomainError("parallelogram needs u, v >= 1")
    up = [(i, j) for i in range(u) for j in range(v)]
    down = list(up)
    return _lattice_patch(up, down, (0, 0))[0]


def remove_corner(patch: Patch, x: int, c: int) -> Patch:
    """Cut a flat copy of P_{c-1} off at the degree-4 corner ``x``.

    Lattice coordinates are developed from the corner triangle across
    triangle adjacency; the region must be a genuine piece of the lattice.
    """
    if c < 2:
        raise ParameterDomainError("corner size c must be at least 2")
    a, b = _corner_frame(patch, x)
    coord = {x: (0, 0), a: (1, 0), b: (0, 1)}
    limit = c - 1
    region: set[frozenset[int]] = set()
    queue = [(x, a, b)]
    seen = {frozenset((x, a, b))}
    while queue:
        t = queue.pop()
        region.add(frozenset(t))
        for i in range(3):
            p, q, r = t[i], t[(i + 1) % 3], t[(i + 2) % 3]
            s = patch.third.get((q, p))
            if s is None:
                continue
            P, Q, R = coord[p], coord[q], coord[r]
            S = (P[0] + Q[0] - R[0], P[1] + Q[1] - R[1])
            if S[0] < 0 or S[1] < 0 or S[0] + S[1] > limit:
                continue
            if s in coord and coord[s] != S:
                raise PlacementUnsatisfied(f"corner region at {x} of size {c} is not flat")
            coord[s] = S
            f = frozenset((q, p, s))
            if f not in seen:
                seen.add(f)
                queue.append((q, p, s))
    if len(region) != limit * limit or len(coord) != (limit + 1) * (limit + 2) // 2:
        raise PlacementUnsatisfied(f"corner region at {x} of size {c} does not fit")
    if len(set(coord.values())) != len(coord):
        raise PlacementUnsatisfied(f"corner region at {x} overlaps itself")
    keep = [t for t in patch.triangles if frozenset(t) not in region]
    gone = {v for v, (i, j) in coord.items() if i + j < limit}
    if any(v in t for t in keep for v in gone):
        raise PlacementUnsatisfied(f"corner region at {x} of size {c} is not separated")
    try:
        return Patch.from_triangles(keep)
    except ValidationError as exc:
        raise PlacementUnsatisfied(f"removing the corner at {x}: {exc}") from exc


def boundary_corners(patch: Patch) -> list[tuple[int, int]]:
    """Boundary points of degree below 6 with their degrees, in boundary order."""
    return [(v, patch.deg(v)) for v in patch.boundary if patch.deg(v) < 6]


def boundary_segments(patch: Patch) -> list[tuple[int, int, int]]:
    """Cyclic list of ``(corner, degree, edges to the next corner)``."""
    bd = patch.boundary
    idx = [i for i, v in enumerate(bd) if patch.deg(v) < 6]
    out = []
    for n, i in enumerate(idx):
        j = idx[(n + 1) % len(idx)]
        length = (j - i) % len(bd) or len(bd)
        out.append((bd[i], patch.deg(bd[i]), length))
    return out


# ---------------------------------------------------------------------------
# generic enlargement
# ---------------------------------------------------------------------------

def generic_enlarge(patch: Patch, use_b4: int = 0, use_b5: int = 0,
                    points: Sequence[int] | None = None) -> Patch:
    """Add a belt, pushing chosen boundary points of degree 4 and 5 outward.

    Each pushed point of degree 4 leaves a new boundary corner of degree 4
    and adds 3 to b; each pushed point of degree 5 leaves a new boundary
    point of degree 5 and adds 1 to b.  Points are taken in boundary order
    unless given explicitly.
    """
    bd = patch.boundary
    if points is None:
        fours = [v for v in bd if patch.deg(v) == 4]
        fives = [v for v in bd if patch.deg(v) == 5]
        if len(fours) < use_b4 or len(fives) < use_b5:
            raise InsufficientBoundaryPoints(
                f"need {use_b4} points of degree 4 and {use_b5} of degree 5 on the boundary, "
                f"have {len(fours)} and {len(fives)}")
        points = fours[:use_b4] + fives[:use_b5]
    push = {}
    for v in points:
        d = patch.deg(v)
        if v not in patch.boundary_set or d not in (4, 5):
            raise InsufficientBoundaryPoints(f"{v} is not a boundary point of degree 4 or 5")
        push[bd.index(v)] = d
    tris, outer = _belt_triangles(bd, _next_id(patch), push)
    return Patch.from_triangles(list(patch.triangles) + tris, outer)


# ---------------------------------------------------------------------------
# type (0,3,0)
# ---------------------------------------------------------------------------

# the [0,0,1] patch with boundary 6
BASE_001 = "123 145 125 256 236 367"


def _base_001() -> Patch:
    from .core import parse_face_list

    p = parse_face_list(BASE_001)
    assert isinstance(p, Patch)
    return p


def build_030(h: int, k: int = 0, l: int = 0) -> Patch:
    """A (0,3,0) patch with boundary 3h.

    ``k = l = 0`` gives P_h; ``l = 0 < k < h`` gives [0,0,k] with two
    boundary corners; ``0 < l <= k < h`` gives [0,l,k] with one.

    [0,0,j] is grown from P_{h-2j} by j enlargements that push two corners
    (the third corner sinks inward by one step each time); [0,0,k] and
    [0,0,h-k] share boundary lengths and count, so j = min(k, h-k).  When
    h = 2j the seed is the six-triangle [0,0,1] patch.  [0,l,k] is grown
    from [0,0,k-l] with boundary 3(h-l) (or P_{h-l} when k = l) by l
    enlargements that push one corner.
    """
    if h < 1:
        raise ParameterDomainError("h >= 1")
    if k == 0 and l == 0:
        return tessellation(h)
    if l == 0:
        if not 0 < k < h:
            raise ParameterDomainError("[0,0,k] needs 0 < k < h")
        j = min(k, h - k)
        if h - 2 * j >= 1:
            p = tessellation(h - 2 * j)
            steps = j
        else:
            p = _base_001()
            steps = j - 1
        for _ in range(steps):
            p = generic_enlarge(p, use_b4=2)
        return p.compact()
    if not 0 < l <= k < h:
        raise ParameterDomainError("[0,l,k] needs 0 < l <= k < h")
    p = build_030(h - l, k - l, 0)
    for _ in range(l):
        p = generic_enlarge(p, use_b4=1)
    return p.compact()


def build_200(k: int, r: int) -> AnyPatch:
    """(2,0,0) patch: a path of k edges wrapped in r belts.

    With r = 0 the result is the degenerate path itself.
    """
    if k < 2 or r < 0:
        raise ParameterDomainError("build_200 needs k >= 2 and r >= 0")
    core = PathPatch(tuple(range(1, k + 2)))
    if r == 0:
        return core
    p = add_belt(core, r)
    assert isinstance(p, Patch)
    return p.compact()


# ---------------------------------------------------------------------------
# truncated patches
# ---------------------------------------------------------------------------

def _corner_ids(p: Patch) -> list[int]:
    return [v for v in p.boundary if p.deg(v) == 4]


def truncate_type(kind: int, *params: int) -> Patch:
    """Truncated patch of the given kind.

    1. ``(h, c)``: P_h minus one corner P_{c-1}.
    2. ``(h, k, c)``: [0,0,k] minus one corner.
    3. ``(h, k, l, c)``: [0,l,k] minus its corner.
    4. ``(h, c1, c2)``: P_h minus two corners.
    5. ``(h, k, c1, c2)``: [0,0,k] minus both corners.
    6. ``(h, c1, c2, c3)``: P_h minus all three corners.
    7. ``(u, v)``: parallelogram.

    Corners are taken in boundary order from the first boundary point.
    """
    try:
        if kind == 1:
            h, c = params
            if not 2 <= c <= h:
                raise ParameterDomainError("type 1 needs 2 <= c <= h")
            base, cs = tessellation(h), [c]
        elif kind == 2:
            h, k, c = params
            base, cs = build_030(h, k, 0), [c]
        elif kind == 3:
            h, k, l, c = params
            base, cs = build_030(h, k, l), [c]
        elif kind == 4:
            h, c1, c2 = params
            if min(c1, c2) < 2 or (c1 - 1) + (c2 - 1) >= h:
                raise ParameterDomainError("type 4 needs c1, c2 >= 2 and (c1-1)+(c2-1) < h")
            base, cs = tessellation(h), [c1, c2]
        elif kind == 5:
            h, k, c1, c2 = params
            if min(c1, c2) < 2 or (c1 - 1) + (c2 - 1) >= h:
                raise ParameterDomainError("type 5 needs c1, c2 >= 2 and (c1-1)+(c2-1) < h")
            base, cs = build_030(h, k, 0), [c1, c2]
        elif kind == 6:
            h, c1, c2, c3 = params
            if min(c1, c2, c3) < 2 or max(c1 + c2, c1 + c3, c2 + c3) - 2 >= h:
                raise ParameterDomainError("type 6 needs c_i >= 2 and c_i + c_j - 2 < h")
            base, cs = tessellation(h), [c1, c2, c3]
        elif kind == 7:
            u, v = params
            return parallelogram(u, v)
        else:
            raise ParameterDomainError("kind must be 1..7")
    except ValueError as exc:
        raise ParameterDomainError(f"wrong number of parameters for type {kind}") from exc
    corners = _corner_ids(base)
    if len(corners) < len(cs):
        raise PlacementUnsatisfied("not enough boundary corners")
    p = base
    for x, c in zip(corners, cs):
        p = remove_corner(p, x, c)
    return p.compact()


# ---------------------------------------------------------------------------
# strips along straight paths
# ---------------------------------------------------------------------------

def _left_fan(t, v: int, before: int | None, after: int | None) -> list[frozenset[int]]:
    """Triangles at ``v`` to the left of a path arriving from ``before`` and leaving to ``after``."""
    rot = list(t.rotation(v))
    closed = len(t.faces_at(v)) == len(rot)
    n = len(rot)
    if after is None:
        i = 0
    else:
        i = rot.index(after)
    if before is None:
        j = n - 1
    else:
        j = rot.index(before)
    out = []
    cur = i
    while cur != j:
        nxt = (cur + 1) % n if closed else cur + 1
        out.append(frozenset((v, rot[cur], rot[nxt])))
        cur = nxt
    return out


def _straight_step(t, prev: int, cur: int) -> int | None:
    """Neighbour of ``cur`` leaving three triangles on the left after arriving from ``prev``."""
    rot = t.rotation(cur)
    if len(t.faces_at(cur)) != len(rot):
        return None
    i = rot.index(prev)
    return rot[(i - 3) % len(rot)]


def _is_boundary_edge(p: Patch, u: int, v: int) -> bool:
    return (u, v) in p.third and (v, u) not in p.third or (v, u) in p.third and (u, v) not in p.third


def straight_paths(patch: Patch, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Boundary-to-boundary paths whose inner points have three triangles on the left."""
    limit = max_len or patch.f1
    out = []
    for v0 in patch.boundary:
        for v1 in patch.rotation(v0):
            path = [v0, v1]
            ok = True
            while path[-1] not in patch.boundary_set:
                if len(path) > limit:
                    ok = False
                    break
                nxt = _straight_step(patch, path[-2], path[-1])
                if nxt is None or nxt in path:
                    ok = False
                    break
                path.append(nxt)
            if not ok or path[0] == path[-1]:
                continue
            if len(path) == 2 and _is_boundary_edge(patch, v0, v1):
                continue
            out.append(tuple(path))
    return out


def insert_strip(patch: Patch, path: Sequence[int]) -> Patch:
    """Cut along a boundary-to-boundary path and insert a strip of triangles.

    The copies of the path on its left side become points of degree 6 and
    the right side keeps its degrees, so N grows by the number of path
    points and b grows by 2.
    """
    path = list(path)
    L = len(path) - 1
    if L < 1 or path[0] not in patch.boundary_set or path[-1] not in patch.boundary_set:
        raise PlacementUnsatisfied("strip path must join two boundary points")
    if any(v in patch.boundary_set for v in path[1:-1]):
        raise PlacementUnsatisfied("strip path must run through the interior")
    nid = _next_id(patch)
    copy = {v: nid + i for i, v in enumerate(path)}
    left: dict[frozenset[int], dict[int, int]] = {}
    for i, v in enumerate(path):
        before = path[i - 1] if i > 0 else None
        after = path[i + 1] if i < L else None
        for f in _left_fan(patch, v, before, after):
            left.setdefault(f, {})[v] = copy[v]
    base = []
    for t in patch.triangles:
        sub = left.get(frozenset(t))
        base.append(tuple(sub.get(v, v) for v in t) if sub else t)
    a = [copy[v] for v in path]
    b = path
    want = sorted(list(patch.degrees.values()) + [6] * (L + 1))
    for variant in (0, 1):
        strip = []
        for i in range(L):
            if variant == 0:
                strip += [(a[i], a[i + 1], b[i]), (a[i + 1], b[i + 1], b[i])]
            else:
                strip += [(a[i], a[i + 1], b[i + 1]), (a[i], b[i + 1], b[i])]
        try:
            q = Patch.from_triangles(base + strip)
        except ValidationError:
            continue
        if sorted(q.degrees.values()) == want:
            return q
    raise PlacementUnsatisfied("path is not straight enough to take a strip")


# ---------------------------------------------------------------------------
# (1,1,1) families
# ---------------------------------------------------------------------------

PLAIN_BASES = {
    "H": "(1,1,1,2)_3",
    "I": "(1,1,1,2)_4",
    "J": "(1,1,1,5)_5",
    "K": "(1,1,1,5)_6",
    "L": "(1,1,1,8)_7",
    "M": "(1,1,1,10)_8",
    "N": "(1,1,1,11)_9",
    "O": "(1,1,1,15)_10",
    "P": "(1,1,1,11)_10",
}
# m = 0 member of each strip family is a member of a plain family
STRIP_BASES = {"B": "J", "C": "L", "D": "H", "E": "O"}


def _grow_strips(p: Patch, m: int, target, label: str) -> Patch:
    """Insert ``m`` strips, each chosen so the signature follows ``target(i)``."""
    for i in range(1, m + 1):
        want = target(i)
        found = None
        for path in straight_paths(p):
            try:
                q = insert_strip(p, path)
            except PlacementUnsatisfied:
                continue
            s = classify(q)
            if (s.a3, s.a4, s.a5, s.a6, s.b) == want:
                found = q
                break
        if found is None:
            raise FamilyWitnessUnavailable(f"{label}: no straight strip gives {want}")
        p = found
    return p


def family_patch(family: str, k: int, m: int = 0) -> Patch:
    """A member of a (1,1,1) family, checked against its signature formula."""
    f = family.upper()
    want = family_signature(f, k, m)
    if f == "A":
        if k != 3:
            raise FamilyWitnessUnavailable("family A is constructed only for k = 3")
        p = catalog.patch("(1,1,1,4)_5")
        p = _grow_strips(p, m, lambda i: family_signature("A", 3, i), "family A")
    elif f in PLAIN_FAMILIES:
        c, kmin = PLAIN_FAMILIES[f]
        base = catalog.patch(PLAIN_BASES[f])
        k0 = base.b
        p = base
        for _ in range(k - k0):
            p = generic_enlarge(p, use_b5=1)
    elif f in STRIP_BASES:
        p = family_patch(STRIP_BASES[f], k, 0)
        p = _grow_strips(p, m, lambda i: family_signature(f, k, i), f"family {f}")
    else:
        raise FamilyWitnessUnavailable(f"family {f}: no seed patch is known")
    s = classify(p)
    got = (s.a3, s.a4, s.a5, s.a6, s.b)
    if got != want:
        raise FamilyWitnessUnavailable(f"family {f} construction gave {got}, expected {want}")
    return p.compact()
