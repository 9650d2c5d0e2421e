"""Transformations of sphere triangulations.

Local rewrites at degree-patterned configurations, face and edge
fullering, glueing two patches along their boundaries, and connected sums.

Every local rewrite is a short program of two primitive moves on oriented
triangles: inserting a point into a face, and splitting an edge by a new
point (the two apexes of the edge each gain one neighbour).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .analysis import classify, is_elliptic
from .core import ClosedTriangulation, Patch, PathPatch, Tri, ekey, rotate_min
from .errors import (
    BoundaryLengthMismatch,
    InvalidTriangleChoice,
    PlacementUnsatisfied,
    StaleSite,
    ValidationError,
)
from .patches import AnyPatch, _left_fan, _straight_step, add_belt

# ---------------------------------------------------------------------------
# configuration table
# ---------------------------------------------------------------------------

WHEEL = ("puv", "pvw", "pwx", "pxy", "pyz", "pzu")


@dataclass(frozen=True)
class Pattern:
    """One degree pattern with its move list.

    ``ops`` entries are ``("face", a, b, c, new)`` or ``("split", a, b, new)``;
    role names may refer to points created by earlier ops.
    """

    roles: str
    triangles: tuple[str, ...]
    degrees: dict[str, int]
    ops: tuple[tuple[str, ...], ...]
    delta: tuple[int, int, int, int]
    successor: tuple[str, int] | None = None


def _deg(spec: str) -> dict[str, int]:
    # "u4 x4 v5" -> {"u": 4, "x": 4, "v": 5}
    return {tok[0]: int(tok[1:]) for tok in spec.split()}


KINDS: dict[str, tuple[Pattern, ...]] = {
    "M1": (Pattern("xyz", ("xyz",), _deg("x5 y5 z5"),
                   (("face", "x", "y", "z", "P"),), (1, 0, -3, 3)),),
    "M2": (Pattern("xyz", ("xyz",), _deg("x5 y4 z5"),
                   (("face", "x", "y", "z", "P"),), (1, -1, -1, 2)),),
    "P1": (Pattern("pxqy", ("pxy", "qxy"), _deg("p4 q5 x6 y6"),
                   (("split", "x", "y", "z"),), (0, 0, 0, 1)),),
    "P2": (Pattern("uvwpxyz", WHEEL, _deg("p6 v6 u5 y5 w4 x4 z4"),
                   (("split", "p", "v", "q"),), (0, 0, 0, 1)),),
    "A": (Pattern("xyz", ("xyz",), _deg("x3 y4 z5"),
                  (("face", "x", "y", "z", "p"),), (0, 0, 0, 1), ("A", 0)),),
    # y and z keep their degrees; see the module notes on B1 hosts
    "B1": (Pattern("vwxyz", ("vxy", "vxz", "wxy", "wxz"), _deg("v4 w4 x4"),
                   (("split", "x", "y", "p"), ("split", "x", "z", "q")),
                   (0, 0, 0, 2), ("B1", 0)),),
    "B2": (Pattern("vwxy", ("vwx", "vwy"), _deg("v4 w4 x5 y5"),
                   (("split", "v", "w", "q"), ("split", "q", "y", "p")),
                   (0, 0, 0, 2), ("B2", 0)),),
    "C": (Pattern("vwxyz", ("vwx", "wxy", "xyz"), _deg("w4 v5 x5 y5 z5"),
                  (("split", "x", "y", "p"),), (0, 0, 0, 1), ("C", 0)),),
    "D": (Pattern("puvwxyz", WHEEL, _deg("p6 v6 u4 w5 x5 y5 z5"),
                  (("split", "p", "v", "q"),), (0, 0, 0, 1), ("D", 0)),),
    "E1": (Pattern("puvwxyz", WHEEL, _deg("u4 x4 v5 y5 p6 w6 z6"),
                   (("split", "p", "w", "q"),), (0, 0, 0, 1), ("E2", 0)),),
    "E2": (Pattern("puvwxyz", WHEEL, _deg("u4 w4 v6 z6 x5 y5 p6"),
                   (("split", "p", "z", "q"),), (0, 0, 0, 1), ("E1", 0)),),
    "E3": (
        Pattern("puvwxyz", WHEEL, _deg("u4 x4 v5 z5 w6 y6 p6"),
                (("split", "p", "w", "q"),), (0, 0, 0, 1), ("E3", 1)),
        Pattern("puvwxyz", WHEEL, _deg("u4 w4 v6 y6 p6 x5 z5"),
                (("split", "p", "v", "q"),), (0, -1, 2, 0), ("E3", 2)),
        Pattern("puvwxyz", WHEEL, _deg("v4 u5 x5 w5 z5 p6 y6"),
                (("split", "p", "y", "q"),), (0, 1, -2, 2), ("E3", 0)),
    ),
    # v, x and z keep their degrees and are left free, as for y, z in B1
    "G": (Pattern("puvwxyz", WHEEL, _deg("p6 u4 w4 y4"),
                  (("split", "p", "v", "q"), ("split", "p", "x", "s"), ("split", "p", "z", "r")),
                  (0, 0, 0, 3), ("G", 0)),),
}
SELF_REPRODUCTIVE = ("A", "B1", "B2", "C", "D", "E1", "E2", "E3", "G")


@dataclass(frozen=True)
class RewriteSite:
    kind: str
    vertices: tuple[int, ...]
    stage: int = 0

    @property
    def pattern(self) -> Pattern:
        return KINDS[self.kind][self.stage]

    @property
    def roles(self) -> dict[str, int]:
        return dict(zip(self.pattern.roles, self.vertices))

    @property
    def required_degrees(self) -> dict[int, int]:
        r = self.roles
        return {r[k]: d for k, d in self.pattern.degrees.items()}

    def as_dict(self) -> dict:
        return {"kind": self.kind, "stage": self.stage, "vertices": list(self.vertices),
                "roles": self.roles}


def _match(t: ClosedTriangulation, pat: Pattern) -> Iterable[dict[str, int]]:
    """All role assignments realizing the pattern's triangles and degrees."""
    roles = pat.roles
    tris = [tuple(s) for s in pat.triangles]
    adj: dict[str, set[str]] = {r: set() for r in roles}
    for a, b, c in tris:
        adj[a] |= {b, c}
        adj[b] |= {a, c}
        adj[c] |= {a, b}
    # order roles so every role after the first touches an earlier one
    order = [max(roles, key=lambda r: (r in pat.degrees, len(adj[r])))]
    while len(order) < len(roles):
        order.append(max((r for r in roles if r not in order),
                         key=lambda r: (len(adj[r] & set(order)), r in pat.degrees)))
    degs = t.degrees

    def ok_tris(asg: dict[str, int]) -> bool:
        for a, b, c in tris:
            if a in asg and b in asg and c in asg and not t.has_triangle(asg[a], asg[b], asg[c]):
                return False
        return True

    def rec(i: int, asg: dict[str, int], used: set[int]):
        if i == len(order):
            yield dict(asg)
            return
        r = order[i]
        anchors = [asg[s] for s in adj[r] if s in asg]
        cands = t.neighbors(anchors[0]) if anchors else t.vertices
        want = pat.degrees.get(r)
        for v in sorted(cands):
            if v in used or (want is not None and degs[v] != want):
                continue
            if any(not t.has_edge(v, a) for a in anchors):
                continue
            asg[r] = v
            used.add(v)
            if ok_tris(asg):
                yield from rec(i + 1, asg, used)
            used.discard(v)
            del asg[r]

    yield from rec(0, {}, set())


def _effect_key(pat: Pattern, asg: dict[str, int]) -> frozenset:
    def name(r: str):
        return asg.get(r, "new:" + r)

    keys = []
    for op in pat.ops:
        if op[0] == "face":
            keys.append(("face", frozenset(name(r) for r in op[1:4])))
        else:
            keys.append(("split", frozenset((name(op[1]), name(op[2])))))
    return frozenset(keys)


def find_sites(t: ClosedTriangulation, kind: str, near: Iterable[int] | None = None) -> list[RewriteSite]:
    """Sites of a configuration kind, one per point set and effect.

    ``near`` restricts the search to sites containing one of the given points.
    """
    if kind not in KINDS:
        raise KeyError(f"unknown rewrite kind {kind!r}")
    near_set = set(near) if near is not None else None
    out: list[RewriteSite] = []
    seen: set = set()
    for stage, pat in enumerate(KINDS[kind]):
        for asg in _match(t, pat):
            if near_set is not None and not near_set & set(asg.values()):
                continue
            key = (stage, frozenset(asg.values()), _effect_key(pat, asg))
            if key in seen:
                continue
            seen.add(key)
            out.append(RewriteSite(kind, tuple(asg[r] for r in pat.roles), stage))
    out.sort(key=lambda s: (s.stage, sorted(s.vertices), s.vertices))
    return out


# ---------------------------------------------------------------------------
# primitive moves on oriented triangle lists
# ---------------------------------------------------------------------------

def _oriented(tris: Iterable[Tri], a: int, b: int) -> Tri:
    for t in tris:
        for i in range(3):
            if t[i] == a and t[(i + 1) % 3] == b:
                return t
    raise StaleSite(f"no triangle on directed edge {a}{b}")


def split_edge(tris: set[Tri], a: int, b: int, q: int) -> None:
    """Put ``q`` on the edge ``ab``; the two apexes each gain one neighbour."""
    t1 = _oriented(tris, a, b)
    t2 = _oriented(tris, b, a)
    c = next(v for v in t1 if v not in (a, b))
    d = next(v for v in t2 if v not in (a, b))
    tris -= {t1, t2}
    tris |= {rotate_min(x) for x in ((a, q, c), (q, b, c), (b, q, d), (q, a, d))}


def insert_in_face(tris: set[Tri], a: int, b: int, c: int, q: int) -> None:
    t = next((x for x in tris if set(x) == {a, b, c}), None)
    if t is None:
        raise StaleSite(f"no triangle {a}{b}{c}")
    x, y, z = t
    tris.discard(t)
    tris |= {rotate_min(s) for s in ((x, y, q), (y, z, q), (z, x, q))}


@dataclass(frozen=True)
class RewriteResult:
    triangulation: ClosedTriangulation
    site: RewriteSite
    new_points: dict[str, int]
    delta: tuple[int, int, int, int]


def apply_rewrite_ex(t: ClosedTriangulation, site: RewriteSite) -> RewriteResult:
    pat = site.pattern
    asg = site.roles
    if len(site.vertices) != len(pat.roles) or not any(a == asg for a in _match_fixed(t, pat, asg)):
        raise StaleSite(f"{site.kind} site {site.vertices} does not match this triangulation")
    tris = set(t.triangles)
    nxt = max(t.vertices) + 1
    names = dict(asg)
    new: dict[str, int] = {}
    for op in pat.ops:
        q = nxt
        nxt += 1
        if op[0] == "face":
            insert_in_face(tris, names[op[1]], names[op[2]], names[op[3]], q)
            names[op[4]] = new[op[4]] = q
        else:
            split_edge(tris, names[op[1]], names[op[2]], q)
            names[op[3]] = new[op[3]] = q
    out = ClosedTriangulation(tuple(sorted(tris)))
    before = classify(t).tuple
    after = classify(out).tuple
    delta = tuple(x - y for x, y in zip(after, before))
    assert delta == pat.delta, (site, delta, pat.delta)
    return RewriteResult(out, site, new, delta)  # type: ignore[arg-type]


def _match_fixed(t: ClosedTriangulation, pat: Pattern, asg: dict[str, int]) -> Iterable[dict[str, int]]:
    # verify a full assignment without searching
    if set(asg) != set(pat.roles) or len(set(asg.values())) != len(asg):
        return []
    if any(v not in t.vertex_set for v in asg.values()):
        return []
    if any(t.deg(asg[r]) != d for r, d in pat.degrees.items()):
        return []
    if any(not t.has_triangle(asg[a], asg[b], asg[c]) for a, b, c in pat.triangles):
        return []
    return [asg]


def apply_rewrite(t: ClosedTriangulation, site: RewriteSite) -> ClosedTriangulation:
    """Apply a site's move; the parameter change equals the kind's delta."""
    return apply_rewrite_ex(t, site).triangulation


def successor_sites(res: RewriteResult) -> list[RewriteSite]:
    """Sites of the successor configuration that involve the new points."""
    nxt = res.site.pattern.successor
    if nxt is None:
        return []
    kind, stage = nxt
    return [s for s in find_sites(res.triangulation, kind, near=res.new_points.values())
            if s.stage == stage]


def iterate_rewrite(t: ClosedTriangulation, kind: str, times: int,
                    site: RewriteSite | None = None) -> list[ClosedTriangulation]:
    """Apply a self-reproductive kind repeatedly, following its successor chain."""
    out = []
    cur = site or (find_sites(t, kind) or [None])[0]
    for _ in range(times):
        if cur is None:
            raise StaleSite(f"no {kind} site left after {len(out)} steps")
        res = apply_rewrite_ex(t, cur)
        t = res.triangulation
        out.append(t)
        nxt = successor_sites(res)
        cur = nxt[0] if nxt else None
    return out


# ---------------------------------------------------------------------------
# fullering
# ---------------------------------------------------------------------------

def face_fullering(t: ClosedTriangulation) -> ClosedTriangulation:
    """Leapfrog: one new point per triangle, joined across every old edge."""
    base = max(t.vertices) + 1
    fid = {frozenset(f): base + i for i, f in enumerate(t.triangles)}
    tris = []
    for a, b in t.edges:
        c = t.third[(a, b)]
        d = t.third[(b, a)]
        s = fid[frozenset((a, b, c))]
        r = fid[frozenset((b, a, d))]
        tris += [(a, r, s), (b, s, r)]
    out = ClosedTriangulation.from_triangles(tris)
    assert (out.f1, out.f2, out.f3) == (t.f1 + t.f3, 3 * t.f2, 3 * t.f3)
    return out


def _edge_subdivide(tris: Sequence[Tri], edges: Sequence[tuple[int, int]], base: int):
    mid = {e: base + i for i, e in enumerate(edges)}
    out = []
    for a, b, c in tris:
        ab, bc, ca = mid[ekey(a, b)], mid[ekey(b, c)], mid[ekey(c, a)]
        out += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
    return out, mid


def edge_fullering(obj: ClosedTriangulation | Patch) -> ClosedTriangulation | Patch:
    """Split every edge at a new point and every triangle into four."""
    base = max(obj.vertices) + 1
    tris, mid = _edge_subdivide(obj.triangles, obj.edges, base)
    if isinstance(obj, ClosedTriangulation):
        out = ClosedTriangulation.from_triangles(tris)
        assert (out.f1, out.f2, out.f3) == (obj.f1 + obj.f2, 4 * obj.f2, 4 * obj.f3)
        return out
    bd = []
    for i, v in enumerate(obj.boundary):
        bd += [v, mid[ekey(v, obj.boundary[(i + 1) % obj.b])]]
    p = Patch.from_triangles(tris, bd)
    assert (p.f1, p.f2, p.f3, p.b) == (obj.f1 + obj.f2, 2 * obj.f2 + 3 * obj.f3, 4 * obj.f3, 2 * obj.b)
    return p


# ---------------------------------------------------------------------------
# glueing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GlueResult:
    triangulation: ClosedTriangulation
    alignment: tuple[int, bool]
    elliptic: bool
    diagnostic: str | None = None
    inserted: int | None = None

    def as_dict(self) -> dict:
        return {"alignment": list(self.alignment), "elliptic": self.elliptic,
                "diagnostic": self.diagnostic}


def _shift(p: AnyPatch, offset: int) -> AnyPatch:
    if isinstance(p, PathPatch):
        return PathPatch(tuple(v + offset for v in p.path))
    return p.relabel({v: v + offset for v in p.vertices})


def _strip(outer: Sequence[int], inner: Sequence[int], offset: int, reflect: bool) -> list[Tri]:
    """Triangles joining two boundary cycles of equal length.

    ``outer`` is traversed forward and paired with ``inner`` read backwards
    from ``offset`` (forwards when ``reflect``), which keeps both pieces on
    consistent sides of the strip.
    """
    b = len(outer)
    step = 1 if reflect else -1
    n = [inner[(offset + step * i) % b] for i in range(b)]
    out = []
    for i in range(b):
        j = (i + 1) % b
        out += [(outer[i], outer[j], n[i]), (outer[j], n[j], n[i])]
    return out


def alignments(b: int) -> list[tuple[int, bool]]:
    return [(k, r) for r in (False, True) for k in range(b)]


def glue_strip(p1: AnyPatch, p2: AnyPatch, m: int = 0,
               alignment: tuple[int, bool] | None = None) -> GlueResult:
    """Close two patches of equal boundary length with ``m`` belts and a strip.

    The strip itself adds no points and keeps every degree, so the result
    has the summed type and ``N1 + N2 + b*m``.  Degenerate path patches are
    accepted; their boundary walk visits inner points twice.
    """
    if p1.b != p2.b:
        raise BoundaryLengthMismatch(f"boundary lengths {p1.b} and {p2.b} differ")
    q1 = add_belt(p1, m) if m else p1
    q2 = _shift(p2, max(q1.vertices))
    tried = [alignment] if alignment is not None else alignments(q1.b)
    last: GlueResult | None = None
    for al in tried:
        tris = list(q1.triangles) + list(q2.triangles) + _strip(q1.boundary, q2.boundary, *al)
        try:
            t = ClosedTriangulation.from_triangles(tris)
        except ValidationError as exc:
            last = GlueResult(None, al, False, f"{exc.name}: {exc}")  # type: ignore[arg-type]
            continue
        if is_elliptic(t):
            return GlueResult(t, al, True)
        bad = sorted(v for v, d in t.degrees.items() if d > 6)
        last = GlueResult(t, al, False, f"NotElliptic: degree above 6 at {bad}")
    assert last is not None
    return last


def _five_on_boundary(p: Patch) -> list[int]:
    return [v for v in p.boundary if p.deg(v) == 5]


def _five_near_boundary(p: Patch) -> list[int]:
    """Interior degree-5 points opposite a boundary edge."""
    out = []
    bd = p.boundary
    for i, u in enumerate(bd):
        x = p.third.get((u, bd[(i + 1) % len(bd)]))
        if x is not None and x not in p.boundary_set and p.deg(x) == 5 and x not in out:
            out.append(x)
    return out


def _opposite_edge(t: ClosedTriangulation, x: int, y: int) -> tuple[int, int] | None:
    """An edge whose two apexes are ``x`` and ``y``; smallest first."""
    best = None
    for a in sorted(t.neighbors(x)):
        b = t.third.get((x, a))
        if b is None:
            continue
        # triangle (x, a, b); the apex across (a, b) on the other side
        if t.third.get((b, a)) == y and not t.has_edge(x, y):
            e = ekey(a, b)
            if best is None or e < best:
                best = e
    return best


def glue_method(p1: Patch, p2: Patch, method: str,
                alignment: tuple[int, bool] | None = None) -> GlueResult:
    """Glue two (1,1,1) patches and insert a degree-4 point between their fives.

    A: one belt between the patches, fives on both boundaries.
    B: no belt, fives on both boundaries.
    C: no belt, one five opposite a boundary edge of its patch and the
       other on the boundary.  Both orders of the inputs are tried.
    """
    method = method.upper()
    if method not in ("A", "B", "C"):
        raise ValueError("method must be A, B or C")
    if p1.b != p2.b:
        raise BoundaryLengthMismatch(f"boundary lengths {p1.b} and {p2.b} differ")
    for p in (p1, p2):
        s = classify(p)
        if s.type != (1, 1, 1):
            raise PlacementUnsatisfied(f"method {method} needs type (1,1,1) patches, got {s.type}")
    m = 1 if method == "A" else 0
    orders = [(p1, p2, False), (p2, p1, True)] if method == "C" else [(p1, p2, False)]
    for a, b, _swapped in orders:
        xs = _five_near_boundary(a) if method == "C" else _five_on_boundary(a)
        ys = _five_on_boundary(b)
        if not xs or not ys:
            continue
        qa = add_belt(a, m) if m else a
        off = max(qa.vertices)
        qb = _shift(b, off)
        tried = [alignment] if alignment is not None else alignments(qa.b)
        for al in tried:
            tris = list(qa.triangles) + list(qb.triangles) + _strip(qa.boundary, qb.boundary, *al)
            try:
                t = ClosedTriangulation.from_triangles(tris)
            except ValidationError:
                continue
            for x in xs:
                for y in ys:
                    e = _opposite_edge(t, x, y + off)
                    if e is None:
                        continue
                    work = set(t.triangles)
                    q = max(t.vertices) + 1
                    split_edge(work, e[0], e[1], q)
                    out = ClosedTriangulation(tuple(sorted(work)))
                    if is_elliptic(out) and classify(out).type == (2, 3, 0):
                        return GlueResult(out, al, True, inserted=q)
    raise PlacementUnsatisfied(f"method {method}: no alignment puts the two fives across an edge")


# ---------------------------------------------------------------------------
# connected sum and closed belts
# ---------------------------------------------------------------------------

def connected_sum(t1: ClosedTriangulation, tri1: Sequence[int],
                  t2: ClosedTriangulation, tri2: Sequence[int]) -> ClosedTriangulation:
    """Remove a triangle from each sphere and identify ``tri1[i]`` with ``tri2[i]``."""
    if len(set(tri1)) != 3 or not t1.has_triangle(*tri1):
        raise InvalidTriangleChoice(f"{tuple(tri1)} is not a triangle of the first triangulation")
    if len(set(tri2)) != 3 or not t2.has_triangle(*tri2):
        raise InvalidTriangleChoice(f"{tuple(tri2)} is not a triangle of the second triangulation")
    off = max(t1.vertices)
    mp = {v: v + off for v in t2.vertices}
    for a, b in zip(tri1, tri2):
        mp[b] = a
    keep1 = [t for t in t1.triangles if set(t) != set(tri1)]
    keep2 = [tuple(mp[v] for v in t) for t in t2.triangles if set(t) != set(tri2)]
    try:
        out = ClosedTriangulation.from_triangles(keep1 + keep2)
    except ValidationError as exc:
        raise InvalidTriangleChoice(f"sum is not a triangulation: {exc}") from exc
    for a, b in zip(tri1, tri2):
        assert out.deg(a) == t1.deg(a) + t2.deg(b) - 2
    return out.compact()


def triangles_with_degrees(t: ClosedTriangulation, degs: Sequence[int]) -> list[Tri]:
    want = sorted(degs)
    return [f for f in t.triangles if sorted(t.deg(v) for v in f) == want]


def straight_loops(t: ClosedTriangulation, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Closed loops with three triangles on the left at every point."""
    limit = max_len or t.f1
    out: list[tuple[int, ...]] = []
    seen: set = set()
    for v0 in t.vertices:
        for v1 in t.rotation(v0):
            loop = [v0, v1]
            while len(loop) <= limit + 1:
                nxt = _straight_step(t, loop[-2], loop[-1])
                if nxt is None:
                    break
                if nxt == v0:
                    # closing step must also leave three triangles on the left at v0
                    if _straight_step(t, loop[-1], v0) == v1:
                        key = frozenset(zip(loop, loop[1:] + loop[:1]))
                        if key not in seen:
                            seen.add(key)
                            out.append(tuple(loop))
                    break
                if nxt in loop:
                    break
                loop.append(nxt)
    return out


def insert_belt(t: ClosedTriangulation, loop: Sequence[int], m: int = 1) -> ClosedTriangulation:
    """Cut along a straight loop and insert ``m`` rings of 2b triangles."""
    loop = list(loop)
    b = len(loop)
    for _ in range(m):
        nid = max(t.vertices) + 1
        copy = {v: nid + i for i, v in enumerate(loop)}
        left: dict[frozenset[int], dict[int, int]] = {}
        for i, v in enumerate(loop):
            for f in _left_fan(t, v, loop[i - 1], loop[(i + 1) % b]):
                left.setdefault(f, {})[v] = copy[v]
        base = []
        for tri in t.triangles:
            sub = left.get(frozenset(tri))
            base.append(tuple(sub.get(v, v) for v in tri) if sub else tri)
        a = [copy[v] for v in loop]
        want = sorted(list(t.degrees.values()) + [6] * b)
        done = None
        for variant in (0, 1):
            strip = []
            for i in range(b):
                j = (i + 1) % b
                if variant == 0:
                    strip += [(a[i], a[j], loop[i]), (a[j], loop[j], loop[i])]
                else:
                    strip += [(a[i], a[j], loop[j]), (a[i], loop[j], loop[i])]
            try:
                q = ClosedTriangulation.from_triangles(base + strip)
            except ValidationError:
                continue
            if sorted(q.degrees.values()) == want:
                done = q
                break
        if done is None:
            raise PlacementUnsatisfied("loop is not straight enough to take a belt")
        t = done
        loop = a
    return t


def remove_degree3(t: ClosedTriangulation, v: int) -> ClosedTriangulation:
    """Delete a point of degree 3 and close its link with one triangle."""
    if t.deg(v) != 3:
        raise PlacementUnsatisfied(f"vertex {v} has degree {t.deg(v)}, not 3")
    a, b, c = t.rotation(v)
    tris = [x for x in t.triangles if v not in x] + [(a, b, c)]
    return ClosedTriangulation.from_triangles(tris)


def delta(before, after) -> tuple[int, int, int, int]:
    s, u = classify(before).tuple, classify(after).tuple
    return tuple(y - x for x, y in zip(s, u))  # type: ignore[return-value]
