"""Triangulations of the sphere and of the disc.

Both kinds are stored as a tuple of oriented triangles.  The orientation is
fixed once at construction time by propagation from a seed triangle, so that
every interior edge is traversed in opposite directions by its two triangles.
For a patch the boundary cycle runs with the interior on its left, i.e. each
boundary edge ``(u, v)`` appears in its unique triangle as ``(u, v, w)``.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    BoundaryNotSingleCycle,
    BrokenLink,
    Disconnected,
    EulerMismatch,
    KindMismatch,
    MalformedToken,
    NonManifoldEdge,
    NotOrientable,
    ValidationError,
)

Tri = tuple[int, int, int]
Edge = tuple[int, int]

ALPHABET = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_VALUE = {ch: i + 1 for i, ch in enumerate(ALPHABET)}


def label_char(v: int) -> str:
    return ALPHABET[v - 1]


def ekey(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def rotate_min(t: Sequence[int]) -> Tri:
    """Cyclic rotation of an oriented triangle that starts at its smallest id."""
    a, b, c = t
    if a < b and a < c:
        return (a, b, c)
    if b < c:
        return (b, c, a)
    return (c, a, b)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    simplices: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail,
                 "simplices": [list(s) if isinstance(s, tuple) else s for s in c.simplices]}
                for c in self.checks
            ],
        }


_ERROR_FOR = {
    "NonManifoldEdge": NonManifoldEdge,
    "BrokenLink": BrokenLink,
    "Disconnected": Disconnected,
    "BoundaryNotSingleCycle": BoundaryNotSingleCycle,
    "NotOrientable": NotOrientable,
    "EulerMismatch": EulerMismatch,
}


def _boundary_cycle(bedges: list[Edge]) -> list[int] | None:
    """Vertices of a single simple cycle formed by ``bedges``, else None."""
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in bedges:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(n) != 2 for n in adj.values()):
        return None
    start = min(adj)
    cyc = [start]
    prev, cur = start, adj[start][0]
    while cur != start:
        cyc.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return cyc if len(cyc) == len(adj) else None


def _orient(faces: list[frozenset[int]], seed: Tri) -> dict[frozenset[int], Tri] | None:
    """Propagate the orientation of ``seed`` over all faces; None if impossible."""
    by_edge: dict[Edge, list[frozenset[int]]] = defaultdict(list)
    for f in faces:
        a, b, c = sorted(f)
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(f)
    oriented = {frozenset(seed): seed}
    queue = deque([seed])
    while queue:
        t = queue.popleft()
        for i in range(3):
            a, b = t[i], t[(i + 1) % 3]
            for g in by_edge[ekey(a, b)]:
                if g == frozenset(t):
                    continue
                (c,) = g - {a, b}
                want = rotate_min((b, a, c))
                have = oriented.get(g)
                if have is None:
                    oriented[g] = want
                    queue.append(want)
                elif have != want:
                    return None
    return oriented


def check_faces(
    triangles: Sequence[Sequence[int]],
    boundary: Sequence[int] | None = None,
    closed: bool | None = None,
) -> tuple[ValidationReport, tuple[Tri, ...] | None, tuple[int, ...] | None]:
    """Run every structural check on a raw face list.

    Returns the report plus, when all checks pass, the consistently oriented
    triangles and the boundary cycle (None for a sphere).  ``closed`` forces
    the expected kind; by default a face list with no boundary edges and no
    declared boundary is a sphere.
    """
    checks: list[Check] = []
    tris = [tuple(t) for t in triangles]
    faces = [frozenset(t) for t in tris]

    bad = [t for t, f in zip(tris, faces) if len(t) != 3 or len(f) != 3]
    dup = [t for t, n in Counter(faces).items() if n > 1]
    checks.append(Check("DistinctTriangles", not bad and not dup and bool(tris),
                        "degenerate or repeated triangles" if (bad or dup) else "",
                        tuple(tuple(sorted(t)) for t in bad + dup)))
    if bad or dup or not tris:
        return ValidationReport(tuple(checks)), None, None

    edge_count: Counter[Edge] = Counter()
    for f in faces:
        a, b, c = sorted(f)
        edge_count.update([(a, b), (a, c), (b, c)])
    over = sorted(e for e, n in edge_count.items() if n > 2)
    checks.append(Check("NonManifoldEdge", not over,
                        f"{len(over)} edges in three or more triangles" if over else "", tuple(over)))

    bedges = sorted(e for e, n in edge_count.items() if n == 1)
    bverts = {v for e in bedges for v in e}

    # vertex links: a single cycle for interior points, a single path on the boundary
    link: dict[int, list[Edge]] = defaultdict(list)
    for f in faces:
        for v in f:
            a, b = sorted(f - {v})
            link[v].append((a, b))
    broken = []
    for v, es in link.items():
        deg: Counter[int] = Counter()
        for a, b in es:
            deg.update([a, b])
        comp = _components([e for e in es])
        if len(comp) != 1:
            broken.append(v)
            continue
        ends = [x for x, d in deg.items() if d == 1]
        if any(d > 2 for d in deg.values()):
            broken.append(v)
        elif v in bverts and len(ends) != 2:
            broken.append(v)
        elif v not in bverts and ends:
            broken.append(v)
    checks.append(Check("BrokenLink", not broken,
                        f"vertex fans not a single cycle or path: {sorted(broken)}" if broken else "",
                        tuple(sorted(broken))))

    adj: dict[frozenset[int], list[frozenset[int]]] = defaultdict(list)
    by_edge: dict[Edge, list[frozenset[int]]] = defaultdict(list)
    for f in faces:
        a, b, c = sorted(f)
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(f)
    for fs in by_edge.values():
        for x in fs:
            for y in fs:
                if x != y:
                    adj[x].append(y)
    seen = {faces[0]}
    stack = [faces[0]]
    while stack:
        for g in adj[stack.pop()]:
            if g not in seen:
                seen.add(g)
                stack.append(g)
    checks.append(Check("Disconnected", len(seen) == len(faces),
                        "" if len(seen) == len(faces) else f"{len(faces) - len(seen)} triangles unreachable"))

    want_closed = closed if closed is not None else (not bedges and boundary is None)
    cycle = None
    if want_closed:
        ok = not bedges
        checks.append(Check("BoundaryNotSingleCycle", ok,
                            "" if ok else "closed surface has boundary edges", tuple(bedges)))
    else:
        cycle = _boundary_cycle(bedges) if bedges else None
        ok = cycle is not None and len(cycle) >= 3
        detail = "" if ok else "boundary edges do not form one simple cycle"
        if ok and boundary is not None:
            bl = list(boundary)
            n = len(bl)
            declared = {ekey(bl[i], bl[(i + 1) % n]) for i in range(n)}
            if len(set(bl)) != n or declared != set(bedges):
                ok = False
                detail = "declared boundary differs from the boundary edges"
        checks.append(Check("BoundaryNotSingleCycle", ok, detail, tuple(bedges)))

    if not all(c.passed for c in checks):
        return ValidationReport(tuple(checks)), None, None

    oriented = _orient(faces, rotate_min(tris[0]))
    ok = oriented is not None
    checks.append(Check("NotOrientable", ok, "" if ok else "no consistent orientation"))
    if not ok:
        return ValidationReport(tuple(checks)), None, None

    f1 = len(link)
    f2 = len(edge_count)
    f3 = len(faces)
    chi = f1 - f2 + f3
    target = 2 if want_closed else 1
    ok = chi == target
    checks.append(Check("EulerMismatch", ok, f"chi={chi}, expected {target}"))
    if want_closed:
        ok = 2 * f2 == 3 * f3
        checks.append(Check("FaceRelation", ok, f"2f2={2 * f2}, 3f3={3 * f3}"))
    else:
        b = len(cycle)
        ok = f2 == 3 * f1 - (3 + b) and f3 == 2 * f1 - (2 + b)
        checks.append(Check("FaceRelation", ok, f"f=({f1},{f2},{f3}), b={b}"))
    # minimum degree is forced by the link checks, but report it explicitly
    low = sorted(v for v, es in link.items() if v not in bverts and len(es) < 3)
    checks.append(Check("MinDegree", not low, "" if not low else f"degree < 3 at {low}", tuple(low)))

    report = ValidationReport(tuple(checks))
    if not report.ok:
        return report, None, None

    otris = [oriented[f] for f in faces]
    if want_closed:
        return report, tuple(otris), None

    succ = {}
    for a, b, c in otris:
        for u, v in ((a, b), (b, c), (c, a)):
            if ekey(u, v) in edge_count and edge_count[ekey(u, v)] == 1:
                succ[u] = v
    if boundary is not None:
        bl = tuple(boundary)
        flip = succ[bl[0]] != bl[1]
    else:
        # start at the smallest point, head towards its smaller neighbour
        start = min(cycle)
        fwd = [start]
        cur = succ[start]
        while cur != start:
            fwd.append(cur)
            cur = succ[cur]
        rev = [start] + fwd[:0:-1]
        flip = rev[1] < fwd[1]
        bl = tuple(rev if flip else fwd)
    if flip:
        otris = [rotate_min((a, c, b)) for a, b, c in otris]
    return report, tuple(otris), tuple(bl)


def _components(edges: list[Edge]) -> list[set[int]]:
    adj: dict[int, set[int]] = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    comps = []
    for v in adj:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _raise_first(report: ValidationReport) -> None:
    for c in report.failures:
        exc = _ERROR_FOR.get(c.name, ValidationError)
        if c.name == "DistinctTriangles":
            exc = MalformedToken
        raise exc(c.detail or c.name)


# ---------------------------------------------------------------------------
# data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Triangulation:
    """Common read-only view over an oriented face list."""

    triangles: tuple[Tri, ...]

    kind = "abstract"

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for t in self.triangles for v in t}))

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def face_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(t) for t in self.triangles)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        es = set()
        for a, b, c in self.triangles:
            es.update((ekey(a, b), ekey(b, c), ekey(a, c)))
        return tuple(sorted(es))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def f1(self) -> int:
        return len(self.vertices)

    @property
    def f2(self) -> int:
        return len(self.edges)

    @property
    def f3(self) -> int:
        return len(self.triangles)

    @property
    def euler(self) -> int:
        return self.f1 - self.f2 + self.f3

    @cached_property
    def _succ(self) -> dict[int, dict[int, int]]:
        # succ[v][a] = b when (v, a, b) is an oriented triangle, i.e. b follows a around v
        s: dict[int, dict[int, int]] = defaultdict(dict)
        for a, b, c in self.triangles:
            s[a][b] = c
            s[b][c] = a
            s[c][a] = b
        return dict(s)

    @cached_property
    def third(self) -> dict[tuple[int, int], int]:
        """Map a directed edge ``(u, v)`` to the apex of the triangle on its left."""
        d = {}
        for a, b, c in self.triangles:
            d[(a, b)] = c
            d[(b, c)] = a
            d[(c, a)] = b
        return d

    @cached_property
    def rotations(self) -> dict[int, tuple[int, ...]]:
        rot = {}
        for v, s in self._succ.items():
            preds = set(s.values())
            starts = [a for a in s if a not in preds]
            start = starts[0] if starts else min(s)
            seq = [start]
            cur = s.get(start)
            while cur is not None and cur != start:
                seq.append(cur)
                cur = s.get(cur)
            rot[v] = tuple(seq)
        return rot

    def rotation(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` in counterclockwise order (a path on the boundary)."""
        return self.rotations[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.rotations[v])

    def triangle_count(self, v: int) -> int:
        return len(self._succ[v])

    def has_edge(self, a: int, b: int) -> bool:
        return ekey(a, b) in self.edge_set

    def has_triangle(self, a: int, b: int, c: int) -> bool:
        return frozenset((a, b, c)) in self.face_set

    def faces_at(self, v: int) -> list[Tri]:
        return [(v, a, b) for a, b in self._succ[v].items()]

    def deg(self, v: int) -> int:
        raise NotImplementedError

    @cached_property
    def degrees(self) -> dict[int, int]:
        return {v: self.deg(v) for v in self.vertices}

    def serialize(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class ClosedTriangulation(Triangulation):
    """Triangulation of the 2-sphere."""

    kind = "closed"

    def deg(self, v: int) -> int:
        return len(self._succ[v])

    @classmethod
    def from_triangles(cls, triangles: Iterable[Sequence[int]]) -> "ClosedTriangulation":
        report, tris, _ = check_faces(list(triangles), None, closed=True)
        if tris is None:
            _raise_first(report)
        return cls(tuple(sorted(tris)))

    def relabel(self, mapping: Mapping[int, int]) -> "ClosedTriangulation":
        return ClosedTriangulation(tuple(sorted(rotate_min(tuple(mapping[v] for v in t))
                                                for t in self.triangles)))

    def compact(self) -> "ClosedTriangulation":
        return self.relabel({v: i + 1 for i, v in enumerate(self.vertices)})

    def mirror(self) -> "ClosedTriangulation":
        return ClosedTriangulation(tuple(sorted(rotate_min((a, c, b)) for a, b, c in self.triangles)))


@dataclass(frozen=True)
class Patch(Triangulation):
    """Triangulation of a closed disc with a distinguished boundary cycle."""

    boundary: tuple[int, ...] = field(default=())

    kind = "patch"

    @property
    def b(self) -> int:
        return len(self.boundary)

    @cached_property
    def boundary_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    def is_interior(self, v: int) -> bool:
        return v not in self.boundary_set

    @cached_property
    def interior(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in self.boundary_set)

    def deg(self, v: int) -> int:
        n = len(self._succ[v])
        return n + 3 if v in self.boundary_set else n

    @classmethod
    def from_triangles(cls, triangles: Iterable[Sequence[int]],
                       boundary: Sequence[int] | None = None) -> "Patch":
        report, tris, bd = check_faces(list(triangles), boundary, closed=False)
        if tris is None:
            _raise_first(report)
        return cls(tuple(sorted(tris)), bd)

    def relabel(self, mapping: Mapping[int, int]) -> "Patch":
        tris = tuple(sorted(rotate_min(tuple(mapping[v] for v in t)) for t in self.triangles))
        return Patch(tris, tuple(mapping[v] for v in self.boundary))

    def compact(self) -> "Patch":
        return self.relabel({v: i + 1 for i, v in enumerate(self.vertices)})

    def mirror(self) -> "Patch":
        tris = tuple(sorted(rotate_min((a, c, b)) for a, b, c in self.triangles))
        return Patch(tris, (self.boundary[0],) + tuple(reversed(self.boundary[1:])))

    def with_boundary_start(self, start: int, reverse: bool = False) -> "Patch":
        """Same patch, boundary read from ``start``; ``reverse`` mirrors the orientation."""
        p = self.mirror() if reverse else self
        i = p.boundary.index(start)
        return Patch(p.triangles, p.boundary[i:] + p.boundary[:i])

    def boundary_degrees(self) -> tuple[int, ...]:
        return tuple(self.deg(v) for v in self.boundary)

    def cone(self, apex: int | None = None) -> ClosedTriangulation:
        """Close the disc by joining a new apex to every boundary point."""
        x = apex if apex is not None else max(self.vertices) + 1
        bd = self.boundary
        extra = [(bd[(i + 1) % len(bd)], bd[i], x) for i in range(len(bd))]
        return ClosedTriangulation(tuple(sorted(rotate_min(t) for t in self.triangles + tuple(extra))))


@dataclass(frozen=True)
class PathPatch:
    """Degenerate (2,0,0) disc whose points form a path.

    The boundary walk runs ``x0, x1, ..., xk, x_{k-1}, ..., x1``, so the two
    end points have multiplicity one and the inner points multiplicity two.
    It arises when peeling a belt off a (2,0,0) patch yields a graph.
    """

    path: tuple[int, ...]

    kind = "path"

    @property
    def k(self) -> int:
        return len(self.path) - 1

    @property
    def boundary(self) -> tuple[int, ...]:
        p = self.path
        return p + tuple(reversed(p[1:-1]))

    @property
    def b(self) -> int:
        return 2 * self.k

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.path))

    @property
    def triangles(self) -> tuple[Tri, ...]:
        return ()

    @property
    def f1(self) -> int:
        return len(self.path)

    @property
    def f2(self) -> int:
        return self.k

    @property
    def f3(self) -> int:
        return 0

    def deg(self, v: int) -> int:
        # triangles + 3 per occurrence on the boundary walk
        i = self.path.index(v)
        return 3 if i in (0, self.k) else 6

    @cached_property
    def degrees(self) -> dict[int, int]:
        return {v: self.deg(v) for v in self.path}

    def boundary_degrees(self) -> tuple[int, ...]:
        return tuple(self.deg(v) for v in self.boundary)

    def serialize(self) -> str:
        return "# kind: path\npath: " + " ".join(str(v) for v in self.path) + "\n"


AnyTri = Union[ClosedTriangulation, Patch]


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"^(?:[1-9A-Z]{3}|\d+-\d+-\d+)$")


def parse_token(tok: str) -> Tri:
    if not _TOKEN_RE.match(tok):
        raise MalformedToken(f"bad triangle token {tok!r}")
    if "-" in tok:
        t = tuple(int(x) for x in tok.split("-"))
        if min(t) < 1:
            raise MalformedToken(f"vertex ids start at 1: {tok!r}")
        return t  # type: ignore[return-value]
    return tuple(_VALUE[c] for c in tok)  # type: ignore[return-value]


def parse_cycle(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}()")
    if re.search(r"[-,\s]", text):
        parts = [p for p in re.split(r"[-,\s]+", text) if p]
        try:
            return tuple(int(p) if p.isdigit() else _VALUE[p] for p in parts)
        except KeyError as exc:
            raise MalformedToken(f"bad boundary {text!r}") from exc
    try:
        return tuple(_VALUE[c] for c in text)
    except KeyError as exc:
        raise MalformedToken(f"bad boundary {text!r}") from exc


def split_document(text: str) -> tuple[dict[str, str], list[Tri], tuple[int, ...] | None]:
    """Split a face-list document into headers, raw triangles and boundary."""
    headers: dict[str, str] = {}
    tokens: list[str] = []
    boundary = None
    mode = "triangles"
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*([\w-]+)\s*:\s*(.*)$", line)
            if m:
                headers[m.group(1).lower()] = m.group(2).strip()
            continue
        low = line.lower()
        if low.startswith("triangles:"):
            mode = "triangles"
            line = line[len("triangles:"):]
        elif low.startswith("boundary:"):
            boundary = parse_cycle(line[len("boundary:"):])
            mode = "done"
            continue
        elif mode == "done":
            raise MalformedToken(f"unexpected line after boundary: {line!r}")
        tokens.extend(t for t in re.split(r"[\s,{}$]+", line) if t)
    tris = [parse_token(t) for t in tokens]
    if not tris:
        raise MalformedToken("no triangles")
    return headers, tris, boundary


def parse_face_list(text: str) -> AnyTri:
    """Parse and validate a face-list document.

    Input labels are kept as given.  Without a ``boundary:`` line a face list
    whose edges all lie in two triangles is a sphere; anything else is read as
    a patch whose boundary is inferred (or taken from the declaration).
    """
    _, tris, boundary = split_document(text)
    report, otris, bd = check_faces(tris, boundary)
    if otris is None:
        _raise_first(report)
    if bd is None:
        return ClosedTriangulation(tuple(sorted(otris)))
    return Patch(tuple(sorted(otris)), bd)


def validate(obj: AnyTri | str) -> ValidationReport:
    """Structural report for an object or a raw face-list document."""
    if isinstance(obj, str):
        try:
            _, tris, boundary = split_document(obj)
        except MalformedToken as exc:
            return ValidationReport((Check("MalformedToken", False, str(exc)),))
        report, _, _ = check_faces(tris, boundary)
        return ValidationReport((Check("MalformedToken", True),) + report.checks)
    if isinstance(obj, PathPatch):
        return ValidationReport((Check("Degenerate", True, "path core, no triangles"),))
    if isinstance(obj, Patch):
        report, _, _ = check_faces(obj.triangles, obj.boundary, closed=False)
    else:
        report, _, _ = check_faces(obj.triangles, None, closed=True)
    return report


def _label_str(vs: Iterable[int], letters: bool) -> str:
    vs = list(vs)
    if letters:
        return "".join(label_char(v) for v in vs)
    return "-".join(str(v) for v in vs)


def serialize(obj: AnyTri | PathPatch) -> str:
    """Canonical text form: sorted triples, letters iff every id is at most 35."""
    if isinstance(obj, PathPatch):
        return obj.serialize()
    letters = obj.vertices[-1] <= 35 and obj.vertices[0] >= 1
    tris = sorted(tuple(sorted(t)) for t in obj.triangles)
    lines = [f"# kind: {obj.kind}", "triangles: " + " ".join(_label_str(t, letters) for t in tris)]
    if isinstance(obj, Patch):
        lines.append("boundary: " + _label_str(obj.boundary, letters))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Label-invariant code; equal codes mean isomorphic objects."""

    kind: str
    code: tuple[int, ...]
    reflections_identified: bool = True

    @property
    def bytes(self) -> bytes:
        return (self.kind + ":" + ",".join(map(str, self.code))).encode("ascii")

    def __str__(self) -> str:
        return self.bytes.decode("ascii")


def _bfs_code(succ: Mapping[int, Mapping[int, int]], root: int, first: int,
              best: list[int] | None) -> list[int] | None:
    """Breadth-first code from directed edge root->first; None once it exceeds ``best``."""
    label = {root: 1}
    order = [root]
    parent = {root: first}
    code: list[int] = []
    pos = 0
    head = 0
    limit = best is not None
    while head < len(order):
        v = order[head]
        head += 1
        s = succ[v]
        start = parent[v]
        cur = start
        while True:
            if cur not in label:
                label[cur] = len(order) + 1
                order.append(cur)
                parent[cur] = v
            x = label[cur]
            if limit:
                y = best[pos]
                if x > y:
                    return None
                if x < y:
                    limit = False
            code.append(x)
            pos += 1
            cur = s[cur]
            if cur == start:
                break
        if limit:
            if best[pos] != 0:
                return None
        code.append(0)
        pos += 1
    return code


def _min_code(tris: Sequence[Tri], roots: Iterable[int] | None, mirror: bool) -> list[int]:
    succ: dict[int, dict[int, int]] = defaultdict(dict)
    for a, b, c in tris:
        if mirror:
            a, b, c = a, c, b
        succ[a][b] = c
        succ[b][c] = a
        succ[c][a] = b
    if roots is None:
        mind = min(len(s) for s in succ.values())
        roots = [v for v, s in succ.items() if len(s) == mind]
    best: list[int] | None = None
    for r in roots:
        for f in succ[r]:
            c = _bfs_code(succ, r, f, best)
            if c is not None and (best is None or c < best):
                best = c
    assert best is not None
    return best


def canonical_code(obj: AnyTri | PathPatch, reflections: bool = True) -> CanonicalCode:
    """Minimum breadth-first code over root edges and, optionally, mirror images.

    Patches are coned off with an apex and only apex-rooted codes are taken,
    so the boundary stays distinguished.
    """
    if isinstance(obj, PathPatch):
        return CanonicalCode("path", (obj.k,), reflections)
    if isinstance(obj, Patch):
        apex = max(obj.vertices) + 1
        tris = obj.cone(apex).triangles
        roots: list[int] | None = [apex]
    else:
        tris = obj.triangles
        roots = None
    code = _min_code(tris, roots, False)
    if reflections:
        code = min(code, _min_code(tris, roots, True))
    return CanonicalCode(obj.kind, tuple(code), reflections)


def canonical_form(obj: AnyTri, reflections: bool = True) -> AnyTri:
    """Relabel ``obj`` by the breadth-first order realizing its canonical code."""
    if isinstance(obj, Patch):
        apex = max(obj.vertices) + 1
        tris = obj.cone(apex).triangles
        roots: list[int] | None = [apex]
    else:
        tris = obj.triangles
        roots = None
    best = None
    for mirror in ((False, True) if reflections else (False,)):
        succ: dict[int, dict[int, int]] = defaultdict(dict)
        for a, b, c in tris:
            if mirror:
                a, b, c = a, c, b
            succ[a][b] = c
            succ[b][c] = a
            succ[c][a] = b
        rs = roots
        if rs is None:
            mind = min(len(s) for s in succ.values())
            rs = [v for v, s in succ.items() if len(s) == mind]
        for r in rs:
            for f in sorted(succ[r]):
                code = _bfs_code(succ, r, f, None)
                if best is None or code < best[0]:
                    best = (code, r, f, mirror)
    _, r, f, mirror = best
    # replay the BFS to recover the labelling
    succ = defaultdict(dict)
    for a, b, c in tris:
        if mirror:
            a, b, c = a, c, b
        succ[a][b] = c
        succ[b][c] = a
        succ[c][a] = b
    label = {r: 1}
    order = [r]
    parent = {r: f}
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        cur = parent[v]
        while True:
            if cur not in label:
                label[cur] = len(order) + 1
                order.append(cur)
                parent[cur] = v
            cur = succ[v][cur]
            if cur == parent[v]:
                break
    src = obj.mirror() if mirror else obj
    if isinstance(obj, Patch):
        shift = {v: label[v] - 1 for v in obj.vertices}
        p = src.relabel(shift)
        return p.with_boundary_start(min(p.boundary))
    return src.relabel(label)


def is_isomorphic(a: AnyTri, b: AnyTri, reflections: bool = True) -> bool:
    if a.kind != b.kind:
        raise KindMismatch(f"cannot compare {a.kind} with {b.kind}")
    if a.f1 != b.f1 or a.f3 != b.f3:
        return False
    return canonical_code(a, reflections) == canonical_code(b, reflections)


def iter_directed_edges(t: Triangulation) -> Iterator[tuple[int, int]]:
    for a, b, c in t.triangles:
        yield (a, b)
        yield (b, c)
        yield (c, a)
