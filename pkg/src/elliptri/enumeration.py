"""Isomorph-free generation of small sphere triangulations and patches.

Closed triangulations grow from the tetrahedron by vertex splitting, the
inverse of edge contraction; every sphere triangulation other than the
tetrahedron has a contractible edge, so each level is complete.  Duplicates
are removed by canonical code.  A second, naive generator backtracks over
triangle sets and exists only to cross-check the first on small inputs.

Patches are grown inside a fixed boundary cycle by repeatedly choosing the
apex of the triangle on one open edge.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .analysis import classify
from .core import ClosedTriangulation, Patch, Tri, _min_code, ekey, rotate_min
from .errors import CapExceeded

DEFAULT_CLOSED_CAP = 10
DEFAULT_PATCH_CAP = 9
NAIVE_CAP = 7

Code = tuple[int, ...]


@dataclass
class EnumerationResult:
    """Objects found for one size, one per isomorphism class."""

    kind: str
    size: int
    objects: list = field(default_factory=list)
    codes: list[Code] = field(default_factory=list)
    elapsed: float = 0.0
    stats: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    @property
    def tally(self) -> dict[str, int]:
        out: Counter = Counter()
        for o in self.objects:
            try:
                out[str(classify(o).tuple)] += 1
            except Exception:
                out["non-elliptic"] += 1
        return dict(sorted(out.items()))

    def signatures(self) -> list[tuple[int, int, int, int]]:
        return [classify(o).tuple for o in self.objects]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "size": self.size,
            "count": len(self.objects),
            "tally": self.tally,
            "elapsed": round(self.elapsed, 3),
            "stats": self.stats,
        }


# ---------------------------------------------------------------------------
# closed triangulations
# ---------------------------------------------------------------------------

def _code(tris: Sequence[Tri]) -> Code:
    return tuple(min(_min_code(tris, None, False), _min_code(tris, None, True)))


def _rotations(tris: Sequence[Tri]) -> dict[int, list[int]]:
    succ: dict[int, dict[int, int]] = {}
    for a, b, c in tris:
        succ.setdefault(a, {})[b] = c
        succ.setdefault(b, {})[c] = a
        succ.setdefault(c, {})[a] = b
    rot = {}
    for v, s in succ.items():
        start = min(s)
        seq = [start]
        cur = s[start]
        while cur != start:
            seq.append(cur)
            cur = s[cur]
        rot[v] = seq
    return rot


def vertex_splits(tris: Sequence[Tri]) -> Iterable[tuple[Tri, ...]]:
    """Every vertex split of a closed triangulation.

    Vertex ``v`` with counterclockwise neighbours ``n_0 .. n_{d-1}`` hands
    the arc ``n_i .. n_j`` to a new point ``w``; ``n_i`` and ``n_j`` become
    common neighbours of ``v`` and ``w``.
    """
    rot = _rotations(tris)
    w = max(rot) + 1
    for v, nb in rot.items():
        d = len(nb)
        moved_base = {frozenset((v, nb[k], nb[(k + 1) % d])): k for k in range(d)}
        for i in range(d):
            for span in range(1, d):
                j = (i + span) % d
                arc = {(i + s) % d for s in range(span)}
                out = []
                for t in tris:
                    k = moved_base.get(frozenset(t))
                    if k is not None and k in arc:
                        out.append(rotate_min((w, nb[k], nb[(k + 1) % d])))
                    else:
                        out.append(t)
                out.append(rotate_min((v, nb[i], w)))
                out.append(rotate_min((v, w, nb[j])))
                yield tuple(sorted(out))


def _excess(tris: Sequence[Tri]) -> int:
    deg = Counter(v for t in tris for v in t)
    return sum(d - 6 for d in deg.values() if d > 6)


def _expand(args) -> list[tuple[Code, tuple[Tri, ...]]]:
    tris, budget, elliptic = args
    out = []
    for new in vertex_splits(tris):
        # one split lowers the total excess over degree six by at most two
        if elliptic and _excess(new) > 2 * budget:
            continue
        out.append((_code(new), new))
    return out


TETRAHEDRON: tuple[Tri, ...] = ((1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 4, 3))


def _closed_levels(n: int, elliptic_only: bool, workers: int) -> tuple[list[tuple[Tri, ...]], dict]:
    level = {_code(TETRAHEDRON): TETRAHEDRON}
    stats = {"levels": {4: 1}, "candidates": 0}
    for size in range(5, n + 1):
        budget = n - size
        jobs = [(t, budget, elliptic_only) for t in level.values()]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                batches = list(ex.map(_expand, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
        else:
            batches = [_expand(j) for j in jobs]
        nxt: dict[Code, tuple[Tri, ...]] = {}
        for batch in batches:
            for code, tris in batch:
                stats["candidates"] += 1
                nxt.setdefault(code, tris)
        # deterministic order regardless of scheduling
        level = dict(sorted(nxt.items()))
        stats["levels"][size] = len(level)
    return list(level.values()), stats


def enumerate_closed(n: int, elliptic_only: bool = False, cap: int = DEFAULT_CLOSED_CAP,
                     workers: int = 1) -> EnumerationResult:
    """All sphere triangulations on ``n`` points up to isomorphism (mirror images identified)."""
    if n < 4 or n > cap:
        raise CapExceeded(f"n = {n} outside 4..{cap}")
    t0 = time.perf_counter()
    found, stats = _closed_levels(n, elliptic_only, workers)
    objs = [ClosedTriangulation(t).compact() for t in found]
    if elliptic_only:
        objs = [o for o in objs if max(o.degrees.values()) <= 6]
    objs.sort(key=lambda o: _code(o.triangles))
    codes = [_code(o.triangles) for o in objs]
    return EnumerationResult("closed", n, objs, codes, time.perf_counter() - t0, stats)


def enumerate_closed_naive(n: int, elliptic_only: bool = False) -> EnumerationResult:
    """Backtracking over triangle sets; only for cross-checking at small ``n``.

    Fixes the triangle ``(1, 2, 3)`` and repeatedly closes the smallest edge
    that lies in a single triangle, then keeps sets whose vertex links are
    single cycles.
    """
    if n < 4 or n > NAIVE_CAP:
        raise CapExceeded(f"naive generator limited to 4..{NAIVE_CAP}, got {n}")
    t0 = time.perf_counter()
    target = 2 * n - 4
    found: dict[Code, tuple[Tri, ...]] = {}
    nodes = 0

    def rec(tris: list[Tri], directed: set[tuple[int, int]]) -> None:
        nonlocal nodes
        nodes += 1
        # an oriented edge (a, b) with no partner (b, a) is still open
        open_edges = sorted((b, a) for a, b in directed if (b, a) not in directed)
        if not open_edges:
            if len(tris) == target and len({v for t in tris for v in t}) == n:
                try:
                    ClosedTriangulation.from_triangles(tris)
                except Exception:
                    return
                code = _code(tris)
                found.setdefault(code, tuple(sorted(tris)))
            return
        if len(tris) >= target:
            return
        a, b = open_edges[0]
        for c in range(1, n + 1):
            if c in (a, b):
                continue
            new = ((a, b), (b, c), (c, a))
            if any(e in directed for e in new):
                continue
            tris.append(rotate_min((a, b, c)))
            directed.update(new)
            rec(tris, directed)
            directed.difference_update(new)
            tris.pop()

    rec([(1, 2, 3)], {(1, 2), (2, 3), (3, 1)})
    objs = [ClosedTriangulation(t) for t in found.values()]
    if elliptic_only:
        objs = [o for o in objs if max(o.degrees.values()) <= 6]
    objs.sort(key=lambda o: _code(o.triangles))
    codes = [_code(o.triangles) for o in objs]
    return EnumerationResult("closed", n, objs, codes, time.perf_counter() - t0, {"nodes": nodes})


# ---------------------------------------------------------------------------
# patches
# ---------------------------------------------------------------------------

def _patch_search(b: int, max_f1: int, type_filter: tuple[int, int, int] | None,
                  elliptic_only: bool) -> tuple[list[Patch], int]:
    boundary = list(range(1, b + 1))
    bset = set(boundary)
    limit = {3: 0, 4: 0, 5: 0} if type_filter is None else dict(zip((3, 4, 5), type_filter))
    out: list[Patch] = []
    nodes = 0

    def deg(v: int, c: Counter) -> int:
        return c[v] + 3 if v in bset else c[v]

    def budget_ok(c: Counter, open_pts: set, verts: Iterable[int]) -> bool:
        if not elliptic_only:
            return True
        curv = 0
        small = Counter()
        for v in verts:
            d = deg(v, c)
            if d > 6:
                return False
            if v not in open_pts:
                curv += 6 - d
                if d < 6:
                    small[d] += 1
        if curv > 6:
            return False
        if type_filter is not None and any(small[d] > limit[d] for d in (3, 4, 5)):
            return False
        return True

    def rec(regions: list[list[int]], tris: list[Tri], edges: set, c: Counter, nxt: int) -> None:
        nonlocal nodes
        nodes += 1
        if not regions:
            p = Patch(tuple(sorted(tris)), tuple(boundary))
            if elliptic_only:
                try:
                    sig = classify(p)
                except Exception:
                    return
                if type_filter is not None and sig.type != tuple(type_filter):
                    return
            out.append(p)
            return
        cyc = regions[0]
        rest = regions[1:]
        L = len(cyc)
        c0, c1 = cyc[0], cyc[1]
        options: list[int] = []
        # apex on the region boundary
        for idx in range(2, L):
            options.append(idx)
        if nxt <= max_f1:
            options.append(-1)
        for idx in options:
            if idx == -1:
                x = nxt
                # new interior point: cycle c0, x, c1, ..., c_{L-1}
                new_edges = [ekey(c0, x), ekey(x, c1)]
                new_regions = [[x] + cyc[1:] + [c0]]
                n2 = nxt + 1
            else:
                x = cyc[idx]
                new_edges = []
                if idx != 2:
                    new_edges.append(ekey(c1, x))
                if idx != L - 1:
                    new_edges.append(ekey(x, c0))
                if any(e in edges for e in new_edges):
                    continue
                new_regions = []
                # region after c1 .. x and region x .. c0
                if idx != 2:
                    new_regions.append(cyc[1:idx + 1])
                if idx != L - 1:
                    new_regions.append(cyc[idx:] + [c0])
                n2 = nxt
            # orientation: the region lies to the left of (c0, c1)
            t = rotate_min((c0, c1, x))
            c2 = Counter(c)
            for v in (c0, c1, x):
                c2[v] += 1
            regs = new_regions + rest
            open_pts = {v for r in regs for v in r}
            if elliptic_only and not all(c2[v] <= (3 if v in bset else 6) for v in (c0, c1, x)):
                continue
            verts = {v for tt in tris for v in tt} | {c0, c1, x}
            if not budget_ok(c2, open_pts, verts):
                continue
            edges2 = edges | set(new_edges)
            rec(regs, tris + [t], edges2, c2, n2)

    # the boundary cycle runs counterclockwise with the interior on its left
    rec([boundary], [], {ekey(boundary[i], boundary[(i + 1) % b]) for i in range(b)},
        Counter(), b + 1)
    return out, nodes


def enumerate_patches(b: int, type_filter: Sequence[int] | None = None,
                      max_f1: int | None = None, elliptic_only: bool = True,
                      cap: int = DEFAULT_PATCH_CAP) -> EnumerationResult:
    """Patches with boundary length ``b`` and at most ``max_f1`` points.

    The boundary is held fixed while searching; classes are merged up to
    rotation and reflection of the boundary at output time.  Without the
    elliptic flag a point bound is required.
    """
    if b < 3 or b > cap:
        raise CapExceeded(f"b = {b} outside 3..{cap}")
    if max_f1 is None:
        if not elliptic_only:
            raise CapExceeded("a point bound is needed without the elliptic filter")
        max_f1 = b + (b * b) // 4 + 3
    t0 = time.perf_counter()
    tf = tuple(type_filter) if type_filter is not None else None
    found, nodes = _patch_search(b, max_f1, tf, elliptic_only)
    from .core import canonical_code
    seen: dict = {}
    for p in found:
        seen.setdefault(canonical_code(p), p)
    items = sorted(seen.items(), key=lambda kv: kv[0].code)
    objs = [p for _, p in items]
    codes = [k.code for k, _ in items]
    return EnumerationResult("patch", b, objs, codes, time.perf_counter() - t0,
                             {"nodes": nodes, "labelled": len(found), "max_f1": max_f1})


def elliptic_signatures(n: int, cap: int = DEFAULT_CLOSED_CAP) -> set[tuple[int, int, int, int]]:
    return set(enumerate_closed(n, elliptic_only=True, cap=cap).signatures())
