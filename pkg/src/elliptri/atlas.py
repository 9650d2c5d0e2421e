"""Existence table for elliptic sphere triangulations.

Each cell ``(a3, a4, a5, N)`` is settled, in order, by a validated witness
(catalog entry or construction), by exhaustive enumeration when the point
count is within the enumeration cap, or by the published status.  Cells
with no witness, beyond the cap, and recorded as open stay ``unknown``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import catalog
from .analysis import CLOSED_TYPES, classify, is_elliptic
from .core import ClosedTriangulation, canonical_code
from .patches import AnyPatch, build_030, build_200, generic_enlarge
from .enumeration import DEFAULT_CLOSED_CAP, enumerate_closed
from .errors import CapExceeded, DomainError, NotATypeTuple, ValidationError
from .rewrites import (KINDS, SELF_REPRODUCTIVE, apply_rewrite, apply_rewrite_ex, successor_sites, connected_sum, edge_fullering, face_fullering,
                       find_sites, glue_method, glue_strip, insert_belt, straight_loops,
                       triangles_with_degrees)

Sig = tuple[int, int, int, int]

# ---------------------------------------------------------------------------
# published statuses
# ---------------------------------------------------------------------------

# type: (values of N that do not exist, values still open); ``None`` marks a
# rule given by parity and handled in ``published``
_ABSENT: dict[tuple[int, int, int], tuple[frozenset, frozenset]] = {
    (0, 0, 12): (frozenset({1}), frozenset()),
    (0, 1, 10): (frozenset({0, 1}), frozenset()),
    (0, 2, 8): (frozenset(), frozenset()),
    (0, 3, 6): (frozenset(), frozenset()),
    (0, 4, 4): (frozenset({1}), frozenset()),
    (0, 5, 2): (frozenset({1}), frozenset()),
    (0, 6, 0): (frozenset({1}), frozenset()),
    (1, 0, 9): (frozenset({0, 1, 2}), frozenset({4})),
    (1, 1, 7): (frozenset({0, 1}), frozenset()),
    (1, 2, 5): (frozenset({0}), frozenset()),
    (1, 3, 3): (frozenset(), frozenset()),
    (1, 4, 1): (frozenset({0, 1}), frozenset()),
    (2, 0, 6): (frozenset({1}), frozenset()),
    (2, 1, 4): (frozenset({0}), frozenset()),
    (2, 2, 2): (frozenset(), frozenset()),
    (2, 3, 0): (frozenset({1}), frozenset({3, 7, 15, 31})),
    (3, 0, 3): (frozenset({0, 2}), frozenset({4, 12})),
    (3, 1, 1): (frozenset({1}), frozenset({17})),
    (4, 0, 0): (frozenset({2}), frozenset()),
}


def published(sig: Sig) -> str:
    """Status recorded in the literature: ``exists``, ``absent`` or ``open``."""
    t, n = tuple(sig[:3]), sig[3]
    absent, open_ = _ABSENT[t]
    if n in open_:
        return "open"
    if n in absent:
        return "absent"
    if t == (3, 1, 1) and n % 2 == 0:
        return "absent"
    if t == (4, 0, 0) and n % 2 == 1:
        return "absent"
    return "exists"


# ---------------------------------------------------------------------------
# statuses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Status:
    """Outcome for one cell.

    ``state`` is ``exists``, ``absent`` or ``unknown``; ``source`` is one of
    ``catalog``, ``construction``, ``enumerated``, ``cited`` or empty.
    """

    state: str
    source: str
    detail: str = ""
    witness: ClosedTriangulation | None = field(default=None, compare=False, repr=False)

    @property
    def label(self) -> str:
        if self.state == "exists":
            return f"Exists({self.source})"
        if self.state == "absent":
            return f"NotExists({self.source})"
        return "Unknown"

    def as_dict(self) -> dict:
        return {"state": self.state, "source": self.source, "detail": self.detail,
                "label": self.label}


# ---------------------------------------------------------------------------
# witness pool
# ---------------------------------------------------------------------------

PER_CELL = 4
SITES_PER_KIND = 3


class WitnessPool:
    """Validated witnesses per signature, with the construction that made them."""

    def __init__(self, max_n6: int) -> None:
        self.max_n6 = max_n6
        self.cells: dict[Sig, list[tuple[ClosedTriangulation, str]]] = {}
        self._codes: set = set()

    def offer(self, t: ClosedTriangulation | None, how: str) -> bool:
        if t is None or not is_elliptic(t):
            return False
        sig = classify(t).tuple
        if sig[3] > self.max_n6:
            return False
        have = self.cells.setdefault(sig, [])
        if len(have) >= PER_CELL:
            return False
        code = canonical_code(t)
        if code in self._codes:
            return False
        self._codes.add(code)
        have.append((t.compact(), how))
        return True

    def best(self, sig: Sig) -> tuple[ClosedTriangulation, str] | None:
        have = self.cells.get(tuple(sig))
        return have[0] if have else None

    def items(self):
        for sig in sorted(self.cells):
            for t, how in self.cells[sig]:
                yield sig, t, how


def patch_library(max_n6: int, max_b: int | None = None) -> list[tuple[AnyPatch, str]]:
    """Patches available for glueing: catalog entries, (2,0,0) and (0,3,0)
    builders, and generic enlargements and edge-fullerings of the catalog."""
    if max_b is None:
        # two (2,0,0) paths of k edges glue to N = 2k - 2
        max_b = max(16, max_n6 + 2)
    lib: dict = {}

    def add(p: AnyPatch, how: str) -> bool:
        if p.b > max_b or classify(p).N > max_n6:
            return False
        code = canonical_code(p)
        if code in lib:
            return False
        lib[code] = (p, how)
        return True

    base = [(e.build(), f"catalog {e.id}") for e in catalog.all_entries(kind="patch")]
    for p, how in base:
        add(p, how)
    for k in range(2, max_b // 2 + 1):
        r = 0
        while 2 * k * r + k - 1 <= max_n6:
            add(build_200(k, r), f"(2,0,0) path of {k} edges, {r} belt(s)")
            r += 1
    for h in range(1, max_b // 3 + 1):
        for kk in range(h):
            for ll in range(kk + 1):
                try:
                    add(build_030(h, kk, ll), f"(0,3,0) h={h} k={kk} l={ll}")
                except DomainError:
                    continue
    queue = deque(base)
    while queue:
        p, how = queue.popleft()
        for u4, u5 in ((1, 0), (0, 1), (1, 1)):
            try:
                q = generic_enlarge(p, use_b4=u4, use_b5=u5)
            except DomainError:
                continue
            step = f"{how} | enlarge b4={u4} b5={u5}"
            if add(q, step):
                queue.append((q, step))
    for p, how in base:
        try:
            add(edge_fullering(p), f"{how} | edge-fullering")
        except (DomainError, AssertionError):
            continue
    return sorted(lib.values(), key=lambda ph: (ph[0].b, ph[1]))


def _seed_glued(pool: WitnessPool) -> None:
    by_b: dict[int, list] = {}
    for p, how in patch_library(pool.max_n6):
        by_b.setdefault(p.b, []).append((p, how, classify(p)))
    for b in sorted(by_b):
        group = by_b[b]
        for i, (p1, h1, s1) in enumerate(group):
            for p2, h2, s2 in group[i:]:
                m = 0
                while s1.N + s2.N + b * m <= pool.max_n6:
                    r = glue_strip(p1, p2, m)
                    if r.elliptic:
                        pool.offer(r.triangulation, f"glue [{h1}] + [{h2}], {m} belt(s)")
                    m += 1
                if s1.type == s2.type == (1, 1, 1):
                    for meth in "ABC":
                        try:
                            r = glue_method(p1, p2, meth)
                        except DomainError:
                            continue
                        pool.offer(r.triangulation, f"glue method {meth} [{h1}] + [{h2}]")


def _successors(t: ClosedTriangulation):
    for kind in KINDS:
        try:
            sites = find_sites(t, kind)
        except DomainError:
            continue
        for s in sites[:SITES_PER_KIND]:
            try:
                yield apply_rewrite(t, s), kind
            except (DomainError, AssertionError):
                continue
    for name, op in (("face-fullering", face_fullering), ("edge-fullering", edge_fullering)):
        try:
            yield op(t), name
        except (DomainError, AssertionError, ValidationError):
            continue
    for name, other in _SUMMANDS.items():
        for tri in [f for f in t.triangles if max(t.deg(v) for v in f) <= 4][:2]:
            yield connected_sum(t, tri, other, triangles_with_degrees(other, (4, 4, 4))[0]), name
    for loop in straight_loops(t)[:2]:
        try:
            yield insert_belt(t, loop, 1), "belt"
        except DomainError:
            continue


_SUMMANDS = {
    "sum with (0,6,0,0)": catalog.closed("(0,6,0,0)"),
    "sum with (0,6,0,3)": catalog.closed("(0,6,0,3)"),
}


@lru_cache(maxsize=8)
def build_pool(max_n6: int = 20, enum_cap: int = 9) -> WitnessPool:
    """Catalog spheres, glued catalog patches and small enumerated spheres,
    closed under the rewrites, fullering and belt insertion up to ``max_n6``."""
    pool = WitnessPool(max_n6)
    hosts = [(e.build(), f"catalog {e.id}") for e in catalog.all_entries(kind="closed")]
    for t, how in hosts:
        pool.offer(t, how)
    # successor chains keep the configuration that produced them
    for t, how in hosts:
        for kind in SELF_REPRODUCTIVE:
            sites = find_sites(t, kind)
            if not sites:
                continue
            cur, site, step = t, sites[0], how
            while True:
                res = apply_rewrite_ex(cur, site)
                if classify(res.triangulation).N > max_n6:
                    break
                cur, step = res.triangulation, f"{step} | {kind}"
                pool.offer(cur, step)
                nxt = successor_sites(res)
                if not nxt:
                    break
                site = nxt[0]
    for n in range(4, enum_cap + 1):
        for t in enumerate_closed(n, elliptic_only=True, cap=max(enum_cap, n)):
            pool.offer(t, f"enumeration n={n}")
    _seed_glued(pool)
    queue = deque((t, how) for _, t, how in pool.items())
    while queue:
        t, how = queue.popleft()
        for nxt, step in _successors(t):
            label = f"{how} | {step}"
            if pool.offer(nxt, label):
                queue.append(pool.cells[classify(nxt).tuple][-1])
    return pool


# ---------------------------------------------------------------------------
# cells
# ---------------------------------------------------------------------------

def _check_type(sig: Sig) -> None:
    a3, a4, a5, a6 = sig
    if min(sig) < 0 or 3 * a3 + 2 * a4 + a5 != 12:
        raise NotATypeTuple(f"{sig} does not satisfy 3a3 + 2a4 + a5 = 12")


def _enumerated_witness(sig: Sig, cap: int) -> ClosedTriangulation | None:
    n = sum(sig)
    for t in enumerate_closed(n, True, cap=cap):
        if classify(t).tuple == tuple(sig):
            return t
    return None


def check_existence(a3: int, a4: int, a5: int, a6: int, enum_cap: int = 9,
                    pool: WitnessPool | None = None) -> Status:
    """Settle one cell: witness, then enumeration within the cap, then citation."""
    sig = (a3, a4, a5, a6)
    _check_type(sig)
    if pool is None:
        pool = build_pool(max(20, a6), enum_cap)
    hit = pool.best(sig) if a6 <= pool.max_n6 else None
    f1 = a3 + a4 + a5 + a6
    if hit is not None:
        t, how = hit
        assert classify(t).tuple == sig
        source = "catalog" if how.startswith("catalog") and "|" not in how else (
            "enumerated" if how.startswith("enumeration") and "|" not in how else "construction")
        return Status("exists", source, how, t)
    if f1 <= enum_cap:
        t = _enumerated_witness(sig, enum_cap)
        if t is not None:
            return Status("exists", "enumerated", f"enumeration n={f1}", t)
        return Status("absent", "enumerated", f"no elliptic triangulation among all {f1}-point spheres")
    pub = published(sig)
    if pub == "absent":
        return Status("absent", "cited", "recorded as nonexistent in the literature")
    if pub == "open":
        return Status("unknown", "", f"open; {f1} points exceeds the enumeration cap {enum_cap}")
    return Status("unknown", "", "recorded as existing but no witness was constructed")


@dataclass(frozen=True)
class AtlasRow:
    type: tuple[int, int, int]
    cells: tuple[tuple[int, Status], ...]

    def as_dict(self) -> dict:
        return {"type": list(self.type),
                "cells": {str(n): s.as_dict() for n, s in self.cells}}


def atlas(max_n6: int = 20, enum_cap: int = 9) -> list[AtlasRow]:
    if max_n6 < 0 or enum_cap < 4:
        raise DomainError("bounds must be positive")
    if enum_cap > DEFAULT_CLOSED_CAP:
        raise CapExceeded(f"enumeration cap {enum_cap} above {DEFAULT_CLOSED_CAP}")
    pool = build_pool(max_n6, enum_cap)
    rows = []
    for t in CLOSED_TYPES:
        cells = tuple((n, check_existence(*t, n, enum_cap=enum_cap, pool=pool))
                      for n in range(max_n6 + 1))
        rows.append(AtlasRow(t, cells))
    return rows


def compare_with_published(rows: list[AtlasRow]) -> list[dict]:
    """Cells whose computed state differs from the recorded one."""
    out = []
    for row in rows:
        for n, st in row.cells:
            pub = published(row.type + (n,))
            want = {"exists": "exists", "absent": "absent", "open": "unknown"}[pub]
            if st.state != want:
                out.append({"cell": row.type + (n,), "computed": st.label, "published": pub,
                            "detail": st.detail})
    return out


def format_atlas(rows: list[AtlasRow]) -> str:
    short = {"exists": "+", "absent": "-", "unknown": "?"}
    lines = []
    for row in rows:
        marks = "".join(short[s.state] for _, s in row.cells)
        lines.append(f"({row.type[0]},{row.type[1]},{row.type[2]})  {marks}")
    return "\n".join(lines)
