"""Face lists of known patches and sphere triangulations shipped as fixtures."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .core import ClosedTriangulation, Patch, parse_cycle, parse_face_list
from .errors import UnknownEntry


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    table: str
    signature: tuple[int, int, int, int]
    b: int | None
    f3: int
    beta4: int | None
    beta5: int | None
    faces: str
    boundary: str | None
    quarantine: str | None = None

    @property
    def is_patch(self) -> bool:
        return self.b is not None

    @property
    def type(self) -> tuple[int, int, int]:
        return self.signature[:3]

    @property
    def N(self) -> int:
        return self.signature[3]

    def text(self) -> str:
        out = f"# id: {self.id}\ntriangles: {self.faces}\n"
        if self.boundary:
            out += f"boundary: {self.boundary}\n"
        return out

    def build(self) -> ClosedTriangulation | Patch:
        return _build(self.id)

    def boundary_cycle(self) -> tuple[int, ...] | None:
        return parse_cycle(self.boundary) if self.boundary else None


_SIG = re.compile(r"\((\d+),(\d+),(\d+),(\d+)\)(?:_(\d+))?$")


def _parse_data(text: str) -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}
    for block in re.split(r"\n(?=\[)", text):
        block = block.strip()
        if not block.startswith("["):
            continue
        lines = block.splitlines()
        eid = lines[0].strip("[]")
        fields = dict(line.split(":", 1) for line in lines[1:] if ":" in line)
        fields = {k.strip(): v.strip() for k, v in fields.items()}
        m = _SIG.match(fields["signature"])
        sig = tuple(int(m.group(i)) for i in range(1, 5))
        b = int(m.group(5)) if m.group(5) else None
        out[eid] = CatalogEntry(
            id=eid,
            table=eid.split("/")[0],
            signature=sig,  # type: ignore[arg-type]
            b=b,
            f3=int(fields["f3"]),
            beta4=int(fields["beta4"]) if "beta4" in fields else None,
            beta5=int(fields["beta5"]) if "beta5" in fields else None,
            faces=fields["triangles"],
            boundary=fields.get("boundary"),
            quarantine=fields.get("quarantine"),
        )
    return out


@lru_cache(maxsize=1)
def _entries() -> dict[str, CatalogEntry]:
    text = resources.files("elliptri").joinpath("data/catalog.txt").read_text()
    return _parse_data(text)


@lru_cache(maxsize=None)
def _build(eid: str) -> ClosedTriangulation | Patch:
    return parse_face_list(get(eid).text())


def get(eid: str) -> CatalogEntry:
    """Look up an entry by ``table/signature`` or by its signature alone."""
    entries = _entries()
    if eid in entries:
        return entries[eid]
    matches = [e for e in entries.values() if e.id.split("/", 1)[1] == eid]
    if len(matches) == 1:
        return matches[0]
    raise UnknownEntry(f"no catalog entry {eid!r}")


def find(signature: str) -> CatalogEntry | None:
    try:
        return get(signature)
    except UnknownEntry:
        return None


def all_entries(type: tuple[int, int, int] | None = None, b: int | None = None,
                table: str | None = None, kind: str | None = None,
                include_quarantined: bool = False) -> list[CatalogEntry]:
    """Filtered entries; rows that fail validation in the source are skipped by default."""
    out: Iterable[CatalogEntry] = _entries().values()
    if not include_quarantined:
        out = [e for e in out if e.quarantine is None]
    if type is not None:
        out = [e for e in out if e.type == tuple(type)]
    if b is not None:
        out = [e for e in out if e.b == b]
    if table is not None:
        out = [e for e in out if e.table == table]
    if kind == "patch":
        out = [e for e in out if e.is_patch]
    elif kind == "closed":
        out = [e for e in out if not e.is_patch]
    return list(out)


def patch(signature: str) -> Patch:
    """Catalog patch by its notation, e.g. ``"(1,1,1,2)_4"``."""
    p = get(signature).build()
    assert isinstance(p, Patch)
    return p


def closed(signature: str) -> ClosedTriangulation:
    t = get(signature).build()
    assert isinstance(t, ClosedTriangulation)
    return t
