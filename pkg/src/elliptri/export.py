"""Face-list, JSON and OFF output."""

from __future__ import annotations

import json
import math

import numpy as np

from .analysis import classify, parameters
from .core import ClosedTriangulation, Patch, PathPatch, serialize
from .errors import NotElliptic, UnsupportedFormat

FORMATS = ("facelist", "json", "off")


def to_dict(obj: ClosedTriangulation | Patch | PathPatch) -> dict:
    """Machine-readable mirror of the face-list fields plus the signature."""
    if isinstance(obj, PathPatch):
        sig = classify(obj)
        return {"kind": "path", "path": list(obj.path), "signature": sig.as_dict()}
    out: dict = {
        "kind": obj.kind,
        "triangles": [list(t) for t in sorted(tuple(sorted(t)) for t in obj.triangles)],
    }
    if isinstance(obj, Patch):
        out["boundary"] = list(obj.boundary)
    pv = parameters(obj)
    out["f1"], out["f2"], out["f3"] = pv.f1, pv.f2, pv.f3
    out["alpha"] = {str(d): n for d, n in pv.alpha.items()}
    try:
        out["signature"] = classify(obj).as_dict()
    except NotElliptic as exc:
        out["signature"] = None
        out["not_elliptic"] = list(exc.vertices)
    return out


def tutte_layout(obj: ClosedTriangulation | Patch) -> dict[int, tuple[float, float, float]]:
    """Barycentric placement with a fixed outer cycle on the unit circle.

    A sphere uses its first triangle as the outer face.  The planar layout is
    lifted onto the unit sphere by inverse stereographic projection; patches
    stay in the plane.
    """
    if isinstance(obj, Patch):
        outer = list(obj.boundary)
    else:
        outer = list(obj.triangles[0])
    verts = list(obj.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    pos = np.zeros((n, 2))
    fixed = set(outer)
    for i, v in enumerate(outer):
        ang = 2 * math.pi * i / len(outer)
        pos[idx[v]] = (math.cos(ang), math.sin(ang))
    free = [v for v in verts if v not in fixed]
    if free:
        fidx = {v: i for i, v in enumerate(free)}
        A = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for v in free:
            i = fidx[v]
            nb = obj.neighbors(v)
            A[i, i] = len(nb)
            for u in nb:
                if u in fixed:
                    rhs[i] += pos[idx[u]]
                else:
                    A[i, fidx[u]] -= 1
        sol = np.linalg.solve(A, rhs)
        for v in free:
            pos[idx[v]] = sol[fidx[v]]
    out = {}
    for v in verts:
        x, y = pos[idx[v]]
        if isinstance(obj, Patch):
            out[v] = (float(x), float(y), 0.0)
        else:
            # scale so the outer face sits on the far cap
            x, y = 2 * x, 2 * y
            r2 = x * x + y * y
            out[v] = (2 * x / (1 + r2), 2 * y / (1 + r2), (r2 - 1) / (1 + r2))
    return out


def to_off(obj: ClosedTriangulation | Patch) -> str:
    pos = tutte_layout(obj)
    verts = list(obj.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    lines = ["OFF", f"{len(verts)} {obj.f3} {obj.f2}"]
    lines += [f"{x:.6f} {y:.6f} {z:.6f}" for x, y, z in (pos[v] for v in verts)]
    lines += [f"3 {idx[a]} {idx[b]} {idx[c]}" for a, b, c in obj.triangles]
    return "\n".join(lines) + "\n"


def export(obj: ClosedTriangulation | Patch | PathPatch, fmt: str = "facelist") -> str:
    fmt = fmt.lower()
    if fmt == "facelist":
        return serialize(obj)
    if fmt == "json":
        return json.dumps(to_dict(obj), indent=2, sort_keys=True) + "\n"
    if fmt == "off":
        if isinstance(obj, PathPatch):
            raise UnsupportedFormat("a path patch has no faces to write as OFF")
        return to_off(obj)
    raise UnsupportedFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
