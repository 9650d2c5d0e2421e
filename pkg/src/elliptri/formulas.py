"""Closed-form counts of degree-6 points with their domain checks.

All arithmetic is on Python integers; C(n, 2) is n(n-1)/2 and vanishes for
n < 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormulaDomainError


def C2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def _need(cond: bool, formula: str, text: str) -> None:
    if not cond:
        raise FormulaDomainError(formula, text)


# ---------------------------------------------------------------------------
# type (0,3,0)
# ---------------------------------------------------------------------------

def N_030(h: int, k: int = 0, l: int = 0) -> int:
    """N for a (0,3,0) patch with boundary 3h.

    ``k = l = 0``: three boundary corners.  ``l = 0 < k``: the [0,0,k]
    patch with two boundary corners.  ``0 < l <= k``: the [0,l,k] patch
    with one boundary corner.
    """
    _need(h >= 1, "N_030", "h >= 1")
    if k == 0 and l == 0:
        return C2(h + 2) - 3
    if l == 0:
        _need(0 < k < h, "N_030[0,0,k]", "0 < k < h")
        return C2(h + k + 2) - C2(2 * k + 1) + C2(k) - 3
    _need(0 < l <= k < h, "N_030[0,l,k]", "0 < l <= k < h")
    return C2(h + k + l + 2) - 3 * C2(k + 1) - 3 * C2(l + 1) - 3


def beta4_030(k: int, l: int) -> int:
    if k == 0 and l == 0:
        return 3
    return 2 if l == 0 else 1


def boundary_parts_030(h: int, k: int) -> tuple[int, int]:
    """Lengths of the two boundary arcs between the corners of [0,0,k]."""
    l = h - k
    return (h + l, 2 * h - l)


# ---------------------------------------------------------------------------
# truncated patches, types 1..7
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TypeResult:
    N: int
    derived: dict
    conditions: dict


def _div3(x: int, name: str, formula: str) -> int:
    _need(x % 3 == 0, formula, f"{name} = {x} is a multiple of 3")
    return x // 3


def N_type(kind: int, /, consistent: bool = False, **p: int) -> TypeResult:
    """Evaluate the count for truncated-patch type ``kind`` from boundary lengths.

    Parameters by type (all boundary edge counts):

    1. ``h, c`` and optionally ``s, t``: corners 4,4,5,5.
    2. ``s, t, c``: corners 4,5,5.
    3. ``s, c, k, l``: corners 5,5; ``k, l`` locate the two hidden corners.
    4. ``r, s, t, c1, c2``: corners 4,5,5,5,5.
    5. ``s, t, c1, c2``: corners 5,5,5,5.
    6. ``r, s, t, c1, c2, c3``: six corners of degree 5.
    7. ``u, v`` and optionally ``s, t``: corners 4,5,4,5.

    Type 3 is evaluated exactly as printed, with C(k+l, 2); pass
    ``consistent=True`` for the variant with C(k+1, 2) that matches the
    [0,l,k] count.
    """
    t = kind
    name = f"N_type{t}"
    cond: dict = {}
    if t == 1:
        h, c = p["h"], p["c"]
        s = p.get("s", h - c + 1)
        tt = p.get("t", s)
        _need(s == tt, name, "s = t")
        _need(c - 1 + s == h, name, "c - 1 + s = h")
        _need(h >= c, name, "h >= c")
        cond = {"s=t": True, "c-1+s=h": True, "h>=c": True}
        return TypeResult(C2(h + 2) - C2(c) - 4, {"h": h, "s": s}, cond)
    if t == 2:
        s, tt, c = p["s"], p["t"], p["c"]
        h = _div3(s + tt + 2 * (c - 1), "s+t+2(c-1)", name)
        k = _div3(2 * s - tt + (c - 1), "2s-t+(c-1)", name)
        l = _div3(2 * tt - s + (c - 1), "2t-s+(c-1)", name)
        cond = {"multiples of 3": True}
        N = C2(h + k + 2) - C2(2 * k + 1) + C2(k) - C2(c) - 4
        return TypeResult(N, {"h": h, "k": k, "l": l}, cond)
    if t == 3:
        s, c, k, l = p["s"], p["c"], p["k"], p["l"]
        h = _div3(s + 2 * (c - 1), "s+2(c-1)", name)
        _div3(2 * s + (c - 1), "2s+(c-1)", name)
        _need(0 < l <= k < h, name, "0 < l <= k < h")
        cond = {"multiples of 3": True}
        mid = C2(k + 1) if consistent else C2(k + l)
        N = C2(h + k + l + 2) - 3 * mid - 3 * C2(l + 1) - C2(c) - 4
        return TypeResult(N, {"h": h, "k": k, "l": l}, cond)
    if t == 4:
        r, s, tt, c1, c2 = p["r"], p["s"], p["t"], p["c1"], p["c2"]
        _div3(r + s + tt + 2 * (c1 - 1) + 2 * (c2 - 1), "r+s+t+2(c1-1)+2(c2-1)", name)
        h = s + c1 - 1
        _need(h == tt + c2 - 1 == r + c1 + c2 - 2, name, "s+c1-1 = t+c2-1 = r+c1+c2-2")
        cond = {"multiple of 3": True, "side equalities": True}
        return TypeResult(C2(h + 2) - C2(c1) - C2(c2) - 5, {"h": h}, cond)
    if t == 5:
        s, tt, c1, c2 = p["s"], p["t"], p["c1"], p["c2"]
        e = (c1 - 1) + (c2 - 1)
        h = _div3(s + tt + 2 * e, "s+t+2(c1-1)+2(c2-1)", name)
        k = _div3(2 * s - tt + e, "2s-t+(c1-1)+(c2-1)", name)
        l = _div3(2 * tt - s + e, "2t-s+(c1-1)+(c2-1)", name)
        cond = {"multiples of 3": True}
        N = C2(h + k + 2) - C2(2 * k + 1) + C2(k) - C2(c1) - C2(c2) - 5
        return TypeResult(N, {"h": h, "k": k, "l": l}, cond)
    if t == 6:
        r, s, tt = p["r"], p["s"], p["t"]
        c1, c2, c3 = p["c1"], p["c2"], p["c3"]
        _div3(r + s + tt + 2 * (c1 + c2 + c3 - 3), "r+s+t+2(c1+c2+c3-3)", name)
        h = r + c1 + c3 - 2
        _need(h == s + c1 + c2 - 2 == tt + c2 + c3 - 2, name,
              "r+c1+c3-2 = s+c1+c2-2 = t+c2+c3-2")
        cond = {"multiple of 3": True, "side equalities": True}
        return TypeResult(C2(h + 2) - C2(c1) - C2(c2) - C2(c3) - 6, {"h": h}, cond)
    if t == 7:
        u, v = p["u"], p["v"]
        s = p.get("s", v)
        tt = p.get("t", u)
        _need(u >= 1 and v >= 1, name, "u, v >= 1")
        _need((u + v + s + tt) % 2 == 0, name, "u+v+s+t is even")
        _need(u == tt and v == s, name, "u = t, v = s")
        cond = {"even boundary": True, "u=t, v=s": True}
        return TypeResult((u + 1) * (v + 1) - 4, {"b": u + v + s + tt}, cond)
    raise FormulaDomainError(name, "type in 1..7")


# corner degrees in cyclic order and the names of the strings that follow them
_PROFILES = {
    1: ((4, 4, 5, 5), ("h", "t", "c-1", "s")),
    2: ((4, 5, 5), ("t", "c-1", "s")),
    3: ((5, 5), ("c-1", "s")),
    4: ((4, 5, 5, 5, 5), ("t", "c2-1", "r", "c1-1", "s")),
    5: ((5, 5, 5, 5), ("s", "c2-1", "t", "c1-1")),
    6: ((5, 5, 5, 5, 5, 5), ("r", "c1-1", "s", "c2-1", "t", "c3-1")),
    7: ((4, 5, 4, 5), ("v", "u", "s", "t")),
}


def boundary_parameters(t: int, profile) -> list[dict]:
    """Every reading of a corner profile as the named strings of type ``t``.

    ``profile`` is the cyclic list of ``(degree, edges to next corner)``.
    Both traversal directions and all rotations matching the corner
    pattern are returned, without duplicates.
    """
    degs, names = _PROFILES[t]
    prof = [(d, n) for d, n in profile]
    m = len(prof)
    if m != len(degs):
        return []
    rev = [(prof[(-i) % m][0], prof[(-i - 1) % m][1]) for i in range(m)]
    out: list[dict] = []
    for seq in (prof, rev):
        for r in range(m):
            rot = seq[r:] + seq[:r]
            if tuple(d for d, _ in rot) != degs:
                continue
            vals: dict = {}
            for name, (_, n) in zip(names, rot):
                key, _, minus = name.partition("-")
                vals[key] = n + (1 if minus else 0)
            if vals not in out:
                out.append(vals)
    return out


# ---------------------------------------------------------------------------
# (1,1,1) families
# ---------------------------------------------------------------------------

# family: (c, s, minimum k); N = C(k+1, 2) - c + (2k - s) m, b = k + 2m
STRIP_FAMILIES = {
    "B": (10, 7, 5),
    "C": (20, 11, 7),
    "D": (4, 3, 3),
    "E": (40, 15, 10),
    "F": (124, 27, 18),
    "G": (76, 21, 14),
}
# family: (c, minimum k); N = C(k+1, 2) - c, b = k
PLAIN_FAMILIES = {
    "H": (4, 3),
    "I": (8, 4),
    "J": (10, 5),
    "K": (16, 6),
    "L": (20, 7),
    "M": (26, 8),
    "N": (34, 9),
    "O": (40, 10),
    "P": (44, 10),
}
FAMILIES = ("A",) + tuple(STRIP_FAMILIES) + tuple(PLAIN_FAMILIES)


def family_signature(family: str, k: int, m: int = 0) -> tuple[int, int, int, int, int]:
    """Predicted ``(a3, a4, a5, N, b)`` for a member of a (1,1,1) family."""
    f = family.upper()
    name = f"family {f}"
    _need(m >= 0, name, "m >= 0")
    if f == "A":
        _need(k >= 3 and k % 2 == 1, name, "k >= 3 odd")
        N = 2 * (((k + 1) // 2) ** 2 - 2) + k * m
        return (1, 1, 1, N, 2 * k - 1 + 2 * m)
    if f in STRIP_FAMILIES:
        c, s, kmin = STRIP_FAMILIES[f]
        _need(k >= kmin, name, f"k >= {kmin}")
        return (1, 1, 1, C2(k + 1) - c + (2 * k - s) * m, k + 2 * m)
    if f in PLAIN_FAMILIES:
        c, kmin = PLAIN_FAMILIES[f]
        _need(k >= kmin, name, f"k >= {kmin}")
        _need(m == 0, name, "m = 0 (single-parameter family)")
        return (1, 1, 1, C2(k + 1) - c, k)
    raise FormulaDomainError("family_signature", f"family in A..P, got {family!r}")


# ---------------------------------------------------------------------------
# sphere-level counts used by the constructions
# ---------------------------------------------------------------------------

def glue_strip_N(n1: int, n2: int, b: int, m: int) -> int:
    return n1 + n2 + b * m


def glue_method_N(method: str, n1: int, n2: int, b: int) -> int:
    if method.upper() == "A":
        return n1 + n2 + b + 2
    return n1 + n2 + 2


def build_200_N(k: int, r: int) -> int:
    _need(k >= 2 and r >= 0, "build_200", "k >= 2, r >= 0")
    return 2 * k * r + k - 1


FORMULAS = {
    "N_030": N_030,
    "N_type": N_type,
    "family": family_signature,
    "p200": build_200_N,
}
