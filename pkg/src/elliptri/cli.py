"""Command-line front end.

Exit codes: 0 success, 2 validation failure, 3 domain error, 4 the query is
open or could not be decided.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, formulas
from .analysis import classify, interior_distance, parameters
from .atlas import atlas, check_existence, compare_with_published, format_atlas
from .core import ClosedTriangulation, Patch, PathPatch, parse_cycle, parse_face_list, validate
from .enumeration import enumerate_closed, enumerate_patches
from .errors import DomainError, ElliptriError, KindMismatch, ParameterDomainError, UnknownEntry
from .export import FORMATS, export
from .patches import (add_belt, build_030, build_200, cut_corner, family_patch, generic_enlarge,
                      peel_belt, tessellation, truncate_type)
from .rewrites import (KINDS, RewriteSite, apply_rewrite_ex, connected_sum, edge_fullering,
                       face_fullering, find_sites, glue_method, glue_strip)

EXIT_OK, EXIT_INVALID, EXIT_DOMAIN, EXIT_OPEN = 0, 2, 3, 4


def _label(text: str) -> int:
    """A point label: a decimal id or a single character as used in face lists."""
    if text.isdigit():
        return int(text)
    try:
        (v,) = parse_cycle(text)
    except (ElliptriError, ValueError):
        raise argparse.ArgumentTypeError(f"bad point label {text!r}") from None
    return v


def _ints(text: str) -> list[int]:
    try:
        return [_label(x) for x in text.replace(" ", "").split(",") if x]
    except argparse.ArgumentTypeError as exc:
        raise ParameterDomainError(str(exc)) from None


def _read_text(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    p = Path(src)
    if p.exists():
        return p.read_text()
    try:
        return catalog.get(src).text()
    except UnknownEntry:
        raise UnknownEntry(f"{src!r} is neither a file nor a catalog entry") from None


def load(src: str):
    """An object from a face-list file, ``-`` for stdin, or a catalog id."""
    return parse_face_list(_read_text(src))


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _emit_object(args, obj, extra: dict | None = None) -> None:
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        print(export(obj, "json"), end="")
    else:
        sig = _sig_text(obj)
        if extra:
            sig += "  " + " ".join(f"{k}={v}" for k, v in extra.items())
        print(f"# signature: {sig}")
        print(export(obj, "facelist"), end="")


def _sig_text(obj) -> str:
    try:
        return str(classify(obj))
    except DomainError as exc:
        return f"not elliptic ({exc})"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    report = validate(_read_text(args.src))
    lines = [f"{'ok' if c.passed else 'FAIL'} {c.name} {c.detail}".rstrip() for c in report.checks]
    _emit(args, report.as_dict(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_analyze(args) -> int:
    obj = load(args.src)
    pv = parameters(obj)
    sig = classify(obj)
    payload = {"signature": sig.as_dict(), "alpha": {str(d): n for d, n in pv.alpha.items()},
               "f1": pv.f1, "f2": pv.f2, "f3": pv.f3, "euler": pv.euler}
    text = [str(sig), f"f1={pv.f1} f2={pv.f2} f3={pv.f3} euler={pv.euler}"]
    if args.distance is not None:
        if not isinstance(obj, Patch):
            raise KindMismatch("distances are defined for patches only")
        d, approx = interior_distance(obj, args.distance, with_flag=True)
        payload["distance"] = {"vertex": args.distance, "k": d, "approximate": approx}
        text.append(f"distance of {args.distance}: {d}{' (approximate)' if approx else ''}")
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_build(args) -> int:
    if args.what == "p030":
        obj = build_030(args.h, args.k, args.l)
    elif args.what == "p200":
        obj = build_200(args.k, args.r)
    elif args.what == "tess":
        obj = tessellation(args.h)
    elif args.what == "trunc":
        obj = truncate_type(args.type, *_ints(args.params))
    elif args.what == "family":
        obj = family_patch(args.name, args.k, args.m)
    else:
        p = load(args.src)
        obj = generic_enlarge(p, use_b4=args.b4, use_b5=args.b5)
    _emit_object(args, obj)
    return EXIT_OK


def cmd_belt(args) -> int:
    p = load(args.src)
    out = add_belt(p, args.m) if args.action == "add" else peel_belt(p)
    if not isinstance(out, (Patch, PathPatch)):
        _emit(args, {"residue": out.kind, "vertices": list(out.vertices)},
              f"residue {out.kind}: {' '.join(map(str, out.vertices))}")
        return EXIT_OK
    _emit_object(args, out)
    return EXIT_OK


def cmd_corner(args) -> int:
    _emit_object(args, cut_corner(load(args.src), args.at))
    return EXIT_OK


def cmd_formula(args) -> int:
    try:
        return _formula(args)
    except (KeyError, TypeError) as exc:
        raise ParameterDomainError(f"formula {args.name}: missing or unexpected parameter {exc}") from None


def _formula(args) -> int:
    params = {}
    for item in (args.params or "").split(","):
        if item.strip():
            k, _, v = item.partition("=")
            params[k.strip()] = int(v)
    name = args.name
    if name == "N_030":
        n = formulas.N_030(**params)
        payload = {"N": n}
    elif name == "N_type":
        t = params.pop("t")
        res = formulas.N_type(t, consistent=args.consistent, **params)
        payload = {"N": res.N, "derived": res.derived, "conditions": res.conditions}
    elif name == "family":
        fam = args.family
        sig = formulas.family_signature(fam, params["k"], params.get("m", 0))
        payload = {"signature": list(sig), "notation": f"({sig[0]},{sig[1]},{sig[2]},{sig[3]})_{sig[4]}"}
    elif name == "p200":
        payload = {"N": formulas.build_200_N(params["k"], params["r"]), "b": 2 * params["k"]}
    else:
        raise DomainError(f"unknown formula {name!r}")
    _emit(args, payload, " ".join(f"{k}={v}" for k, v in payload.items()))
    return EXIT_OK


def cmd_rewrite(args) -> int:
    t = load(args.src)
    if not isinstance(t, ClosedTriangulation):
        raise KindMismatch("rewrites act on closed triangulations")
    sites = find_sites(t, args.kind)
    if args.list:
        _emit(args, {"sites": [s.as_dict() for s in sites]},
              "\n".join(f"{s.kind}[{s.stage}] {' '.join(map(str, s.vertices))}" for s in sites)
              or "no sites")
        return EXIT_OK
    if args.site:
        want = tuple(_ints(args.site))
        chosen = [s for s in sites if s.vertices == want or set(s.vertices) == set(want)]
        if not chosen:
            raise DomainError(f"{want} is not a {args.kind} site")
        site: RewriteSite = chosen[0]
    else:
        if not sites:
            raise DomainError(f"no {args.kind} site")
        site = sites[0]
    res = apply_rewrite_ex(t, site)
    _emit_object(args, res.triangulation, {"delta": ",".join(map(str, res.delta))})
    return EXIT_OK


def cmd_fuller(args) -> int:
    obj = load(args.src)
    if args.mode == "face":
        if not isinstance(obj, ClosedTriangulation):
            raise KindMismatch("face-fullering acts on closed triangulations")
        out = face_fullering(obj)
    else:
        out = edge_fullering(obj)
    _emit_object(args, out)
    return EXIT_OK


def cmd_glue(args) -> int:
    p1, p2 = load(args.p1), load(args.p2)
    al = None
    if args.alignment:
        parts = _ints(args.alignment)
        al = (parts[0], bool(parts[1]) if len(parts) > 1 else False)
    if args.method == "strip":
        res = glue_strip(p1, p2, args.belts, al)
        if res.triangulation is None or not res.elliptic:
            print(res.diagnostic, file=sys.stderr)
            return EXIT_DOMAIN if res.triangulation is not None else EXIT_INVALID
    else:
        res = glue_method(p1, p2, args.method, al)
    _emit_object(args, res.triangulation, {"alignment": ",".join(map(str, res.alignment))})
    return EXIT_OK


def cmd_consum(args) -> int:
    t1, t2 = load(args.t1), load(args.t2)
    out = connected_sum(t1, _ints(args.tri1), t2, _ints(args.tri2))
    _emit_object(args, out)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "show":
        e = catalog.get(args.id)
        payload = {"id": e.id, "signature": list(e.signature), "b": e.b, "f3": e.f3,
                   "beta4": e.beta4, "beta5": e.beta5, "quarantine": e.quarantine}
        if args.format == "json":
            payload["object"] = json.loads(export(e.build(), "json")) if not e.quarantine else None
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            if e.quarantine:
                print(f"# quarantine: {e.quarantine}")
            print(e.text(), end="")
        return EXIT_OK
    ty = tuple(_ints(args.type)) if args.type else None
    entries = catalog.all_entries(type=ty, b=args.b, table=args.table,
                                  include_quarantined=args.all)
    rows = [{"id": e.id, "f3": e.f3, "quarantine": e.quarantine} for e in entries]
    _emit(args, {"entries": rows},
          "\n".join(e.id + (f"  [quarantined: {e.quarantine}]" if e.quarantine else "")
                    for e in entries))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.what == "closed":
        res = enumerate_closed(args.n, elliptic_only=args.elliptic, workers=args.workers)
    else:
        ty = tuple(_ints(args.type)) if args.type else None
        res = enumerate_patches(args.b, ty, max_f1=args.max_f1)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, obj in enumerate(res.objects):
            (out / f"{res.kind}-{res.size}-{i:04d}.tri").write_text(export(obj, "facelist"))
    _emit(args, res.as_dict(),
          f"{len(res)} {res.kind} object(s) of size {res.size}\n"
          + "\n".join(f"  {k}: {v}" for k, v in res.tally.items()))
    return EXIT_OK


def cmd_exists(args) -> int:
    a3, a4, a5 = _ints(args.type)
    st = check_existence(a3, a4, a5, args.n6, enum_cap=args.enum_cap)
    payload = st.as_dict()
    if st.witness is not None:
        payload["witness"] = export(st.witness, "facelist")
    text = f"({a3},{a4},{a5},{args.n6}): {st.label}  {st.detail}"
    if st.witness is not None and args.format != "json":
        text += "\n" + export(st.witness, "facelist").rstrip()
    _emit(args, payload, text)
    return EXIT_OPEN if st.state == "unknown" else EXIT_OK


def cmd_atlas(args) -> int:
    rows = atlas(args.max_n6, args.enum_cap)
    diffs = compare_with_published(rows)
    if args.witness_dir:
        out = Path(args.witness_dir)
        out.mkdir(parents=True, exist_ok=True)
        for row in rows:
            for n, st in row.cells:
                if st.witness is not None:
                    a3, a4, a5 = row.type
                    (out / f"{a3}-{a4}-{a5}-{n}.tri").write_text(
                        f"# detail: {st.detail}\n" + export(st.witness, "facelist"))
    payload = {"rows": [r.as_dict() for r in rows], "differences": diffs}
    text = format_atlas(rows) + "\n\nlegend: + exists, - does not exist, ? unknown"
    if diffs:
        text += "\n\ndiffers from the published table:\n" + "\n".join(
            f"  {d['cell']}: computed {d['computed']}, published {d['published']}" for d in diffs)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_export(args) -> int:
    obj = load(args.src)
    text = export(obj, args.to)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="elliptri", description="Elliptic triangulations of the sphere and of discs.",
                                 epilog="exit codes: 0 ok, 2 invalid input, 3 domain error, 4 undecided")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str, src: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "json"), default="text")
        if src:
            p.add_argument("src", help="face-list file, '-' for stdin, or a catalog id")
        return p

    add("validate", cmd_validate, "structural checks of a face list", src=True)
    p = add("analyze", cmd_analyze, "degrees, type and signature", src=True)
    p.add_argument("--distance", type=_label, help="interior point whose distance to report")

    p = add("build", cmd_build, "construct a patch")
    bsub = p.add_subparsers(dest="what", required=True)
    b = bsub.add_parser("p030")
    b.add_argument("--h", type=int, required=True)
    b.add_argument("--k", type=int, default=0)
    b.add_argument("--l", type=int, default=0)
    b = bsub.add_parser("p200")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--r", type=int, default=0)
    b = bsub.add_parser("tess")
    b.add_argument("--h", type=int, required=True)
    b = bsub.add_parser("trunc")
    b.add_argument("--type", type=int, required=True)
    b.add_argument("--params", required=True, help="comma separated, see truncate_type")
    b = bsub.add_parser("family")
    b.add_argument("--name", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int, default=0)
    b = bsub.add_parser("enlarge")
    b.add_argument("src")
    b.add_argument("--b4", type=int, default=0)
    b.add_argument("--b5", type=int, default=0)
    for b in bsub.choices.values():
        b.add_argument("--format", choices=("text", "json"), default="text")

    p = add("belt", cmd_belt, "add or peel belts", src=False)
    p.add_argument("action", choices=("add", "peel"))
    p.add_argument("src")
    p.add_argument("--m", type=int, default=1)

    p = add("corner", cmd_corner, "cut a degree-4 boundary corner", src=False)
    p.add_argument("action", choices=("cut",))
    p.add_argument("src")
    p.add_argument("--at", type=_label, required=True)

    p = add("formula", cmd_formula, "evaluate a closed-form count")
    p.add_argument("--name", required=True, choices=("N_030", "N_type", "family", "p200"))
    p.add_argument("--params", default="", help="e.g. h=3,k=1,l=0 or t=1,h=4,c=2")
    p.add_argument("--family", default="A")
    p.add_argument("--consistent", action="store_true",
                   help="type 3 with C(k+1,2) in place of C(k+l,2)")

    p = add("rewrite", cmd_rewrite, "find or apply a local rewrite", src=True)
    p.add_argument("--kind", required=True, choices=sorted(KINDS))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--auto", action="store_true", help="apply at the first site (default)")
    g.add_argument("--site", help="comma separated vertices of the site")
    g.add_argument("--list", action="store_true", help="only list the sites")

    p = add("fuller", cmd_fuller, "face- or edge-fullering", src=True)
    p.add_argument("--mode", choices=("face", "edge"), required=True)

    p = add("glue", cmd_glue, "glue two patches into a sphere")
    p.add_argument("p1")
    p.add_argument("p2")
    p.add_argument("--method", choices=("strip", "A", "B", "C"), default="strip")
    p.add_argument("--belts", type=int, default=0)
    p.add_argument("--alignment", help="offset[,reflect]")

    p = add("consum", cmd_consum, "connected sum of two spheres")
    p.add_argument("--t1", required=True)
    p.add_argument("--tri1", required=True)
    p.add_argument("--t2", required=True)
    p.add_argument("--tri2", required=True)

    p = add("catalog", cmd_catalog, "list or show catalog entries")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("id", nargs="?")
    p.add_argument("--type")
    p.add_argument("--b", type=int)
    p.add_argument("--table")
    p.add_argument("--all", action="store_true", help="include quarantined rows")

    p = add("enumerate", cmd_enumerate, "exhaustive generation")
    p.add_argument("what", choices=("closed", "patches"))
    p.add_argument("--n", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--elliptic", action="store_true")
    p.add_argument("--type")
    p.add_argument("--max-f1", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="directory for the face-list archive")

    p = add("exists", cmd_exists, "decide one cell of the existence table")
    p.add_argument("--type", required=True)
    p.add_argument("--n6", type=int, required=True)
    p.add_argument("--enum-cap", type=int, default=9)

    p = add("atlas", cmd_atlas, "reproduce the existence table")
    p.add_argument("--max-n6", type=int, default=20)
    p.add_argument("--enum-cap", type=int, default=9)
    p.add_argument("--witness-dir")

    p = add("export", cmd_export, "write an object in another format", src=True)
    p.add_argument("--to", choices=FORMATS, default="facelist")
    p.add_argument("--out")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "enumerate":
        if args.what == "closed" and args.n is None:
            ap.error("enumerate closed needs --n")
        if args.what == "patches" and args.b is None:
            ap.error("enumerate patches needs --b")
    if args.command == "catalog" and args.action == "show" and not args.id:
        ap.error("catalog show needs an id")
    try:
        return args.fn(args)
    except ElliptriError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
