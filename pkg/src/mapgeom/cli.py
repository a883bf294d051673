"""``mapgeom`` command line.

Exit status: 0 on success, 1 when the input is well formed but the
analysis fails (validation, scale bound, domain rejection), 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import combinatorial_map as cm
from . import geometry as geo
from . import smanifold, surface_word
from .embedding import count_nonisomorphic_maps, embedding_count, genus_polynomial
from .errors import (
    GeometryError,
    GraphError,
    MapGeomError,
    NotSManifoldError,
    ParseError,
    ScaleBoundError,
    StructuralError,
    WordError,
)
from .graph import Graph, betti

EXIT_OK, EXIT_DOMAIN, EXIT_SYNTAX = 0, 1, 2


class DomainFailure(Exception):
    """Well-formed input that the analysis rejects; carries a payload."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _digest(*chunks: bytes) -> str:
    h = hashlib.sha256()
    for c in chunks:
        h.update(c)
        h.update(b"\0")
    return h.hexdigest()


def _inputs(args) -> list[bytes]:
    """Raw bytes that determine a report: file contents and literal arguments."""
    chunks = []
    for name in ("mapfile", "graphfile", "geomfile"):
        path = getattr(args, name, None)
        if path:
            chunks.append(_read(path))
    for path in getattr(args, "geomfiles", None) or ():
        chunks.append(_read(path))
    if getattr(args, "word", None) is not None:
        chunks.append(args.word.encode())
    if getattr(args, "action", None) == "angle-sum":
        chunks.append(json.dumps([args.sides, args.point, args.vertex]).encode())
    return chunks


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 1, 1) from None


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args, warnings):
    data = _read(args.mapfile)
    M = cm.parse_map(data.decode())
    report = cm.validate(M)
    result = {"validation": report.as_dict()}
    if not report.ok:
        raise DomainFailure(f"validation failed: {report.failures()[0].name}: {report.failures()[0].witness}", result)
    c = cm.census(M)
    D = cm.dual(M)
    dc = cm.census(D)
    result.update(
        census=c.as_dict(),
        vertices=[cm.format_vertex(M, v) for v in cm.vertices(M)],
        faces=[cm.format_vertex(M, f) for f in cm.faces(M)],
        dual={
            "vertices": dc.nu,
            "edges": dc.eps,
            "faces": dc.phi,
            "euler_characteristic": dc.chi,
            "vertex_valencies": list(dc.vertex_valencies),
        },
        automorphisms=cm.automorphism_count(M),
    )
    return result


def cmd_enumerate(args, warnings):
    data = _read(args.graphfile)
    G = Graph.parse(data.decode())
    if not G.is_connected():
        raise GraphError("graph is disconnected")
    result = {
        "vertices": G.order,
        "edges": G.size,
        "betti": betti(G),
        "embeddings": {
            "orientable": embedding_count(G, False),
            "locally_orientable": embedding_count(G, True),
        },
    }
    if args.genus_polynomial:
        gp = genus_polynomial(G)
        result["genus_polynomial"] = {"text": str(gp), "coefficients": list(gp.coefficients)}
    if args.nonisomorphic:
        counts = {}
        modes = [("orientable", True)] + ([("locally_orientable", False)] if args.locally_orientable else [])
        for name, only in modes:
            cc = count_nonisomorphic_maps(G, only)
            counts[name] = {"classes": cc.classes, "checksum": _num(cc.checksum), "raw": cc.raw}
        result["nonisomorphic"] = counts
    if args.count_geometries:
        n46 = geo.count_prop46(G)
        n47 = geo.count_prop47(G)
        if args.locally_orientable:
            b_o, b_n = geo.burnside_split(G)
            oracle = {"orientable": b_o, "nonorientable": b_n}
        else:
            oracle = {"orientable": geo.burnside_count(G, True)}
        result["geometries"] = {
            "formula_without_boundary": {"orientable": _num(n46[0]), "nonorientable": _num(n46[1])},
            "formula_one_boundary_face": {"orientable": _num(n47[0]), "nonorientable": _num(n47[1])},
            "burnside_orbits_without_boundary": oracle,
        }
        warnings.append("closed-form values and orbit counts are reported side by side and are not expected to agree")
    return result


def cmd_classify_word(args, warnings):
    w = surface_word.SurfaceWord.parse(args.word)
    cf = surface_word.canonical_form(w)
    result = {
        "word": str(w),
        "surface": str(cf.surface),
        "standard_word": str(cf.word),
        "euler_characteristic": cf.surface.chi,
        "orientable": cf.surface.orientable,
        "trace": [m.as_dict() for m in cf.trace],
    }
    return result


def _parse_point(text: str):
    rho, sep, q = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return int(rho), Fraction(q)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"point {text!r} is not RHO:P/Q", 1, 1) from None


def cmd_geometry(args, warnings):
    if args.action == "classify":
        data = _read(args.geomfile)
        g = geo.parse_geometry(data.decode())
        vs = cm.vertices(g.map)
        result = {
            "vertices": [
                {"vertex": f"v{u}", "valency": vs[u].valency, "mu": _num(g.mu[u]), "class": str(geo.classify_vertex(g, u))}
                for u in range(len(g.mu))
            ],
            "boundary": [f"f{f}" for f in sorted(g.boundary)],
        }
        return result
    if args.action == "angle-sum":
        points = [_parse_point(p) for p in args.point]
        if args.geomfile:
            g = geo.parse_geometry(_read(args.geomfile).decode())
            for tok in args.vertex:
                u = int(tok.lstrip("v")) if tok.lstrip("v").isdigit() else -1
                points.append((g.valency(u), g.mu[u]))
        elif args.vertex:
            raise ParseError("--vertex needs a geometry file", 1, 1)
        total = geo.polygon_angle_sum(args.sides, points)
        result = {
            "sides": args.sides,
            "points": [{"valency": r, "mu": _num(q), "class": str(geo.point_class(r, q))} for r, q in points],
            "angle_sum": f"{_num(total)} π",
            "angle_sum_over_pi": _num(total),
        }
        if args.sides == 3:
            result["compared_with_pi"] = str(geo.triangle_class_sum(points))
        return result
    datas = [_read(p) for p in args.geomfiles]
    gs = [geo.parse_geometry(d.decode()) for d in datas]
    verdicts = []
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            verdicts.append({"pair": [i, j], "equivalent": geo.equivalent(gs[i], gs[j])})
    if len(gs) == 1:
        verdicts.append({"pair": [0, 0], "equivalent": geo.equivalent(gs[0], gs[0])})
    return {"files": list(args.geomfiles), "verdicts": verdicts}


def cmd_smanifold(args, warnings):
    data = _read(args.mapfile)
    M = cm.parse_map(data.decode())
    report = cm.validate(M)
    if not report.ok:
        raise DomainFailure(f"validation failed: {report.failures()[0].name}", {"validation": report.as_dict()})
    check = smanifold.is_closed_triangular(M)
    if not check:
        raise DomainFailure(check.reason, {"triangular": False, "reason": check.reason})
    cls = smanifold.classify(M)
    result = cls.as_dict()
    result["euler_consistent"] = smanifold.check_euler(M)
    return result


# ---------------------------------------------------------------------------
# output


def _inline(v) -> str:
    if isinstance(v, dict):
        return " ".join(f"{k}={_inline(v[k])}" for k in sorted(v))
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return "-" if v is None else str(v)


def _render_human(value: dict, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k in sorted(value):
        v = value[k]
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{k}:")
            lines.extend(_render_human(v, indent + 1))
        elif isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v):
            lines.append(f"{pad}{k}:")
            lines.extend(f"{pad}  - {_inline(x)}" for x in v)
        else:
            lines.append(f"{pad}{k}: {_inline(v)}")
    return lines


def format_move(m: dict) -> str:
    if m["move"] == "relabel":
        return "relabel " + ", ".join(f"{old}->{new}" + ("'" if flip else "") for old, new, flip in m["mapping"])
    name = m["move"] + (f"({m['variant']})" if m.get("variant") else "")
    pos = ",".join(str(p) for p in m["positions"])
    extra = " backward" if m.get("direction") == "backward" else ""
    return f"{name} at {pos}{extra}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mapgeom", description="Combinatorial maps, surface words and map geometries.")
    p.add_argument("--json", action="store_true", help="emit a machine-readable JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="census, validation and dual of a map file")
    a.add_argument("mapfile")

    e = sub.add_parser("enumerate", help="embeddings of a graph file")
    e.add_argument("graphfile")
    e.add_argument("--genus-polynomial", action="store_true")
    e.add_argument("--count-geometries", action="store_true")
    e.add_argument("--nonisomorphic", action="store_true")
    e.add_argument("--locally-orientable", action="store_true")

    w = sub.add_parser("classify-word", help="standard surface of a polygon word")
    w.add_argument("word")
    w.add_argument("--trace", action="store_true", help="print the move trace")

    g = sub.add_parser("geometry", help="angle-factor geometries on maps")
    gsub = g.add_subparsers(dest="action", required=True)
    gc = gsub.add_parser("classify")
    gc.add_argument("geomfile")
    ga = gsub.add_parser("angle-sum")
    ga.add_argument("geomfile", nargs="?")
    ga.add_argument("--sides", type=int, required=True)
    ga.add_argument("--point", action="append", default=[], metavar="RHO:P/Q")
    ga.add_argument("--vertex", action="append", default=[], metavar="vN")
    ge = gsub.add_parser("equivalent")
    ge.add_argument("geomfiles", nargs="+")

    s = sub.add_parser("smanifold", help="s-manifold class of a triangular map")
    s.add_argument("mapfile")

    for sp in (a, e, w, g, s, gc, ga, ge):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "classify-word": cmd_classify_word,
    "geometry": cmd_geometry,
    "smanifold": cmd_smanifold,
}


def _emit(report: dict, as_json: bool, stream, trace: bool = False) -> None:
    if as_json:
        stream.write(json.dumps(report, sort_keys=True, ensure_ascii=False, indent=2) + "\n")
        return
    body = dict(report["result"] or {})
    if "trace" in body:
        moves = body.pop("trace")
        body["trace_length"] = len(moves)
        if trace:
            body["trace"] = [format_move(m) for m in moves]
    lines = [f"command: {' '.join(report['command'])}", f"input_digest: {report['input_digest']}"]
    lines.extend(_render_human(body))
    for msg in report["warnings"]:
        lines.append(f"warning: {msg}")
    if report.get("error"):
        lines.append(f"error: {report['error']['message']}")
    stream.write("\n".join(lines) + "\n")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SYNTAX if exc.code else EXIT_OK
    warnings = []
    report = {"command": argv, "input_digest": None, "result": None, "warnings": warnings}
    code = EXIT_OK
    try:
        report["input_digest"] = _digest(*_inputs(args))
        result = COMMANDS[args.command](args, warnings)
        report["result"] = {k: _jsonable(v) for k, v in result.items()}
    except (ParseError, WordError) as exc:
        code = EXIT_SYNTAX
        report["error"] = _error(exc, "syntax")
    except DomainFailure as exc:
        code = EXIT_DOMAIN
        report["result"] = exc.result
        report["error"] = {"kind": "domain", "message": str(exc)}
    except (GraphError, ScaleBoundError, StructuralError, NotSManifoldError, GeometryError, MapGeomError) as exc:
        code = EXIT_DOMAIN
        report["error"] = _error(exc, "domain")
    _emit(report, args.json, sys.stdout, getattr(args, "trace", False))
    if code != EXIT_OK and not args.json:
        sys.stderr.write(f"mapgeom: {report['error']['message']}\n")
    return code


def _error(exc: Exception, kind: str) -> dict:
    out = {"kind": kind, "message": str(exc)}
    if isinstance(exc, ParseError):
        out.update(line=exc.line, column=exc.column)
    return out


def _jsonable(v):
    if isinstance(v, Fraction):
        return _num(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


if __name__ == "__main__":
    sys.exit(main())
