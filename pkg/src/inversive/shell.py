"""Command-line interface and JSON serialization.

Configurations travel as single JSON documents; packings as JSON lines with
one header record followed by one row per line, so large generations can be
streamed.  Exact scalars serialize as fraction strings in lowest terms
(integers without the denominator), float scalars as JSON numbers.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import apollonian, forms, onedim, svg, transform
from .scalars import DEFAULT_TOL, EXACT, FLOAT, ExactnessError, sqrt_scalar


def scalar_to_json(x):
    if isinstance(x, float):
        return x
    return str(Fraction(x))


def scalar_from_json(v, mode):
    if mode == EXACT:
        if isinstance(v, float):
            raise ValueError(f"float entry {v!r} in an exact document")
        return Fraction(v)
    if isinstance(v, str):
        return float(Fraction(v))
    return float(v)


@dataclass(frozen=True)
class ConfigDocument:
    """Parsed configuration document plus its Gram-identity verdict."""

    geometry: str
    n: int
    mode: str
    rows: tuple
    config: forms.ConfigMatrix
    valid: bool
    residual: forms.Residual


def document_from_config(w):
    return {
        "geometry": w.geometry,
        "n": w.n,
        "mode": w.mode,
        "rows": [[scalar_to_json(x) for x in r.entries] for r in w.rows],
    }


def dumps_config(w):
    return json.dumps(document_from_config(w), separators=(",", ":")) + "\n"


def parse_document(text, tol=DEFAULT_TOL):
    """Parse a configuration document leniently; the valid flag records
    whether the Gram identity holds at the given tolerance."""
    raw = json.loads(text)
    try:
        geometry, n, mode = raw["geometry"], raw["n"], raw["mode"]
        rows = [tuple(scalar_from_json(v, mode) for v in row) for row in raw["rows"]]
    except KeyError as e:
        raise ValueError(f"configuration document is missing field {e}")
    w = forms.ConfigMatrix.from_rows(geometry, rows, mode=mode)
    if w.n != n:
        raise ValueError(f"declared n = {n} but rows have n = {w.n}")
    residual = forms.check_identity(
        w, forms.descartes_form(w.n, mode), forms.target_for(geometry, w.n, mode), tol
    )
    return ConfigDocument(
        geometry, w.n, mode, tuple(rows), w, residual.ok, residual
    )


def loads_config(text, strict=True, tol=DEFAULT_TOL):
    doc = parse_document(text, tol=tol)
    if strict and not doc.valid:
        raise ValueError(
            "configuration fails its Gram identity "
            f"(max residual {float(doc.residual.max_abs_entry_error):.3g})"
        )
    return doc.config


def dumps_packing(p):
    bend_col = forms.bend_column(p.geometry)
    head = {
        "kind": "packing",
        "geometry": p.geometry,
        "n": p.n,
        "mode": p.seed.mode,
        "bound": scalar_to_json(p.bound),
        "explored": p.explored,
        "depth": p.depth,
        "truncated": p.truncated,
        "seed": [[scalar_to_json(x) for x in r.entries] for r in p.seed.rows],
    }
    lines = [json.dumps(head, separators=(",", ":"))]
    for r in p.rows:
        rec = {
            "bend": scalar_to_json(r.entries[bend_col]),
            "row": [scalar_to_json(x) for x in r.entries],
        }
        lines.append(json.dumps(rec, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def loads_packing(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty packing stream")
    head = json.loads(lines[0])
    if head.get("kind") != "packing":
        raise ValueError("not a packing stream (missing packing header)")
    try:
        geometry, mode = head["geometry"], head["mode"]
        seed_rows = [
            tuple(scalar_from_json(v, mode) for v in row) for row in head["seed"]
        ]
        bound = scalar_from_json(head["bound"], mode)
        seed = forms.ConfigMatrix.from_rows(geometry, seed_rows, mode=mode)
        rows = []
        for ln in lines[1:]:
            rec = json.loads(ln)
            entries = tuple(scalar_from_json(v, mode) for v in rec["row"])
            rows.append(forms.CoordRow(geometry, entries))
        return apollonian.Packing(
            geometry=geometry,
            n=seed.n,
            seed=seed,
            rows=tuple(rows),
            bound=bound,
            configs=(),
            explored=head["explored"],
            depth=head["depth"],
            truncated=head["truncated"],
        )
    except KeyError as e:
        raise ValueError(f"packing stream is missing field {e}")


# ---------------------------------------------------------------------------
# bend completion

_CURVE = {forms.EUCLIDEAN: 0, forms.SPHERICAL: 1, forms.HYPERBOLIC: -1}


def complete_bend(geometry, values):
    """Both completions of n+1 bend values to a full Descartes bend vector,
    from the quadratic (n-1)x^2 - 2*s1*x + (n*s2 - s1^2 + 2*n*k) = 0 with
    k the geometry's curvature sign; ascending order."""
    n = len(values) - 1
    if n < 2:
        raise ValueError("bend completion needs at least three values")
    k = _CURVE[geometry]
    s1 = sum(values)
    s2 = sum(v * v for v in values)
    a = n - 1
    b = -2 * s1
    c = n * s2 - s1 * s1 + 2 * n * k
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError("the given bends admit no real completion")
    root = sqrt_scalar(disc)
    lo = (-b - root) / (2 * a)
    hi = (-b + root) / (2 * a)
    return (lo, hi)


# ---------------------------------------------------------------------------
# CLI

def _io_args(sp, infile=True):
    if infile:
        sp.add_argument("--in", dest="infile", metavar="FILE",
                        help="input path ('-' or omitted reads stdin)")
    sp.add_argument("--out", metavar="FILE", help="output path (default stdout)")


def _seed_args(sp):
    sp.add_argument("--geometry",
                    choices=(forms.EUCLIDEAN, forms.SPHERICAL, forms.HYPERBOLIC))
    sp.add_argument("--seed", metavar="BENDS",
                    help="comma-separated bend values, e.g. '-1,2,2,3'")
    sp.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="inversive",
        description="Oriented tangent-sphere configurations and packings "
                    "in Euclidean, spherical, and hyperbolic space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="check a configuration's Gram identity")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _io_args(sp)

    sp = sub.add_parser("solve", help="complete n+1 bends to a full bend vector")
    _seed_args(sp)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _io_args(sp, infile=False)

    sp = sub.add_parser("gen", help="generate a packing out to a bend bound")
    _seed_args(sp)
    sp.add_argument("--max-bend", required=True, metavar="B",
                    help="keep rows with |bend| up to this value")
    sp.add_argument("--max-depth", type=int, default=None)
    sp.add_argument("--max-configs", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _io_args(sp)

    sp = sub.add_parser("convert", help="convert a configuration between geometries")
    sp.add_argument("--to", required=True, dest="target",
                    choices=(forms.EUCLIDEAN, forms.SPHERICAL, forms.HYPERBOLIC))
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _io_args(sp)

    sp = sub.add_parser("lox", help="loxodromic bend sequence by repeated "
                                    "reflection of the largest sphere")
    _seed_args(sp)
    sp.add_argument("--steps", type=int, required=True,
                    help="number of bends to append after the seed")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _io_args(sp)

    sp = sub.add_parser("render", help="render a packing to SVG")
    _seed_args(sp)
    sp.add_argument("--max-bend", metavar="B",
                    help="generate to this bound when no --in stream is given")
    sp.add_argument("--max-depth", type=int, default=None)
    sp.add_argument("--max-configs", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--width", type=int, default=800)
    sp.add_argument("--height", type=int, default=800)
    sp.add_argument("--cutoff", type=float, default=1.0 / 400.0)
    sp.add_argument("--labels", choices=("bend", "none"), default="bend")
    sp.add_argument("--stroke-width", type=float, default=1.0)
    sp.add_argument("--projection",
                    choices=(svg.ORTHOGRAPHIC, svg.STEREOGRAPHIC),
                    default=svg.ORTHOGRAPHIC)
    _io_args(sp)

    sp = sub.add_parser("onedim", help="touching intervals on the line")
    sp.add_argument("--intervals", metavar="A,B,C,D",
                    help="endpoints of two touching intervals (B = C)")
    sp.add_argument("--curvatures", metavar="K2,K3",
                    help="two curvatures; solves for the third")
    sp.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    _io_args(sp, infile=False)

    return parser


def _read_in(args):
    if getattr(args, "infile", None) in (None, "-"):
        return sys.stdin.read()
    return Path(args.infile).read_text()


def _write_text(args, text):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_bytes(args, data):
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("ascii"))


def _parse_scalars(text, mode):
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty value list")
    if mode == EXACT:
        return tuple(Fraction(t) for t in tokens)
    return tuple(float(Fraction(t)) for t in tokens)


def _seed_config(args, tol):
    """Seed for gen/lox/render: an --in document wins, else bends are
    realized in the requested geometry."""
    if getattr(args, "infile", None):
        return loads_config(_read_in(args), tol=tol)
    if args.geometry and args.seed:
        bends = _parse_scalars(args.seed, args.mode)
        return apollonian.realize_bends(args.geometry, bends)
    raise ValueError("need either --in or both --geometry and --seed")


def _parse_bound(text, mode):
    return Fraction(text) if mode == EXACT else float(Fraction(text))


def _cmd_verify(args):
    doc = parse_document(_read_in(args), tol=args.tol)
    report = {
        "geometry": doc.geometry,
        "n": doc.n,
        "mode": doc.mode,
        "valid": doc.valid,
        "max_residual": float(doc.residual.max_abs_entry_error),
    }
    _write_text(args, json.dumps(report) + "\n")
    return 0 if doc.valid else 1


def _cmd_solve(args):
    if not (args.geometry and args.seed):
        raise ValueError("solve needs --geometry and --seed")
    values = _parse_scalars(args.seed, args.mode)
    roots = complete_bend(args.geometry, values)
    documents = []
    for r in roots:
        try:
            w = apollonian.realize_bends(args.geometry, values + (r,))
            documents.append(document_from_config(w))
        except (ValueError, ExactnessError):
            documents.append(None)  # completion exists but is not realized here
    out = {
        "geometry": args.geometry,
        "n": len(values) - 1,
        "mode": args.mode,
        "bends": [scalar_to_json(v) for v in values],
        "completions": [scalar_to_json(r) for r in roots],
        "configurations": documents,
    }
    _write_text(args, json.dumps(out) + "\n")
    return 0


def _generate(args):
    seed = _seed_config(args, args.tol)
    if args.max_bend is None:
        raise ValueError("need --max-bend")
    bound = _parse_bound(args.max_bend, seed.mode)
    return apollonian.generate(
        seed,
        bound,
        max_depth=args.max_depth,
        max_configs=args.max_configs,
        workers=args.workers,
        tol=args.tol,
    )


def _cmd_gen(args):
    _write_text(args, dumps_packing(_generate(args)))
    return 0


def _cmd_convert(args):
    w = loads_config(_read_in(args), tol=args.tol)
    _write_text(args, dumps_config(transform.convert_matrix(w, args.target, tol=args.tol)))
    return 0


def _cmd_lox(args):
    seed = _seed_config(args, args.tol)
    seq = apollonian.loxodromic(seed, args.steps, tol=args.tol)
    out = {
        "geometry": seq.geometry,
        "n": seed.n,
        "mode": seed.mode,
        "bends": [scalar_to_json(b) for b in seq.bends],
    }
    _write_text(args, json.dumps(out) + "\n")
    return 0


def _cmd_render(args):
    if getattr(args, "infile", None):
        text = _read_in(args)
        first = text.lstrip()[:200]
        if '"kind"' in first.split("\n", 1)[0]:
            packing = loads_packing(text)
        else:
            packing = loads_config(text, tol=args.tol)
    else:
        packing = _generate(args)
    options = svg.RenderOptions(
        width=args.width,
        height=args.height,
        cutoff=args.cutoff,
        labels=args.labels,
        stroke_width=args.stroke_width,
        projection=args.projection,
    )
    _write_bytes(args, svg.render(packing, options))
    return 0


def _cmd_onedim(args):
    if args.intervals:
        vals = _parse_scalars(args.intervals, args.mode)
        if len(vals) != 4:
            raise ValueError("--intervals needs exactly four endpoints")
        cfg = onedim.complete_line(
            onedim.OrientedInterval(vals[0], vals[1]),
            onedim.OrientedInterval(vals[2], vals[3]),
        )
        w = onedim.augmented_1d(cfg)
        out = {
            "document": document_from_config(w),
            "curvatures": [scalar_to_json(i.curvature) for i in cfg.intervals],
            "radii": [scalar_to_json(i.r) for i in cfg.intervals],
        }
    elif args.curvatures:
        vals = _parse_scalars(args.curvatures, args.mode)
        if len(vals) != 2:
            raise ValueError("--curvatures needs exactly two values")
        third = onedim.solve_third_curvature(*vals)
        out = {"curvatures": [scalar_to_json(v) for v in (*vals, third)]}
    else:
        raise ValueError("onedim needs --intervals or --curvatures")
    _write_text(args, json.dumps(out) + "\n")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "solve": _cmd_solve,
    "gen": _cmd_gen,
    "convert": _cmd_convert,
    "lox": _cmd_lox,
    "render": _cmd_render,
    "onedim": _cmd_onedim,
}


def run(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse exits 2 on usage errors, 0 on --help
        return e.code if e.code is not None else 0
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ExactnessError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())
