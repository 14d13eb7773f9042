"""Command-line entry point.

Exit codes: 0 representable / success, 1 not representable / verdict false,
2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import sys

from . import io
from .drawing import Drawing
from .embed import derive_orientation, embed, represent_outerplanar
from .generators import FAMILIES, InstanceSpec, generate
from .geometry import GeometryError, is_plane_oor
from .graph import Graph, is_biconnected, is_connected
from .obstacle import ObstacleError, build_obstacle
from .orientation import OracleBoundExceeded, enumerate_orientation, solve_dp
from .recognize import InnerChordalGraph, NotInnerChordal, RejectReason, recognize
from .render import plot_bench, render_svg

log = logging.getLogger("oorep")

OK, NO, BAD = 0, 1, 2


def _recognize(g: Graph, embedded) -> InnerChordalGraph:
    inner = None
    if embedded is not None:
        inner = set(range(g.n)) - set(embedded.outer_face.vertices)
    return recognize(g, inner=inner)


def _orient(ic: InnerChordalGraph, args):
    if args.oracle:
        return enumerate_orientation(ic, max_chords=args.max_oracle_chords)
    return solve_dp(ic.tree)


def _emit(args, payload) -> None:
    io.write_text(args.output, payload if isinstance(payload, str) else io.dumps(payload))


def _decide(g: Graph, embedded, args) -> tuple[dict, InnerChordalGraph | None, object]:
    """Decision record, the recognised structure (if any) and the orientation (if any)."""
    if is_connected(g) and g.n >= 1 and not is_biconnected(g):
        # outerplanar graphs are representable exactly when chordal
        try:
            represent_outerplanar(g)
        except NotInnerChordal as exc:
            return {"representable": False, "reason": exc.reason.to_json(),
                    "note": "only biconnected and outerplanar inputs are decided"}, None, None
        return {"representable": True, "class": "outerplanar"}, None, None
    ic = _recognize(g, embedded)
    o = _orient(ic, args)
    out = {"representable": o is not None, "tree": ic.tree.to_json()}
    if o is None:
        out["reason"] = RejectReason("no_orientation", (), "no outside-obstacle orientation exists").to_json()
    return out, ic, o


def cmd_check(args) -> int:
    g, emb = io.load_graph(args.input)
    try:
        out, _, _ = _decide(g, emb, args)
    except NotInnerChordal as exc:
        out = {"representable": False, "reason": exc.reason.to_json()}
    _emit(args, out)
    return OK if out["representable"] else NO


def cmd_orient(args) -> int:
    g, emb = io.load_graph(args.input)
    try:
        ic = _recognize(g, emb)
    except NotInnerChordal as exc:
        _emit(args, {"chords": None, "reason": exc.reason.to_json()})
        return NO
    o = _orient(ic, args)
    if o is None:
        _emit(args, {"chords": None, "reason": {"kind": "no_orientation"}})
        return NO
    _emit(args, o.to_json())
    return OK


def _drawing_for(g: Graph, emb, args) -> Drawing | None:
    if is_connected(g) and not is_biconnected(g):
        return represent_outerplanar(g)
    ic = _recognize(g, emb)
    o = _orient(ic, args)
    return None if o is None else embed(ic, o)


def cmd_draw(args) -> int:
    g, emb = io.load_graph(args.input)
    try:
        d = _drawing_for(g, emb, args)
    except NotInnerChordal as exc:
        _emit(args, {"points": None, "reason": exc.reason.to_json()})
        return NO
    if d is None:
        _emit(args, {"points": None, "reason": {"kind": "no_orientation"}})
        return NO
    if args.format == "svg":
        _emit(args, render_svg(d))
    else:
        _emit(args, d.to_json())
    return OK


def cmd_verify(args) -> int:
    d = io.load_drawing(args.input)
    report = is_plane_oor(d)
    out = report.to_json()
    if report.verdict and report.local_verdict:
        out["orientation"] = derive_orientation(d).to_json()
    _emit(args, out)
    return OK if report.verdict else NO


def cmd_obstacle(args) -> int:
    d = io.load_drawing(args.input)
    try:
        poly = build_obstacle(d)
    except ObstacleError as exc:
        _emit(args, {"vertices": None, "error": str(exc), "pair": exc.pair})
        return NO
    if args.format == "svg":
        _emit(args, render_svg(d, poly))
    else:
        _emit(args, poly.to_json())
    return OK


def cmd_gen(args) -> int:
    inst = generate(InstanceSpec(args.family, args.size, args.seed))
    _emit(args, inst.to_json())
    return OK


def cmd_bench(args) -> int:
    from .bench import BenchRecord, run_bench

    sizes = args.sizes or ([args.size] if args.size is not None else [1000, 10000, 100000])
    specs = [InstanceSpec(args.family, s, args.seed) for s in sizes]
    records = run_bench(specs, max_draw_n=args.max_draw_n, repeat=args.repeat)
    if args.format == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(BenchRecord.CSV_FIELDS)
        for r in records:
            w.writerow(r.csv_row())
        _emit(args, buf.getvalue())
    else:
        _emit(args, "\n".join(json.dumps(r.to_json()) for r in records))
    if args.plot:
        plot_bench(records, args.plot)
    return OK if all(r.verdict for r in records) else NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oorep", description="Plane outside-obstacle representations.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, fmt=("json",)):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", "-i", default="-", help="input JSON file ('-' for stdin)")
        sp.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")
        sp.add_argument("--format", choices=fmt, default=fmt[0])
        sp.add_argument("--oracle", action="store_true", help="use the exhaustive orientation search")
        sp.add_argument("--max-oracle-chords", type=int, default=20)
        sp.set_defaults(func=fn)
        return sp

    add("check", cmd_check, "decide representability of a graph")
    add("orient", cmd_orient, "print an outside-obstacle orientation")
    add("draw", cmd_draw, "construct an exact drawing", ("json", "svg"))
    add("verify", cmd_verify, "verify a drawing")
    add("obstacle", cmd_obstacle, "build and certify an obstacle for a drawing", ("json", "svg"))
    gen = add("gen", cmd_gen, "generate an instance")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--size", type=int)
    gen.add_argument("--seed", type=int, default=0)
    bench = add("bench", cmd_bench, "time the pipeline", ("jsonl", "csv"))
    bench.add_argument("--family", choices=FAMILIES, default="fan")
    bench.add_argument("--size", type=int)
    bench.add_argument("--sizes", type=int, nargs="+")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=int, default=1)
    bench.add_argument("--max-draw-n", type=int, default=0, help="also embed and verify up to this n")
    bench.add_argument("--plot", help="write a log-log timing figure to this path")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except OracleBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD
    except (io.InputError, ValueError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD


def run_cli(argv) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
