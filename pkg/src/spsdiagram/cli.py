"""Command-line interface.

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .construction import random_script, run_script
from .diagram_file import decode, encode, parse_diagram
from .errors import SPSError
from .geometry import check_czedli, Diagram
from .order import MODES, SUBLATTICE, Lattice
from .render import render_svg, render_tikz
from .script import format_script, parse_script
from .verify import verify_all

log = logging.getLogger("spsdiagram")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SPSError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def _script_meta(script):
    return "; ".join(str(s) for s in script.steps)


def cmd_build(args):
    script = parse_script(_read(args.script))
    run = run_script(script)
    _write(args.output, encode(run.diagram, meta=[("script", _script_meta(script))]))
    last = run.log[-1]
    print(f"{args.output}: {last.elements} elements, {last.edges} edges, {last.cells} cells")
    return EXIT_OK


def cmd_verify(args):
    rec = parse_diagram(_read(args.diagram))
    report = verify_all(rec)
    sys.stdout.write(report.to_text())
    if args.report:
        _write(args.report, report.to_keyvalue())
    if args.figure:
        from .plotting import save_diagram_png
        if report["lattice"].ok:
            D = Diagram(Lattice(rec.n, rec.covers), rec.pos)
            offenders = [o.edge for o in check_czedli(D, args.mode).offenders]
            save_diagram_png(D, args.figure, labels=True, highlight=offenders,
                             title=f"czedli ({args.mode}): {'pass' if not offenders else 'fail'}")
    ok = report.passed(args.mode)
    print(f"verdict ({args.mode}): {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args):
    D = decode(_read(args.diagram))
    if args.format == "svg":
        _write(args.output, render_svg(D, scale=args.scale if args.scale is not None else 40,
                                       labels=args.labels))
    elif args.format == "tikz":
        _write(args.output, render_tikz(D, scale=args.scale if args.scale is not None else 1,
                                        labels=args.labels))
    else:
        from .plotting import save_diagram_png
        save_diagram_png(D, args.output, labels=args.labels)
    return EXIT_OK


def cmd_stats(args):
    report = verify_all(decode(_read(args.diagram)))
    for key, value in report.signature.items():
        print(f"{key}={value}")
    return EXIT_OK


def _grid_arg(text):
    m = re.fullmatch(r"(\d+)[xX](\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected MxN, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _one_random(m, n, forks, removals, seed):
    script = random_script(m, n, forks, removals, seed)
    run = run_script(script)
    return seed, script, run, verify_all(run.diagram)


TSV_HEADER = "seed\tsteps\telements\tedges\tsteep\tcells\tczedli_strict\tczedli_sublattice\tverdict"


def cmd_random(args):
    (m, n) = args.grid
    if m < 2 or n < 2:
        raise SPSError("grid dimensions must be >= 2")
    seeds = [args.seed + k for k in range(args.batch)]
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        results = list(pool.map(
            lambda s: _one_random(m, n, args.forks, args.removals, s), seeds))
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    rows = [TSV_HEADER]
    all_ok = True
    for seed, script, run, report in results:
        sig = report.signature
        ok = report.passed(SUBLATTICE)
        all_ok &= ok
        rows.append("\t".join(str(v) for v in (
            seed, len(script), sig.elements, sig.edges, sig.steep, sig.cells,
            report["czedli_strict"], report["czedli_sublattice"], "pass" if ok else "fail")))
        if out_dir:
            _write(out_dir / f"seed-{seed}.script", format_script(script))
            meta = [("seed", seed), ("grid", f"{m}x{n}"), ("script", _script_meta(script))]
            _write(out_dir / f"seed-{seed}.diagram", encode(run.diagram, meta=meta))
            _write(out_dir / f"seed-{seed}.report", report.to_keyvalue())
    table = "\n".join(rows) + "\n"
    sys.stdout.write(table)
    if out_dir:
        _write(out_dir / "summary.tsv", table)
        from .plotting import summary_figure
        summary_figure([(r[0], r[3]) for r in results]).savefig(
            out_dir / "summary.png", format="png", dpi=120, metadata={"Software": None})
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spsdiagram",
        description="Build and verify diagrams of slim planar semimodular lattices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="run a construction script")
    p.add_argument("script")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check every property of a diagram file")
    p.add_argument("diagram")
    p.add_argument("--mode", choices=MODES, default=SUBLATTICE)
    p.add_argument("--report", help="write a key=value report here")
    p.add_argument("--figure", help="write a PNG with offending edges highlighted")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a diagram file")
    p.add_argument("diagram")
    p.add_argument("--format", choices=("svg", "tikz", "png"), required=True)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--scale", type=Fraction)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("random", help="build and verify random scripts")
    p.add_argument("--grid", type=_grid_arg, required=True, metavar="MxN")
    p.add_argument("--forks", type=int, required=True)
    p.add_argument("--removals", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--batch", type=int, default=1)
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("stats", help="print the signature counts of a diagram file")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except SPSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
