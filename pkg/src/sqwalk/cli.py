"""
Command-line front end: ``sqw <command> ...``.

Each command prints a short human-readable summary, a ``---`` line, and a
JSON block with the same facts. Exit status is 0 on success, 1 on a domain
error (one line ``error: <Code>: <message>`` on stderr) and 2 on a usage
error. With ``--out DIR`` data files are written there together with a
``meta.json`` sidecar; none of them contains a timestamp.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import io as sio
from .catalog import barbell, named_graph
from .classify import classify_graph
from .coined import coined_reduce
from .constants import MAX_SEARCH_VERTICES, OPERATOR_TOL
from .errors import InvalidTessellationError, SQWError
from .models import barbell_pair, fig1_pair, honeycomb, three_state
from .operators import EvolutionOperator, basis_state, dense_matrix, reflection_from
from .search import amplified_cost, fit_sweep, search_sweep
from .szegedy import szegedy_convert, verify_block_structure
from .tessellation import (
    build_two_tessellation,
    intersection_edges,
    is_two_tessellable,
    union_covers_edges,
    validate_tessellation,
)


class UsageError(Exception):
    pass


def _pkg_version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def _existing(path: Optional[str], what: str) -> Optional[Path]:
    if path is None:
        return None
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"{what} file not found: {path}")
    return p


def _load_graph(args):
    if (args.graph is None) == (args.name is None):
        raise UsageError("give exactly one of --graph or --name")
    if args.graph is not None:
        return sio.read_edge_list(args.graph)
    return named_graph(args.name)


def _vectors(path: Optional[Path], t):
    return None if path is None else sio.read_amplitudes(path, t)


def _emit(text_lines: list[str], report: dict) -> None:
    for line in text_lines:
        print(line)
    print("---")
    print(json.dumps(report, indent=2, sort_keys=True))


def _write_outputs(out: Optional[Path], files: dict[str, str], argv: Sequence[str],
                   warnings: list[str]) -> None:
    if out is None:
        return
    out.mkdir(parents=True, exist_ok=True)
    for name, content in files.items():
        (out / name).write_text(content)
    meta = {"argv": list(argv), "files": sorted(files), "package_version": _pkg_version(),
            "warnings": warnings}
    (out / "meta.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")


def _tol_warnings(args) -> list[str]:
    tol = getattr(args, "tol", None)
    if tol is not None and tol != OPERATOR_TOL:
        return [f"operator tolerance overridden: {tol!r} instead of {OPERATOR_TOL!r}"]
    return []


def _json_pair(pair) -> dict:
    return {"blue": [list(p) for p in pair.blue.polygons], "red": [list(p) for p in pair.red.polygons]}


# commands -----------------------------------------------------------------
def cmd_classify(args, argv) -> int:
    g = _load_graph(args)
    ev = classify_graph(g, args.max_vertices)
    report = ev.to_dict()
    report["vertices"] = g.n
    report["edges"] = g.edge_count
    lines = [f"class: {ev.label}", f"vertices: {g.n}  edges: {g.edge_count}"]
    if ev.beineke is not None:
        lines.append(f"induced Beineke graph {ev.beineke[0]} at vertices "
                     f"{[ev.beineke[1][k] for k in sorted(ev.beineke[1])]}")
    if ev.krausz is not None:
        lines.append(f"Krausz partition: {[list(e) for e in ev.krausz.elements]}")
    if ev.two_b_prime is not None:
        lines.append(f"perfect matching: {[list(e) for e in ev.two_b_prime.matching]}")
    _emit(lines, report)
    _write_outputs(args.out, {"report.json": json.dumps(report, indent=2, sort_keys=True) + "\n"},
                   argv, [])
    return 0


def cmd_tessellate(args, argv) -> int:
    g = _load_graph(args)
    if args.tess is None:
        pair = build_two_tessellation(g, args.max_vertices)
        source = "constructed"
    else:
        pair = sio.read_tessellations(args.tess)
        source = "file"
    report: dict = {"source": source, "tessellations": _json_pair(pair)}
    if args.tess is None:
        report["two_tessellable"] = True
    else:
        report["two_tessellable"] = is_two_tessellable(g, args.max_vertices)
    lines = [f"tessellations ({source}): blue {report['tessellations']['blue']}, "
             f"red {report['tessellations']['red']}"]
    ok = True
    for t in (pair.blue, pair.red):
        bad = validate_tessellation(g, t)
        report[f"{t.color}_violation"] = None if bad is None else str(bad)
        if bad is not None:
            ok = False
            lines.append(f"{t.color} invalid: {bad}")
    covers, missing = union_covers_edges(g, pair)
    report["covers_edges"] = covers
    report["missing_edges"] = [list(e) for e in missing]
    report["intersection_edges"] = [list(e) for e in intersection_edges(pair)]
    report["valid"] = ok and covers
    lines.append(f"valid: {report['valid']}  covers all edges: {covers}  "
                 f"intersection edges: {report['intersection_edges']}")
    _emit(lines, report)
    _write_outputs(args.out, {"tessellation.json": sio.format_tessellations(pair)}, argv, [])
    return 0 if report["valid"] else 1


def _walk(args, g, pair) -> EvolutionOperator:
    for t in (pair.blue, pair.red):
        bad = validate_tessellation(g, t)
        if bad is not None:
            raise InvalidTessellationError(bad)
    bv = _vectors(args.blue_amps, pair.blue)
    rv = _vectors(args.red_amps, pair.red)
    return EvolutionOperator(reflection_from(pair.blue, g.n, bv), reflection_from(pair.red, g.n, rv))


def cmd_evolve(args, argv) -> int:
    g = _load_graph(args)
    pair = sio.read_tessellations(args.tess)
    ev = _walk(args, g, pair)
    files = {}
    if args.dump_dense:
        dense = sio.format_dense(dense_matrix(ev))
        files["dense.csv"] = dense
        if args.out is None:
            sys.stdout.write(dense)
            return 0
    if args.start is not None and not 0 <= args.start < g.n:
        raise UsageError(f"--start must be a vertex in 0..{g.n - 1}")
    if args.steps < 0:
        raise UsageError("--steps must be nonnegative")
    psi = basis_state(g.n, args.start) if args.start is not None else np.full(g.n, 1 / np.sqrt(g.n), complex)
    rows = []
    for t in range(args.steps + 1):
        rows.append([t] + [float(abs(a) ** 2) for a in psi])
        if t < args.steps:
            psi = ev.step(psi)
    files["probabilities.csv"] = sio.format_series(["t"] + [f"p{v}" for v in range(g.n)], rows)
    final = rows[-1][1:]
    report = {"vertices": g.n, "steps": args.steps,
              "start": "uniform" if args.start is None else args.start,
              "final_probabilities": final, "norm": float(np.linalg.norm(psi))}
    _emit([f"{args.steps} steps on {g.n} vertices, final norm {report['norm']:.15f}"], report)
    _write_outputs(args.out, files, argv, [])
    return 0


def cmd_convert(args, argv) -> int:
    g = _load_graph(args)
    pair = sio.read_tessellations(args.tess)
    bv = _vectors(args.blue_amps, pair.blue)
    rv = _vectors(args.red_amps, pair.red)
    inst = szegedy_convert(g, pair, bv, rv)
    ev = _walk(args, g, pair)
    tol = OPERATOR_TOL if args.tol is None else args.tol
    ok, dev = verify_block_structure(inst, ev, tol)
    report = {"m": inst.m, "n": inst.n, "N": g.n, "idle_dimension": inst.idle_dimension,
              "block_check": ok, "max_deviation": dev, "tolerance": tol,
              "P": inst.P.tolist(), "Q": inst.Q.tolist(),
              "embedding": [[int(e) // inst.n, int(e) % inst.n] for e in inst.embedding]}
    lines = [f"Szegedy form: m={inst.m} blue, n={inst.n} red, idle dimension {inst.idle_dimension}",
             f"block check {'passed' if ok else 'FAILED'} (max deviation {dev:.3e}, tol {tol:g})"]
    if args.coined:
        cw = coined_reduce(g, pair, bv, rv)
        rec = float(np.max(np.abs(cw.recompose() - dense_matrix(ev))))
        report["coined"] = {**cw.multigraph(), "order": cw.order.tolist(),
                            "perfect_matching": cw.perfect_matching, "recompose_deviation": rec}
        lines.append(f"coined form: {len(cw.coin_blocks)} coins, recomposition deviation {rec:.3e}")
    _emit(lines, report)
    _write_outputs(args.out, {"conversion.json": json.dumps(report, indent=2, sort_keys=True) + "\n"},
                   argv, _tol_warnings(args))
    return 0 if ok else 1


def cmd_model(args, argv) -> int:
    files = {}
    if args.kind == "honeycomb":
        model = honeycomb(args.m)
        g, pair = model.graph, model.pair
    elif args.kind == "three-state":
        model = three_state(args.L, args.rho)
        g, pair = model.graph, model.pair
        files["blue_amplitudes.csv"] = sio.format_amplitudes(model.blue_vectors())
    elif args.kind == "fig1":
        g, pair = named_graph("fig1"), fig1_pair()
    else:
        g, pair = barbell(3), barbell_pair(args.kind[-1])
    files["graph.edges"] = sio.format_edge_list(g)
    files["tessellation.json"] = sio.format_tessellations(pair)
    report = {"model": args.kind, "vertices": g.n, "edges": g.edge_count,
              "blue_polygons": len(pair.blue), "red_polygons": len(pair.red)}
    if g.labels is not None:
        report["labels"] = list(g.labels)
    if args.out is None:
        sys.stdout.write(files["graph.edges"])
        sys.stdout.write(files["tessellation.json"])
        return 0
    _emit([f"{args.kind}: {g.n} vertices, {g.edge_count} edges"], report)
    _write_outputs(args.out, files, argv, [])
    return 0


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def cmd_search(args, argv) -> int:
    rows = search_sweep(args.n_list, args.t_max, args.method, args.workers)
    files = {}
    points, lines = [], []
    for n, N, t, p, series in rows:
        files[f"p_n{n}.csv"] = sio.format_series(["t", "p"], [[i, float(v)] for i, v in enumerate(series)])
        cost = None if t is None else amplified_cost(t, p)
        points.append({"n": n, "N": N, "t_star": t, "p_star": p, "amplified_cost": cost,
                       "p0": float(series[0])})
        lines.append(f"n={n} N={N}: " + ("no peak" if t is None else f"t*={t:g} p*={p:.6f} cost={cost:.3f}"))
    report: dict = {"method": args.method, "points": points}
    if sum(r[2] is not None for r in rows) >= 4:
        fit = fit_sweep(rows)
        report["fit"] = {k: v for k, v in fit.to_dict().items() if k != "points"}
        lines.append(f"t* ~ {fit.a:.4f} N^{fit.b:.4f}   p* ~ {fit.c:.4f} / (ln N)^{fit.d:.4f}")
    files["fit.json"] = json.dumps(report, indent=2, sort_keys=True) + "\n"
    _emit(lines, report)
    _write_outputs(args.out, files, argv, [])
    return 0


# parser -------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sqw", description="Staggered quantum walk toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--graph", help="edge-list file")
        p.add_argument("--name", help="catalog graph, e.g. fig1 or 'cycle(5)'")
        p.add_argument("--out", type=Path, help="output directory")

    def amp_args(p):
        p.add_argument("--blue-amps", help="amplitude CSV for the blue polygons")
        p.add_argument("--red-amps", help="amplitude CSV for the red polygons")

    p = sub.add_parser("classify", help="place a graph in Class 1, 2a, 2b or 2b'")
    graph_args(p)
    p.add_argument("--max-vertices", type=int, default=MAX_SEARCH_VERTICES)
    p.set_defaults(func=cmd_classify, paths=["graph"])

    p = sub.add_parser("tessellate", help="build or check a blue/red tessellation pair")
    graph_args(p)
    p.add_argument("--tess", help="tessellation JSON to validate instead of constructing one")
    p.add_argument("--max-vertices", type=int, default=64)
    p.set_defaults(func=cmd_tessellate, paths=["graph", "tess"])

    p = sub.add_parser("evolve", help="run or dump the staggered walk")
    graph_args(p)
    p.add_argument("--tess", required=True)
    amp_args(p)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--start", type=int, help="start vertex (default: uniform superposition)")
    p.add_argument("--dump-dense", action="store_true", help="write the dense evolution matrix as CSV")
    p.set_defaults(func=cmd_evolve, paths=["graph", "tess", "blue_amps", "red_amps"])

    p = sub.add_parser("convert", help="certify the Szegedy (and optionally coined) form")
    graph_args(p)
    p.add_argument("--tess", required=True)
    amp_args(p)
    p.add_argument("--coined", action="store_true", help="also reduce to a flip-flop coined walk")
    p.add_argument("--tol", type=float, help=f"block-check tolerance (default {OPERATOR_TOL:g})")
    p.set_defaults(func=cmd_convert, paths=["graph", "tess", "blue_amps", "red_amps"])

    p = sub.add_parser("model", help="emit a reference model graph and tessellations")
    p.add_argument("kind", choices=["honeycomb", "three-state", "fig1", "barbell-a", "barbell-b"])
    p.add_argument("--m", type=int, default=2, help="honeycomb size (even)")
    p.add_argument("--L", type=int, default=8, help="three-state ring length")
    p.add_argument("--rho", type=float, default=3 ** -0.5, help="three-state coin parameter")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_model, paths=[])

    p = sub.add_parser("search", help="torus search sweep and scaling fit")
    p.add_argument("--n-list", type=_int_list, default=list(range(4, 26, 2)))
    p.add_argument("--t-max", type=int)
    p.add_argument("--method", choices=["raw", "sine"], default="raw")
    p.add_argument("--workers", type=int)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_search, paths=[])
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        for attr in args.paths:
            setattr(args, attr, _existing(getattr(args, attr, None), attr.replace("_", "-")))
        if getattr(args, "tol", None) is not None and not args.tol > 0:
            raise UsageError("--tol must be positive")
        return args.func(args, argv)
    except UsageError as exc:
        print(f"sqw: error: {exc}", file=sys.stderr)
        return 2
    except SQWError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
