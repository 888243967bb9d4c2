"""Command-line front end.

Subcommands: faces, class-check, classify, detect, discharge, color, theorem8,
counterexamples, gen.  Commands that read --input accept a single graph file
or a directory of *.pg files (processed in sorted order, optionally with
--jobs N in parallel).  Exit codes: 0 success, 1 property violation found,
2 input error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .colorer import (
    ProofStats,
    TheoremViolation,
    boundary_colorings,
    color_proof_guided,
    extend_backtrack,
    extension_audit,
)
from .discharging import audit, format_report
from .generators import GENERATORS, g1, g2
from .plane_graph import (
    GraphInputError,
    PlaneGraph,
    PlaneGraphError,
    format_plane_graph,
    parse_plane_graph,
    sides_of_cycle,
)
from .structures import classify_cycle, detect_all, in_class

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


def _load(path: Path) -> PlaneGraph:
    try:
        return parse_plane_graph(path.read_text())
    except OSError as exc:
        raise GraphInputError(str(exc)) from exc


# -- per-command runners (graph -> (exit code, text)) --------------------------------

def _run_faces(g: PlaneGraph, args) -> tuple[int, str]:
    lines = []
    for i, f in enumerate(g.faces):
        tag = " outer" if f.is_outer else ""
        lines.append(f"face id={i} size={f.size}{tag} walk={'-'.join(f.vertices())}")
    lines.append(f"summary V={g.vertex_count} E={g.edge_count} F={len(g.faces)}")
    return OK, "\n".join(lines)


def _run_class_check(g: PlaneGraph, args) -> tuple[int, str]:
    rep = in_class(g)
    if rep.ok:
        return OK, "in-class"
    extra = f" triangle={'-'.join(rep.triangle)}" if rep.triangle else ""
    return VIOLATION, f"violation: {rep.violation} [{'-'.join(rep.cycle)}]{extra}"


def _run_classify(g: PlaneGraph, args) -> tuple[int, str]:
    cyc = g.boundary_cycle()
    if cyc is None:
        return OK, "boundary: not a cycle"
    cls = classify_cycle(g, sides_of_cycle(g, cyc))
    lines = [f"boundary: {cls.kind.value} length={len(cyc)}"]
    for p in cls.partitions:
        lines.append(f"{p.kind} cycle={'-'.join(p.cycle)} "
                     f"cells={','.join(map(str, p.cell_lengths))}")
    return OK, "\n".join(lines)


def _run_detect(g: PlaneGraph, args) -> tuple[int, str]:
    report = detect_all(g)
    lines = []
    for name in sorted(report):
        for item in report[name]:
            lines.append(f"{name} {_describe(item)}")
        if not report[name]:
            lines.append(f"{name} none")
    return OK, "\n".join(lines)


def _describe(item) -> str:
    from .structures import (BadPartition, HexTriEdge, SpecialFace,
                             SplittingPathViolation, WeakTetrad)
    if isinstance(item, str):
        return f"vertex={item}"
    if isinstance(item, tuple):
        return f"cycle={'-'.join(item)}"
    if isinstance(item, WeakTetrad):
        return f"face={item.face_index} path={'-'.join(item.path)}"
    if isinstance(item, SpecialFace):
        return f"face={item.face_index} labeling={'-'.join(item.labelings[0])}"
    if isinstance(item, HexTriEdge):
        return f"edge={item.edge[0]}-{item.edge[1]}"
    if isinstance(item, SplittingPathViolation):
        return (f"path={'-'.join(item.path)} sides={item.side_lengths} "
                f"rule={item.rule}")
    if isinstance(item, BadPartition):
        return f"kind={item.kind} cycle={'-'.join(item.cycle)}"
    return repr(item)


def _run_discharge(g: PlaneGraph, args) -> tuple[int, str]:
    report = audit(g)
    return (OK if report.sum_ok else VIOLATION), format_report(g, report).rstrip("\n")


def _pick_phi(g: PlaneGraph):
    return next(boundary_colorings(g))


def _run_color(g: PlaneGraph, args) -> tuple[int, str]:
    method = args.method
    phi = _pick_phi(g)
    stats = ProofStats()
    if method == "auto":
        cyc = g.boundary_cycle()
        good = (cyc is not None and in_class(g).ok and
                classify_cycle(g, sides_of_cycle(g, cyc)).kind.value == "good")
        method = "proof" if good else "oracle"
    if method == "proof":
        try:
            coloring, stats = color_proof_guided(g, phi)
        except TheoremViolation as exc:
            return VIOLATION, f"THEOREM-VIOLATION: {exc}"
    else:
        coloring = extend_backtrack(g, phi)
        if coloring is None:
            return VIOLATION, "unextendable: boundary precoloring does not extend"
    lines = [f"{v}={coloring[v]}" for v in sorted(coloring)]
    lines.append(stats.format())
    return OK, "\n".join(lines)


def _run_theorem8(g: PlaneGraph, args) -> tuple[int, str]:
    rep = extension_audit(g)
    lines = [f"class_ok={str(rep.class_ok).lower()}"
             + (f" violation={rep.class_violation}" if rep.class_violation else ""),
             f"boundary={'cycle' if rep.boundary_is_cycle else 'walk'}"
             + (f" kind={rep.boundary_kind}" if rep.boundary_kind else ""),
             f"colorings_checked={rep.colorings_checked}"]
    if rep.violations:
        for phi in rep.violations:
            pretty = ",".join(f"{v}={c}" for v, c in sorted(phi.items()))
            lines.append(f"REFUTATION unextendable_coloring [{pretty}]")
        return VIOLATION, "\n".join(lines)
    lines.append("all_extend=true" if rep.boundary_kind == "good" and rep.class_ok
                 else "check_skipped=true")
    return OK, "\n".join(lines)


_RUNNERS = {
    "faces": _run_faces,
    "class-check": _run_class_check,
    "classify": _run_classify,
    "detect": _run_detect,
    "discharge": _run_discharge,
    "color": _run_color,
    "theorem8": _run_theorem8,
}


# -- commands without --input ---------------------------------------------------------

def _run_counterexamples(args) -> int:
    out = []
    ga = g1()
    bad = sum(1 for phi in boundary_colorings(ga)
              if len({phi["v1"], phi["v2"], phi["v6"]}) == 3
              and extend_backtrack(ga, phi) is not None)
    ext = sum(1 for phi in boundary_colorings(ga)
              if len({phi["v1"], phi["v2"], phi["v6"]}) <= 2
              and extend_backtrack(ga, phi) is not None)
    ok1 = bad == 0 and ext > 0
    out.append("G1: unextendable coloring confirmed" if ok1
               else "G1: FAILED reproduction")
    gb = g2()
    bad2 = sum(1 for phi in boundary_colorings(gb)
               if phi["v1"] == phi["v4"] == phi["v7"]
               and extend_backtrack(gb, phi) is not None)
    ok2 = bad2 == 0
    out.append("G2: unextendable coloring confirmed" if ok2
               else "G2: FAILED reproduction")
    print("\n".join(out))
    return OK if ok1 and ok2 else VIOLATION


def _run_gen(args) -> int:
    kind = args.kind
    if kind not in GENERATORS:
        print(f"unknown generator {kind}; choose from {sorted(GENERATORS)}",
              file=sys.stderr)
        return INPUT_ERROR
    try:
        if kind == "cycle":
            g = GENERATORS[kind](args.n)
        elif kind == "random-class":
            g = GENERATORS[kind](args.seed, args.max_n)
        else:
            g = GENERATORS[kind]()
    except (ValueError, PlaneGraphError) as exc:
        print(f"generation error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    text = format_plane_graph(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


# -- dispatch with file/directory input ------------------------------------------------

def _process_one(payload) -> tuple[str, int, str]:
    command, path = payload
    try:
        g = _load(Path(path))
    except (GraphInputError, PlaneGraphError) as exc:
        return path, INPUT_ERROR, f"input error: {exc}"
    try:
        code, text = _RUNNERS[command](g, _process_one.args)
    except PlaneGraphError as exc:
        return path, INPUT_ERROR, f"error: {exc}"
    return path, code, text


def _run_with_input(args) -> int:
    path = Path(args.input)
    if path.is_dir():
        files = sorted(str(p) for p in path.glob("*.pg"))
        if not files:
            print(f"no *.pg files in {path}", file=sys.stderr)
            return INPUT_ERROR
        _process_one.args = args
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs,
                                     initializer=_set_worker_args,
                                     initargs=(args,)) as pool:
                results = list(pool.map(_process_one,
                                        [(args.command, f) for f in files]))
        else:
            results = [_process_one((args.command, f)) for f in files]
        worst = OK
        for name, code, text in results:
            print(f"== {name}")
            print(text)
            worst = max(worst, code)
        return worst
    _process_one.args = args
    name, code, text = _process_one((args.command, str(path)))
    print(text)
    return code


def _set_worker_args(args) -> None:
    _process_one.args = args


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricolor",
        description="plane-graph structure detection, discharging, 3-coloring")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True,
                       help="graph file or directory of *.pg files")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=("text", "records"), default="text")
        return p

    add_input_command("faces", "trace and list the faces")
    add_input_command("class-check", "check class membership")
    add_input_command("classify", "classify the boundary cycle")
    add_input_command("detect", "run every structure detector")
    add_input_command("discharge", "run the discharging audit")
    p = add_input_command("color", "3-color by precoloring extension")
    p.add_argument("--method", choices=("oracle", "proof", "auto"), default="auto")
    add_input_command("theorem8", "boundary-extension audit")

    sub.add_parser("counterexamples",
                   help="reproduce the two non-extendable instances")

    p = sub.add_parser("gen", help="emit a generated instance")
    p.add_argument("kind", help=f"one of {sorted(GENERATORS)}")
    p.add_argument("--n", type=int, default=6, help="cycle length for 'cycle'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=22, dest="max_n")
    p.add_argument("--output", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "counterexamples":
        return _run_counterexamples(args)
    if args.command == "gen":
        return _run_gen(args)
    try:
        return _run_with_input(args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
