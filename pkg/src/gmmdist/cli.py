"""Command-line front end: norms, distances, decisions, approximations,
instance generation, and the verification suites.

Exit codes: 0 success, 1 parse/usage error, 2 infeasible (a size cap was
exceeded), 3 node budget exhausted (the best incumbent is still printed).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import io as gio
from .generators import (ReductionInstance, ThreePartitionInstance,
                         gen_additive_gadget, gen_color_conversion,
                         gen_cutnorm_instance, gen_hamcycle, gen_path_variant,
                         gen_threepartition_trees)
from .norms import CutNormInfeasible, mismatch_norm, parse_spec
from .solver import (Threshold, approx_additive, approx_multiplicative,
                     decide_distance, exact_distance)
from .verify import run_suites

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _norm_value_payload(nv) -> dict:
    out = {"value": nv.value, "exact": nv.exact}
    if nv.power_value is not None:
        out["power"] = nv.power
        out["power_value"] = nv.power_value
    if nv.certificate is not None:
        out["certificate"] = nv.certificate
    return out


def cmd_norm(args) -> int:
    spec = parse_spec(args.spec)
    delta = gio.load_signed(args.input)
    nv = mismatch_norm(delta, spec)
    _emit(_norm_value_payload(nv), args.format)
    return EXIT_OK


def cmd_dist(args) -> int:
    spec = parse_spec(args.spec)
    g = gio.load_graph(args.left)
    h = gio.load_graph(args.right)
    res = exact_distance(g, h, spec, budget=args.budget, seed=args.seed)
    payload = {
        "value": res.value,
        "alignment": list(res.alignment.mapping),
        "nodes_explored": res.nodes_explored,
        "exact": res.exact,
        "lower_bound": {"value": res.lower_bound_used.value,
                        "witness": res.lower_bound_used.witness},
    }
    _emit(payload, args.format)
    return EXIT_OK if res.exact else EXIT_BUDGET


def cmd_decide(args) -> int:
    spec = parse_spec(args.spec)
    t = Threshold.parse(args.threshold)
    g = gio.load_graph(args.left)
    h = gio.load_graph(args.right)
    answer = decide_distance(g, h, spec, t, budget=args.budget, seed=args.seed)
    print("true" if answer else "false")
    return EXIT_OK


def cmd_approx(args) -> int:
    p = math.inf if args.p.lower() in ("inf", "infinity") else float(args.p)
    g = gio.load_graph(args.left)
    h = gio.load_graph(args.right)
    d = h.max_degree()
    payload = {
        "additive": approx_additive(g, h, p, use_abs=args.abs),
        "multiplicative": approx_multiplicative(g, h, p),
        "additive_guarantee": 2 * d,
        "multiplicative_guarantee": 1 + 2 * d,
        "max_degree_right": d,
    }
    _emit(payload, args.format)
    return EXIT_OK


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.replace(",", " ").split()
    if len(parts) != 2:
        raise ValueError(f"expected an edge 'u,v', got {text!r}")
    return int(parts[0]), int(parts[1])


def _write_instance(inst: ReductionInstance, out_dir: str, prefix: str,
                    p_for_gap: float) -> list[str]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    left_path = out / f"{prefix}_left.g"
    right_path = out / f"{prefix}_right.g"
    gio.save_graph(left_path, inst.left)
    gio.save_graph(right_path, inst.right)
    files += [str(left_path), str(right_path)]
    meta = {
        "source": inst.meta.source,
        "answer": inst.meta.answer,
        "extra": inst.meta.extra,
        "files": {"left": left_path.name, "right": right_path.name},
    }
    gaps = inst.meta.gap_expressions()
    if gaps is not None:
        low, high = inst.meta.gap_at(p_for_gap)
        meta["gap"] = {"low": {"expr": gaps["low"], "numeric_at_p": low},
                       "high": {"expr": gaps["high"], "numeric_at_p": high},
                       "p": p_for_gap}
    if inst.colored is not None:
        for side, cg in zip(("left", "right"), inst.colored):
            path = out / f"{prefix}_colored_{side}.json"
            path.write_text(gio.dump_json(gio.graph_to_dict(cg.graph, cg.colors)))
            files.append(str(path))
            meta["files"][f"colored_{side}"] = path.name
    meta_path = out / f"{prefix}_meta.json"
    meta_path.write_text(gio.dump_json(meta))
    files.append(str(meta_path))
    return files


def cmd_gen(args) -> int:
    family = args.family
    if family == "hamcycle":
        inst = gen_hamcycle(gio.load_graph(args.input))
    elif family == "path":
        edge = _parse_edge(args.edge)
        inst = gen_path_variant(gio.load_graph(args.input), args.vertex, edge)
    elif family == "3part":
        items = tuple(int(x) for x in args.items.split(","))
        inst = gen_threepartition_trees(ThreePartitionInstance(args.big_a, items))
    elif family == "colorconv":
        cg = gio.load_colored_graph(args.left)
        ch = gio.load_colored_graph(args.right)
        inst = gen_color_conversion(cg, ch)
    elif family == "additive":
        p = math.inf if args.p.lower() in ("inf", "infinity") else float(args.p)
        inst = gen_additive_gadget(gio.load_graph(args.input), p, args.eps)
    elif family == "cut":
        inst = gen_cutnorm_instance(gio.load_graph(args.input))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {family}")
    p_for_gap = 2.0
    files = _write_instance(inst, args.out, args.prefix or family, p_for_gap)
    for f in files:
        print(f)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suites(args.suite or None)
    ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.name}: {r.detail}")
        ok = ok and r.passed
    return EXIT_OK if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gmmdist",
                                 description="Graph distances from mismatch norms")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("norm", help="evaluate a mismatch norm on a signed graph file")
    p.add_argument("--spec", required=True)
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("dist", help="exact distance between two graph files")
    p.add_argument("--spec", required=True)
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("decide", help="decide whether distance >= p/q")
    p.add_argument("--spec", required=True)
    p.add_argument("--threshold", required=True, metavar="P/Q")
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("approx", help="additive and multiplicative approximations")
    p.add_argument("--p", required=True)
    p.add_argument("--abs", action="store_true",
                   help="use the absolute operator norm")
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("gen", help="emit a reduction instance pair")
    p.add_argument("family", choices=("hamcycle", "path", "3part", "colorconv",
                                      "additive", "cut"))
    p.add_argument("--input", help="source graph file (hamcycle/path/additive/cut)")
    p.add_argument("--left", help="colored graph JSON (colorconv)")
    p.add_argument("--right", help="colored graph JSON (colorconv)")
    p.add_argument("--vertex", type=int, default=0, help="path: pivot vertex")
    p.add_argument("--edge", default="", help="path: removed edge 'u,v'")
    p.add_argument("--A", dest="big_a", type=int, help="3part: target sum A")
    p.add_argument("--items", default="", help="3part: comma-separated items")
    p.add_argument("--p", default="2", help="additive: operator norm exponent")
    p.add_argument("--eps", type=float, default=1.0, help="additive: error to defeat")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--prefix", default="", help="output filename prefix")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the reduction verification suites")
    p.add_argument("--suite", action="append", help="suite name (repeatable)")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CutNormInfeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (gio.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
