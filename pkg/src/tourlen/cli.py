"""Command-line entry points: evaluate, audit, curves, grid, solve."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, tsplib
from .errors import TourlenError
from .estimators import build_estimate_report, bounds
from .generators import GridSpec, grid_optimal_length, make_grid
from .metric import build_instance, compute_stats
from .mst import prim_mst
from .solvers import SolverLimit, best_start_nearest_town, exact_tour, nearest_town


def _add_corpus_args(parser: argparse.ArgumentParser, tours_required: bool = False) -> None:
    parser.add_argument("--instances", required=True, help="directory of .tsp files")
    parser.add_argument(
        "--tours",
        required=tours_required,
        default=None,
        help="directory of .opt.tour files",
    )
    parser.add_argument("--reported", default=None, help="reported-values CSV")
    parser.add_argument("--out", required=True, help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourlen",
        description="Tour-length estimators, MST bounds, and TSPLIB evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="full corpus pipeline")
    _add_corpus_args(p_eval)
    p_eval.add_argument(
        "--formulas",
        default=",".join(bench.FORMULA_NAMES),
        help="comma-separated subset of " + ",".join(bench.FORMULA_NAMES),
    )
    p_eval.add_argument("--d", type=int, default=None, help="dimension override")
    p_eval.add_argument("--exact-cap", type=int, default=15)

    p_audit = sub.add_parser("audit", help="tour-length audit against reported values")
    _add_corpus_args(p_audit, tours_required=True)

    p_curves = sub.add_parser("curves", help="estimator divergence curve data")
    p_curves.add_argument("--d-max", type=int, default=100)
    p_curves.add_argument("--out", required=True, help="output directory")

    p_grid = sub.add_parser("grid", help="generate (and optionally solve) a grid")
    p_grid.add_argument("--sides", required=True, help="per-axis counts, e.g. 4x3")
    p_grid.add_argument("--spacing", type=float, default=1.0)
    p_grid.add_argument("--out", default=None, help="write the instance here (.tsp)")
    p_grid.add_argument("--solve", action="store_true", help="run the exact solver")
    p_grid.add_argument("--exact-cap", type=int, default=15)

    p_solve = sub.add_parser("solve", help="exact/heuristic solve of one instance")
    p_solve.add_argument("--instance", required=True, help="path to a .tsp file")
    p_solve.add_argument("--exact-cap", type=int, default=15)
    p_solve.add_argument("--start", type=int, default=0, help="heuristic start vertex")

    return parser


def _config_from_args(args: argparse.Namespace) -> bench.RunConfig:
    return bench.RunConfig(
        instance_dir=Path(args.instances),
        tour_dir=Path(args.tours) if args.tours else None,
        reported_values_path=Path(args.reported) if args.reported else None,
        output_dir=Path(args.out),
        d_override=getattr(args, "d", None),
        formula_set=tuple(
            name.strip() for name in getattr(args, "formulas", ",".join(bench.FORMULA_NAMES)).split(",") if name.strip()
        ),
        exact_cap=getattr(args, "exact_cap", 15),
    )


def _cmd_evaluate(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    results = bench.evaluate_corpus(config)
    with open(out / "results.csv", "w") as sink:
        bench.emit_results_csv(results, sink)
    have_errors = any(result.errors for result in results)
    if have_errors:
        with open(out / "table1.csv", "w") as csv_sink, open(out / "table1.txt", "w") as text_sink:
            bench.emit_table1(results, csv_sink, text_sink)
        for formula in config.formula_set:
            if any(formula in result.errors for result in results):
                with open(out / f"hist_{formula}.csv", "w") as sink:
                    bench.emit_histogram_data(results, formula, sink)
    evaluated = sum(1 for r in results if r.errors)
    print(f"evaluated {len(results)} instances ({evaluated} with an optimum) -> {out}")
    for result in results:
        for note in result.diagnostics:
            print(f"  note [{result.name}]: {note}", file=sys.stderr)
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    records = bench.audit_tours(config)
    with open(out / "audit.csv", "w") as sink:
        bench.emit_audit_csv(records, sink)
    print(f"{'instance':<12}{'n':>6}{'computed':>16}{'reported':>12}{'hk':>12}  classification")
    for r in records:
        reported = f"{r.reported_opt:.1f}" if r.reported_opt is not None else "-"
        hk = f"{r.hk_bound:.1f}" if r.hk_bound is not None else "-"
        flag = "  [HK>computed]" if r.hk_anomaly else ""
        print(
            f"{r.name:<12}{r.n:>6}{r.computed_length:>16.6f}{reported:>12}{hk:>12}"
            f"  {r.classification}{flag}"
        )
    return 0


def _cmd_curves(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "fig1.csv", "w") as sink:
        bench.emit_fig1_curves(args.d_max, sink)
    print(f"wrote {out / 'fig1.csv'} for d = 1..{args.d_max}")
    return 0


def _parse_sides(text: str) -> tuple[int, ...]:
    for sep in ("x", ","):
        if sep in text:
            return tuple(int(part) for part in text.split(sep))
    return (int(text),)


def _cmd_grid(args: argparse.Namespace) -> int:
    spec = GridSpec(sides=_parse_sides(args.sides), spacing=args.spacing)
    instance = make_grid(spec)
    print(f"{instance.name}: n = {spec.n}, d = {spec.d}, spacing = {spec.spacing}")
    print(f"closed-form optimal length: {grid_optimal_length(spec):.6f}")
    mst = prim_mst(instance)
    print(f"mst total: {mst.total:.6f} (closed form {(spec.n - 1) * spec.spacing:.6f})")
    if args.solve:
        if spec.n <= args.exact_cap:
            opt = exact_tour(instance, SolverLimit(max_exact_n=args.exact_cap))
            print(f"exact optimal length: {opt.length:.6f}")
        else:
            greedy = best_start_nearest_town(instance)
            print(f"best-start nearest-town length: {greedy.length:.6f}")
    if args.out:
        if spec.d != 2:
            raise TourlenError("only 2-d grids can be written as TSPLIB files")
        raw = tsplib.RawInstanceFile(
            name=instance.name,
            declared_type="TSP",
            dimension=spec.n,
            edge_weight_type="EUC_2D",
            node_coords=[
                (idx + 1, float(p[0]), float(p[1]))
                for idx, p in enumerate(instance.points)
            ],
        )
        with open(args.out, "w") as sink:
            tsplib.write_instance(raw, sink)
        print(f"wrote {args.out}")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    raw = tsplib.load_instance(args.instance)
    instance = build_instance(raw)
    stats = compute_stats(instance)
    mst = prim_mst(instance)
    report = build_estimate_report(stats, mst.total, instance.d)
    scale = instance.norm.report_scale
    print(f"{instance.name}: n = {instance.n}, w0 = {stats.w0:.6f}, w1 = {stats.w1:.6f}")
    print(f"mst total: {mst.total * scale:.6f}")
    sandwich = bounds(stats, mst.total)
    print(
        f"bounds: [{sandwich.lower * scale:.6f}, {sandwich.upper * scale:.6f}]"
        + ("" if sandwich.consistent else "  [inconsistent]")
    )
    for label, value in (
        ("O1", report.o1),
        ("O2", report.o2),
        ("Ot1", report.ot1),
        ("Ot2", report.ot2),
        ("Otc1", report.otc1),
        ("Otc2", report.otc2),
    ):
        print(f"{label}: {value * scale:.6f}")
    if instance.n <= args.exact_cap:
        opt = exact_tour(instance, SolverLimit(max_exact_n=args.exact_cap))
        print(f"exact optimal length: {opt.length:.6f}")
    single = nearest_town(instance, args.start)
    print(f"nearest-town from {args.start}: {single.length:.6f}")
    if instance.n >= 3:
        derand = best_start_nearest_town(instance)
        print(f"best-start nearest-town: {derand.length:.6f}")
    return 0


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "audit": _cmd_audit,
    "curves": _cmd_curves,
    "grid": _cmd_grid,
    "solve": _cmd_solve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TourlenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
