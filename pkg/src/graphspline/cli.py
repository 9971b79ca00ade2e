"""Command-line front end.

    graphspline discretize --fn 4 [--init 9 --ref-max 3 --tol 1e-2 --grid 1001] [--out run.json]
    graphspline suite --table {2,3,4} --out DIR
    graphspline plotdata --fn 14 --out DIR

Exit codes: 0 success, 2 bad arguments, 3 evaluation failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .benchmarks import (
    INDICES,
    PUBLISHED_TABLE3,
    get_function,
    run_table2,
    run_table3,
    run_table4,
)
from .discretize import DiscretizationConfig, discretize
from .exceptions import ConfigError, EvaluationError, GraphSplineError, UnknownFunctionError
from .optimize import optimize
from .reconstruct import average_l2_error, max_abs_error, reconstruct

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EVAL = 3

SCHEMA_PATH = Path(__file__).with_name("runrecord.schema.json")

TABLE_COLUMNS = {
    2: ["index", "nfev", "avg_l2", "published_nfev", "published_l2"],
    3: [
        "delta", "num_init", "nfev", "refs", "graph_l2", "bspline_knots", "bspline_l2",
        "published_nfev", "published_graph_l2", "published_bspline_knots", "published_bspline_l2",
    ],
    4: [
        "index", "n_local", "nearest_local", "global_candidate", "brent_position",
        "extra_evals", "brent_converged", "published_n_local", "published_true_global",
        "published_nearest_local",
    ],
}


def fmt(x):
    """CSV cell: 6 significant digits for floats."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    return f"{x:.5e}"


def write_csv(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def _config(args):
    return DiscretizationConfig(args.init, args.ref_max, args.tol)


def run_record(index, args, timestamp=None):
    """Discretize, reconstruct and optimise one benchmark; return a JSON-ready dict."""
    entry = get_function(index)
    f = entry.target()
    cfg = _config(args)
    res = discretize(f, cfg)
    recon = reconstruct(res.positions, res.values, f.domain, args.grid)
    rep = optimize(f, res, grid_size=args.grid)
    br = rep.brent_refined
    return {
        "function": {"index": entry.index, "description": entry.description},
        "domain": [f.a, f.b],
        "config": {
            "initial_grid_size": cfg.initial_grid_size,
            "ref_max": cfg.ref_max,
            "tol": cfg.tol,
            "grid_size": args.grid,
        },
        "samples": [[x, y] for x, y in res.samples],
        "nfev": res.nfev,
        "rounds_used": res.rounds_used,
        "failure_log": [list(r) for r in res.failure_log],
        "metrics": {
            "avg_l2": average_l2_error(recon, f),
            "max_abs": max_abs_error(recon, f),
        },
        "minima": {
            "count": rep.count,
            "local_minima": [[x, y] for x, y in rep.local_minima],
            "global_candidate": list(rep.global_candidate),
            "monotone": rep.monotone,
            "brent_refined": None
            if br is None
            else {
                "position": br.position,
                "value": br.value,
                "evals_used": br.evals_used,
                "converged": br.converged,
            },
            "extra_evals": rep.extra_evals,
        },
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(),
        "version": __version__,
    }


def cmd_discretize(args):
    rec = run_record(args.fn, args)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        if args.format == "json":
            out.write_text(json.dumps(rec, indent=2) + "\n")
        else:
            with open(out, "w", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(["x", "f"])
                for x, y in rec["samples"]:
                    w.writerow([repr(x), repr(y)])
    print(f"nfev={rec['nfev']} avg_l2={rec['metrics']['avg_l2']:.3e}")
    return EXIT_OK


def cmd_suite(args):
    out = Path(args.out)
    cfg = _config(args)
    if args.table == 2:
        rows = [
            (r.index, r.nfev, r.avg_l2, r.published_nfev, r.published_l2)
            for r in run_table2(cfg, args.grid, threads=args.threads)
        ]
    elif args.table == 4:
        rows = [
            (
                r.index, r.n_local, r.nearest_local, r.global_candidate, r.brent_position,
                r.extra_evals, r.brent_converged, r.published_n_local, r.published_true_global,
                r.published_nearest_local,
            )
            for r in run_table4(cfg, args.grid, threads=args.threads)
        ]
    else:
        rows = []
        for r in run_table3(grid_size=args.grid, threads=args.threads):
            p = PUBLISHED_TABLE3.get(r.delta, (None,) * 6)
            rows.append(
                (r.delta, r.num_init, r.nfev, r.refs, r.graph_l2, r.bspline_knots, r.bspline_l2,
                 p[1], p[3], p[4], p[5])
            )
    path = out / f"table{args.table}.csv"
    write_csv(path, TABLE_COLUMNS[args.table], rows)
    print(f"wrote {len(rows)} rows to {path}")
    return EXIT_OK


def cmd_plotdata(args):
    entry = get_function(args.fn)
    f = entry.target()
    res = discretize(f, _config(args))
    recon = reconstruct(res.positions, res.values, f.domain, args.grid)
    out = Path(args.out)
    sample_path = out / f"fn{entry.index}_samples.csv"
    curve_path = out / f"fn{entry.index}_curve.csv"
    write_csv(sample_path, ["x", "f"], res.samples)
    write_csv(curve_path, ["x", "f_hat"], zip(recon.grid.tolist(), recon.values.tolist()))
    print(f"nfev={res.nfev} wrote {sample_path} and {curve_path}")
    return EXIT_OK


def _add_config_flags(p):
    p.add_argument("--init", type=int, default=9, help="initial uniform grid size")
    p.add_argument("--ref-max", type=int, default=3, help="maximum check rounds")
    p.add_argument("--tol", type=float, default=1e-2, help="pointwise absolute tolerance")
    p.add_argument("--grid", type=int, default=1001, help="fine grid size")


def build_parser():
    parser = argparse.ArgumentParser(prog="graphspline", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discretize", help="discretize one benchmark function")
    p.add_argument("--fn", type=int, required=True, help=f"benchmark index, one of {list(INDICES)}")
    _add_config_flags(p)
    p.add_argument("--out", help="output file for the run record")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_discretize)

    p = sub.add_parser("suite", help="regenerate an experiment table as CSV")
    p.add_argument("--table", type=int, choices=[2, 3, 4], required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--threads", type=int, default=None, help="overrides GRAPHSPLINE_THREADS (0 = auto)")
    _add_config_flags(p)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("plotdata", help="write sample and curve files for plotting")
    p.add_argument("--fn", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    _add_config_flags(p)
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownFunctionError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EvaluationError, GraphSplineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
