"""``plgvc`` command line interface.

Exit status: 0 on success, 2 on invalid parameters, 3 on I/O errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import bounds
from .degree_model import InvalidParameters, PlgParams, build_degree_sequence
from .exact import DEFAULT_BUDGET, exact_vc
from .generator import InvalidInput, generate
from .graph import GraphFormatError, format_graph, read_graph, simplify
from .harness import ExperimentOptions, emit, run_experiment, summarize, sweep_beta, sweep_to_csv
from .lp_half import nt_partition, solve_half_integral
from .rounding import compute_vstar, ratio_decomposition, round_cover

EXIT_OK, EXIT_PARAMS, EXIT_IO = 0, 2, 3


def _params(args) -> PlgParams:
    if args.e_alpha is not None:
        return PlgParams.from_scale(args.e_alpha, args.beta)
    if args.alpha is None:
        raise InvalidParameters("one of --alpha or --e-alpha is required")
    return PlgParams(alpha=args.alpha, beta=args.beta)


def _scale_opt(args):
    if getattr(args, "e_alpha", None) is not None:
        return math.log(args.e_alpha)
    return getattr(args, "alpha", None)


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _frac(f):
    return None if f is None else float(f)


def cmd_degseq(args) -> int:
    seq = build_degree_sequence(_params(args))
    lines = [f"{i} {y}" for i, y in enumerate(seq.counts, 1)]
    lines.append(f"# n={seq.total_vertices} D={seq.total_degree}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    g = generate(build_degree_sequence(_params(args)), args.seed)
    _write(format_graph(g), args.out)
    return EXIT_OK


def cmd_lp(args) -> int:
    g = simplify(read_graph(args.input))
    x = solve_half_integral(g)
    part = nt_partition(x, g)
    if args.json:
        doc = {"cost_halves": x.cost_halves, "x": x.values(),
               "P": list(part.P), "Q": list(part.Q), "R": list(part.R)}
        print(json.dumps(doc))
    else:
        print(f"cost_halves {x.cost_halves}")
        print(f"cost {x.cost_halves / 2:g}")
        print(f"P {len(part.P)} Q {len(part.Q)} R {len(part.R)}")
    return EXIT_OK


def cmd_round(args) -> int:
    g = simplify(read_graph(args.input))
    x = solve_half_integral(g)
    y = round_cover(g, x)
    rd = ratio_decomposition(g, x, y, compute_vstar(g))
    doc = {
        "cost": y.cost,
        "y_vstar": rd.y_vstar,
        "x_vstar_halves": rd.x_vstar_halves,
        "x_v_halves": x.cost_halves,
        "ratio_vstar": _frac(rd.r_vstar),
        "ratio_rest": _frac(rd.r_rest),
        "ratio_composite": _frac(rd.r_composite),
    }
    if args.json:
        doc["y"] = list(y.y)
        print(json.dumps(doc))
    else:
        for k, v in doc.items():
            print(f"{k} {'undefined' if v is None else format(v, '.12g') if isinstance(v, float) else v}")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = simplify(read_graph(args.input))
    res = exact_vc(g, args.budget)
    print(f"opt {res.opt_size}")
    print(f"nodes {res.nodes_explored}")
    print(f"timed_out {str(res.timed_out).lower()}")
    print("cover " + " ".join(map(str, sorted(res.cover))))
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = bounds.bound_report(args.beta, _scale_opt(args))
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        for k, v in report.to_dict().items():
            print(f"{k} {'' if v is None else format(v, '.12g') if isinstance(v, float) else v}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    rows = sweep_beta(args.beta_min, args.beta_max, args.step)
    _write(sweep_to_csv(rows), args.out)
    if args.out is not None and not args.no_figure:
        from .plotting import figure_path, plot_sweep

        plot_sweep(rows, args.figure or figure_path(args.out))
    return EXIT_OK


def _read_seeds(path) -> list[int]:
    seeds = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            seeds.append(int(line))
    return seeds


def cmd_experiment(args) -> int:
    p = _params(args)
    if args.seeds is not None:
        seeds = _read_seeds(args.seeds)
    elif args.n_seeds is not None:
        seeds = list(range(args.seed, args.seed + args.n_seeds))
    else:
        seeds = [args.seed]
    opts = ExperimentOptions(exact_limit=args.exact_limit, exact_budget=args.budget, workers=args.threads)
    records = run_experiment(p, seeds, opts)
    fmt = "json" if args.json else "csv"
    text = emit(records, fmt)
    _write(text, args.out)
    if args.out is not None and not args.no_figure:
        from .plotting import figure_path, plot_experiment

        plot_experiment(records, args.figure or figure_path(args.out))
    if args.out is not None:
        print(json.dumps(summarize(records)), file=sys.stderr)
    return EXIT_OK


def _add_model(sp, required_beta=True):
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--alpha", type=float, help="log of the graph scale")
    g.add_argument("--e-alpha", type=float, help="graph scale e^alpha, given directly")
    sp.add_argument("--beta", type=float, required=required_beta, help="power-law exponent (> 2)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plgvc", description="Vertex cover rounding on random power-law graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("degseq", help="print the model degree sequence")
    _add_model(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_degseq)

    sp = sub.add_parser("gen", help="sample a multigraph")
    _add_model(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    for name, func, help_ in (("lp", cmd_lp, "half-integral LP optimum"),
                              ("round", cmd_round, "LP rounding and ratio decomposition")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("exact", help="exact minimum vertex cover")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("bounds", help="analytic ratio bounds")
    _add_model(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("sweep", help="ratio bounds over a beta grid")
    sp.add_argument("--beta-min", type=float, default=2.05)
    sp.add_argument("--beta-max", type=float, default=4.0)
    sp.add_argument("--step", type=float, default=0.01)
    sp.add_argument("--out")
    sp.add_argument("--figure", help="figure path (default: next to --out, .png)")
    sp.add_argument("--no-figure", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("experiment", help="seeded end-to-end runs")
    _add_model(sp)
    seeds = sp.add_mutually_exclusive_group()
    seeds.add_argument("--seeds", help="file with one seed per line")
    seeds.add_argument("--n-seeds", type=int, help="use seeds --seed .. --seed+N-1")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=1, help="worker processes")
    sp.add_argument("--exact-limit", type=int, default=60, help="run the exact solver when n <= this")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    sp.add_argument("--figure", help="figure path (default: next to --out, .png)")
    sp.add_argument("--no-figure", action="store_true")
    sp.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameters, InvalidInput, bounds.DomainError, GraphFormatError, ValueError) as exc:
        print(f"plgvc: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except OSError as exc:
        print(f"plgvc: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
