"""End-to-end experiments: generate, simplify, solve the LP, round, measure.

Records are emitted as CSV (canonical, 12 significant digits) or JSON. Seeds
may be processed by several worker processes; output order always follows the
seed list.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import bounds
from .degree_model import PlgParams, build_degree_sequence
from .exact import DEFAULT_BUDGET, exact_vc
from .generator import generate
from .graph import edge_census, simplify
from .lp_half import solve_half_integral
from .rounding import check_guarantees, compute_vstar, round_cover, vstar_lower_bound_witness


@dataclass
class ExperimentOptions:
    exact_limit: int = 60
    exact_budget: int = DEFAULT_BUDGET
    workers: int = 1


@dataclass
class ExperimentRecord:
    seed: int
    alpha: float
    beta: float
    status: str = "ok"
    n: Optional[int] = None
    m_multi: Optional[int] = None
    m_simple: Optional[int] = None
    loops: Optional[int] = None
    parallels: Optional[int] = None
    x_v_halves: Optional[int] = None
    x_vstar_halves: Optional[int] = None
    y_v: Optional[int] = None
    y_vstar: Optional[int] = None
    ratio_lp: Optional[float] = None
    ratio_vstar: Optional[float] = None
    ratio_composite: Optional[float] = None  # 2 - x(V*)/(2 x(V))
    vstar_witness: Optional[int] = None
    guarantees_ok: Optional[bool] = None
    exact_opt: Optional[int] = None
    exact_timed_out: Optional[bool] = None
    ratio_exact: Optional[float] = None
    bound_rho_first: Optional[float] = None
    bound_rho_refined: Optional[float] = None


FIELDNAMES = [f.name for f in fields(ExperimentRecord)]


def _div(a, b) -> Optional[float]:
    return a / b if b else None


def measure(p: PlgParams, seed: int, opts: ExperimentOptions) -> ExperimentRecord:
    """One seeded run; generation or solver failures become a failed record."""
    rec = ExperimentRecord(seed=seed, alpha=p.alpha, beta=p.beta)
    try:
        mg = generate(build_degree_sequence(p), seed)
        census = edge_census(mg)
        g = simplify(mg)
        x = solve_half_integral(g)
        y = round_cover(g, x)
        vstar = compute_vstar(g)
    except Exception as exc:  # noqa: BLE001 - recorded, not raised
        rec.status = f"failed: {type(exc).__name__}: {exc}"
        return rec
    rec.n = g.n
    rec.m_multi = census["m_multi"]
    rec.m_simple = census["m_simple"]
    rec.loops = census["loops"]
    rec.parallels = census["parallels"]
    rec.x_v_halves = x.cost_halves
    rec.x_vstar_halves = sum(x.halves[v] for v in vstar)
    rec.y_v = y.cost
    rec.y_vstar = sum(y.y[v] for v in vstar)
    rec.ratio_lp = _div(2 * rec.y_v, rec.x_v_halves)
    rec.ratio_vstar = _div(2 * rec.y_vstar, rec.x_vstar_halves)
    if rec.x_v_halves:
        rec.ratio_composite = 2 - rec.x_vstar_halves / (2 * rec.x_v_halves)
    rec.vstar_witness = vstar_lower_bound_witness(g)
    rec.guarantees_ok = check_guarantees(g, x, y).all
    if g.n <= opts.exact_limit:
        res = exact_vc(g, opts.exact_budget)
        rec.exact_opt = res.opt_size
        rec.exact_timed_out = res.timed_out
        if not res.timed_out:
            rec.ratio_exact = _div(rec.y_v, res.opt_size)
    rec.bound_rho_first = bounds.rho_first(p.beta)
    if p.beta > bounds.REFINED_BETA_MIN:
        rec.bound_rho_refined = bounds.rho_refined(p.beta, p.scale)
    return rec


def _measure_args(args):
    return measure(*args)


def run_experiment(p: PlgParams, seeds: Sequence[int], opts: Optional[ExperimentOptions] = None) -> list[ExperimentRecord]:
    opts = opts or ExperimentOptions()
    jobs = [(p, int(s), opts) for s in seeds]
    if opts.workers <= 1 or len(jobs) <= 1:
        return [_measure_args(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=opts.workers) as pool:
        return list(pool.map(_measure_args, jobs))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def records_to_csv(records: Iterable[ExperimentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDNAMES)
    for r in records:
        w.writerow([_cell(getattr(r, k)) for k in FIELDNAMES])
    return buf.getvalue()


def records_to_json(records: Iterable[ExperimentRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def records_from_json(text: str) -> list[ExperimentRecord]:
    return [ExperimentRecord(**d) for d in json.loads(text)]


def emit(records: Sequence[ExperimentRecord], fmt: str = "csv", path=None) -> str:
    """Serialise records; write to ``path`` when given. Returns the text."""
    if fmt == "csv":
        text = records_to_csv(records)
    elif fmt == "json":
        text = records_to_json(records)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        Path(path).write_text(text)
    return text


@dataclass(frozen=True)
class SweepRow:
    beta: float
    rho_first: float
    rho_refined_asymptotic: Optional[float]


def beta_grid(beta_min: float, beta_max: float, step: float) -> list[float]:
    if not step > 0:
        raise ValueError("step must be positive")
    if not 2 < beta_min <= beta_max:
        raise bounds.DomainError("need 2 < beta_min <= beta_max")
    count = int(math.floor((beta_max - beta_min) / step + 1e-9)) + 1
    return [round(beta_min + i * step, 10) for i in range(count)]


def sweep_beta(beta_min: float, beta_max: float, step: float) -> list[SweepRow]:
    rows = []
    for b in beta_grid(beta_min, beta_max, step):
        refined = bounds.rho_refined(b) if b > bounds.REFINED_BETA_MIN else None
        rows.append(SweepRow(b, bounds.rho_first(b), refined))
    return rows


def sweep_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["beta", "rho_first", "rho_refined_asymptotic"])
    for r in rows:
        w.writerow([_cell(r.beta), _cell(r.rho_first), _cell(r.rho_refined_asymptotic)])
    return buf.getvalue()


def summarize(records: Sequence[ExperimentRecord]) -> dict:
    ok = [r for r in records if r.status == "ok"]

    def mean(key):
        vals = [getattr(r, key) for r in ok if getattr(r, key) is not None]
        return sum(vals) / len(vals) if vals else None

    return {
        "runs": len(records),
        "failed": len(records) - len(ok),
        "mean_ratio_lp": mean("ratio_lp"),
        "mean_ratio_composite": mean("ratio_composite"),
        "mean_ratio_exact": mean("ratio_exact"),
        "mean_x_vstar": (mean("x_vstar_halves") or 0) / 2 if ok else None,
        "all_guarantees_ok": all(r.guarantees_ok for r in ok),
    }
