import csv
import io
import json

import pytest
from hypothesis import given, settings, strategies as st

from plgvc.bounds import ex_vstar_lower, rho_first, xv_upper
from plgvc.degree_model import PlgParams, build_degree_sequence
from plgvc.harness import (FIELDNAMES, ExperimentOptions, ExperimentRecord, emit, records_from_json, records_to_csv,
                           run_experiment, summarize, sweep_beta, sweep_to_csv)


@pytest.fixture(scope="module")
def records_1000():
    return run_experiment(PlgParams.from_scale(1000, 3), list(range(10)))


def test_ten_records(records_1000):
    assert len(records_1000) == 10
    seq = build_degree_sequence(PlgParams.from_scale(1000, 3))
    for r in records_1000:
        assert r.status == "ok"
        assert r.ratio_lp <= 2
        assert 4 * r.y_vstar <= 3 * r.x_vstar_halves
        assert r.guarantees_ok
        assert r.m_simple + r.parallels + r.loops == r.m_multi == seq.total_degree // 2
        assert r.n == seq.total_vertices
        assert r.x_v_halves <= 2 * xv_upper(3, 1000)
        assert r.ratio_composite == pytest.approx(2 - r.x_vstar_halves / (2 * r.x_v_halves))
        assert r.exact_opt is None


def test_exact_fields_on_small_graphs():
    recs = run_experiment(PlgParams.from_scale(30, 2.5), list(range(8)))
    for r in recs:
        assert r.exact_opt is not None and not r.exact_timed_out
        assert r.x_v_halves <= 2 * r.exact_opt
        assert r.exact_opt <= r.y_v
        assert r.ratio_exact <= r.ratio_lp


def test_failed_seed_is_recorded():
    (rec,) = run_experiment(PlgParams.from_scale(100, 3), [-5])
    assert rec.status.startswith("failed")
    assert rec.n is None
    text = emit([rec])
    assert len(text.splitlines()) == 2


def test_emit_empty_and_single(records_1000):
    assert emit([]) == ",".join(FIELDNAMES) + "\n"
    assert len(emit(records_1000[:1]).splitlines()) == 2


def test_csv_number_format(records_1000):
    rows = list(csv.DictReader(io.StringIO(records_to_csv(records_1000))))
    r = records_1000[0]
    assert rows[0]["ratio_lp"] == format(r.ratio_lp, ".12g")
    assert rows[0]["exact_opt"] == ""
    assert rows[0]["guarantees_ok"] == "true"


def test_json_round_trip(records_1000, tmp_path):
    path = tmp_path / "r.json"
    emit(records_1000, "json", path)
    assert records_from_json(path.read_text()) == records_1000


record_strategy = st.builds(
    ExperimentRecord,
    seed=st.integers(0, 2 ** 64 - 1),
    alpha=st.floats(0, 20, allow_nan=False),
    beta=st.floats(2.01, 5, allow_nan=False),
    n=st.one_of(st.none(), st.integers(0, 10 ** 6)),
    ratio_lp=st.one_of(st.none(), st.floats(1, 2, allow_nan=False)),
    guarantees_ok=st.one_of(st.none(), st.booleans()),
)


@given(st.lists(record_strategy, max_size=5))
@settings(max_examples=50)
def test_json_round_trip_property(recs):
    assert records_from_json(emit(recs, "json")) == recs


def test_emit_bad_format():
    with pytest.raises(ValueError):
        emit([], "xml")


def test_emit_byte_stable(records_1000):
    again = run_experiment(PlgParams.from_scale(1000, 3), list(range(10)))
    assert emit(again) == emit(records_1000)


def test_parallel_matches_serial():
    p = PlgParams.from_scale(300, 2.5)
    serial = emit(run_experiment(p, list(range(6)), ExperimentOptions(workers=1)))
    parallel = emit(run_experiment(p, list(range(6)), ExperimentOptions(workers=3)))
    assert serial == parallel


def test_sweep_rows():
    rows = sweep_beta(2.5, 3.0, 0.5)
    assert [r.beta for r in rows] == [2.5, 3.0]
    assert all(r.rho_refined_asymptotic is not None for r in rows)
    (row,) = sweep_beta(2.3, 2.3, 0.1)
    assert row.rho_refined_asymptotic is None
    text = sweep_to_csv([row])
    assert text.splitlines()[1].endswith(",")


def test_sweep_full_range():
    rows = sweep_beta(2.05, 4, 0.01)
    assert len(rows) == 196
    for r in rows:
        assert r.rho_first < 2
        assert (r.rho_refined_asymptotic is None) == (r.beta <= 2.424)
        if r.rho_refined_asymptotic is not None:
            assert r.rho_refined_asymptotic < 2


def test_summary(records_1000):
    s = summarize(records_1000)
    assert s["runs"] == 10 and s["failed"] == 0 and s["all_guarantees_ok"]


@pytest.mark.slow
def test_mean_xvstar_above_expectation_bound():
    recs = run_experiment(PlgParams.from_scale(1e4, 3), list(range(50)))
    mean = sum(r.x_vstar_halves for r in recs) / len(recs) / 2
    assert mean >= ex_vstar_lower(3, 1e4)


@pytest.mark.slow
def test_mean_ratio_below_first_bound():
    recs = run_experiment(PlgParams.from_scale(1e4, 2.5), list(range(50)))
    assert sum(r.ratio_lp for r in recs) / len(recs) <= rho_first(2.5)
