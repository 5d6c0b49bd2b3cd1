import math

import pytest

from plgvc.bounds import zeta
from plgvc.degree_model import InvalidParameters, PlgParams, build_degree_sequence, expected_counts


def independent_counts(scale, beta):
    # integer-only Delta and floor computation for integral scale and beta
    delta = 1
    while (delta + 1) ** beta <= scale:
        delta += 1
    return [scale // i ** beta for i in range(1, delta + 1)]


def test_sequence_beta3_scale1000():
    p = PlgParams.from_scale(1000, 3)
    assert p.max_degree == 10
    seq = build_degree_sequence(p)
    assert list(seq.counts) == [1000, 125, 37, 15, 8, 4, 2, 1, 1, 1]
    assert list(seq.counts) == independent_counts(1000, 3)
    assert seq.total_vertices == 1194
    assert seq.total_degree == 1526


def test_parity_fix():
    seq = build_degree_sequence(PlgParams.from_scale(1, 3))
    assert seq.counts == (2,)
    assert seq.total_degree == 2


def test_max_degree_fractional_beta():
    assert PlgParams.from_scale(100, 2.5).max_degree == math.floor(100 ** (1 / 2.5)) == 6


@pytest.mark.parametrize("scale", [10, 999, 1000, 12345, 10 ** 5, 10 ** 6])
@pytest.mark.parametrize("beta", [3, 4])
def test_counts_match_integer_floor(scale, beta):
    seq = build_degree_sequence(PlgParams.from_scale(scale, beta))
    expect = independent_counts(scale, beta)
    assert list(seq.counts[1:]) == expect[1:]
    assert seq.counts[0] - expect[0] in (0, 1)
    assert seq.total_degree % 2 == 0


def test_alpha_and_scale_agree():
    a = PlgParams(alpha=math.log(5000), beta=2.7)
    b = PlgParams.from_scale(5000, 2.7)
    assert build_degree_sequence(a) == build_degree_sequence(b)


def test_invalid():
    with pytest.raises(InvalidParameters):
        PlgParams(alpha=3.0, beta=2.0)
    with pytest.raises(InvalidParameters):
        PlgParams.from_scale(0.5, 3)


def test_expected_counts():
    n_est, m_est = expected_counts(PlgParams.from_scale(1000, 3))
    assert n_est == pytest.approx(1202.0569031595942, abs=1e-9)
    assert m_est == pytest.approx(822.4670334241132, abs=1e-9)
    assert abs(1194 - n_est) / 1194 < 0.01


def test_expected_counts_large_beta():
    n_est, _ = expected_counts(PlgParams.from_scale(1000, 40))
    assert n_est == pytest.approx(1000, rel=1e-9)


@pytest.mark.parametrize("scale, tol", [(1e3, 1e-2), (1e4, 1e-2), (1e6, 1e-3)])
def test_vertex_count_converges(scale, tol):
    seq = build_degree_sequence(PlgParams.from_scale(scale, 3))
    n = seq.total_vertices
    assert abs(n - zeta(3) * scale) / n < tol
