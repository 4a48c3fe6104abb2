"""Marginal distribution families: CDF, survival, quantile."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rocopula import (
    Exponential,
    Normal,
    ParameterError,
    marginal_from_dict,
    standard_normal_cdf,
    standard_normal_quantile,
)

from oracles import (
    bisect_quantile,
    exponential_cdf_quadrature,
    normal_cdf_oracle,
    normal_quantile_oracle,
)

# frozen from tests/oracles.py
EXP_023_CDF_AT_3 = 0.49842393093394455  # quadrature of the density
Z_0975 = 1.9599639845400545  # bisection on the series/CF normal CDF
NDTR_1 = 0.8413447460685428


def test_normal_cdf_at_zero_is_half():
    assert Normal(0.0, 1.0).cdf(0.0) == 0.5


def test_exponential_cdf_zero_at_support_boundary():
    assert Exponential(1.0).cdf(0.0) == 0.0
    assert Exponential(1.0).cdf(-3.0) == 0.0


def test_exponential_cdf_against_density_quadrature():
    got = Exponential(0.23).cdf(3.0)
    assert got == pytest.approx(EXP_023_CDF_AT_3, abs=1e-12)
    assert got == pytest.approx(exponential_cdf_quadrature(0.23, 3.0), abs=1e-12)


def test_normal_survival_at_zero():
    assert Normal(0.0, 1.0).survival(0.0) == 0.5


def test_survival_complements_cdf():
    rng = np.random.default_rng(7)
    for m in (Normal(0.4, 2.2), Normal(-1.0, 0.3), Exponential(0.8), Exponential(4.0)):
        xs = rng.uniform(-5.0, 5.0, size=200)
        assert np.all(np.abs(m.cdf(xs) + m.survival(xs) - 1.0) < 1e-15)


def test_exponential_survival_at_log_two():
    assert Exponential(1.0).survival(math.log(2.0)) == pytest.approx(0.5, abs=1e-15)


def test_normal_quantile_median():
    assert Normal(0.0, 1.0).quantile(0.5) == 0.0


def test_exponential_quantile_closed_form():
    for lam in (0.17, 1.0, 3.5):
        assert Exponential(lam).quantile(-math.expm1(-1.0)) == pytest.approx(
            1.0 / lam, rel=1e-12
        )


def test_normal_quantile_against_bisection_oracle():
    assert Normal(0.0, 1.0).quantile(0.975) == pytest.approx(Z_0975, abs=1e-9)


def test_quantile_rejects_boundary_probabilities():
    for m in (Normal(0.0, 1.0), Exponential(1.0)):
        for p in (0.0, 1.0, -0.1, 1.1, float("nan")):
            with pytest.raises(ParameterError):
                m.quantile(p)


def test_standard_normal_cdf_values():
    assert standard_normal_cdf(0.0) == 0.5
    assert standard_normal_cdf(1.0) == pytest.approx(NDTR_1, abs=1e-12)


def test_standard_normal_cdf_matches_series_oracle_widely():
    xs = np.linspace(-8.0, 8.0, 161)
    for x in xs:
        assert standard_normal_cdf(x) == pytest.approx(normal_cdf_oracle(float(x)), abs=1e-12)


def test_standard_normal_round_trip():
    assert standard_normal_quantile(standard_normal_cdf(1.7)) == pytest.approx(1.7, abs=1e-9)


def test_standard_normal_quantile_rejects_outside_unit():
    for p in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(ParameterError):
            standard_normal_quantile(p)


def test_quantile_matches_generic_bisection():
    m = Normal(1.3, 0.7)
    for p in (0.05, 0.31, 0.5, 0.77, 0.99):
        want = bisect_quantile(m.cdf, p, -20.0, 20.0)
        assert m.quantile(p) == pytest.approx(want, abs=1e-9)


@given(st.floats(-30.0, 30.0), st.floats(-30.0, 30.0))
def test_normal_cdf_monotone(x1, x2):
    m = Normal(0.7, 2.0)
    lo, hi = min(x1, x2), max(x1, x2)
    assert m.cdf(lo) <= m.cdf(hi)


@given(st.floats(0.0, 50.0), st.floats(0.0, 50.0))
def test_exponential_cdf_monotone(x1, x2):
    m = Exponential(0.6)
    lo, hi = min(x1, x2), max(x1, x2)
    assert m.cdf(lo) <= m.cdf(hi)


@settings(max_examples=200)
@given(st.floats(-6.0, 6.0))
def test_normal_quantile_round_trip_property(x):
    m = Normal(-0.4, 1.7)
    y = m.mu + m.sigma * x
    assert abs(m.quantile(m.cdf(y)) - y) < 1e-8 * (1.0 + abs(y))


def test_round_trip_thousand_points():
    rng = np.random.default_rng(11)
    m = Normal(0.2, 1.4)
    xs = m.mu + m.sigma * rng.uniform(-5.5, 5.5, size=1000)
    back = np.array([m.quantile(m.cdf(x)) for x in xs])
    assert np.all(np.abs(back - xs) < 1e-8 * (1.0 + np.abs(xs)))
    e = Exponential(0.23)
    ys = rng.uniform(1e-3, 30.0, size=1000)
    back = np.array([e.quantile(e.cdf(y)) for y in ys])
    assert np.all(np.abs(back - ys) < 1e-8 * (1.0 + np.abs(ys)))


def test_exponential_memorylessness():
    e = Exponential(0.9)
    rng = np.random.default_rng(3)
    for _ in range(100):
        x, y = rng.uniform(0.0, 8.0, size=2)
        assert abs(e.survival(x + y) - e.survival(x) * e.survival(y)) < 1e-12


def test_parameter_validation():
    with pytest.raises(ParameterError):
        Normal(0.0, 0.0)
    with pytest.raises(ParameterError):
        Normal(0.0, -1.0)
    with pytest.raises(ParameterError):
        Exponential(0.0)
    with pytest.raises(ParameterError):
        Exponential(-2.0)


def test_dict_round_trip():
    for m in (Normal(0.3, 1.1), Exponential(0.23)):
        assert marginal_from_dict(m.to_dict()) == m
