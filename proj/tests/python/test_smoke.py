"""Python-facing smoke tests for the wavebreak extension module.

Run directly (python test_smoke.py) or via ctest; only needs numpy.
"""

import math

import numpy as np

import wavebreak as wb


def test_grid_and_derivative():
    grid = wb.GridSpec(10.0, 256)
    x = -10.0 + 20.0 / 256 * np.arange(256)
    f = wb.Field(grid, np.sin(math.pi * x / 10.0))
    df = wb.derivative(f, 1)
    expected = math.pi / 10.0 * np.cos(math.pi * x / 10.0)
    assert np.max(np.abs(df.values - expected)) < 1e-10


def test_norms_and_tail():
    grid = wb.GridSpec(20.0, 512)
    x = -20.0 + 40.0 / 512 * np.arange(512)
    f = wb.Field(grid, np.exp(-x * x))
    n = wb.norms(f)
    assert abs(n["l2_norm_squared"] - math.sqrt(math.pi / 2.0)) < 1e-10
    assert wb.tail_ratio(f) < 1e-12


def test_multipliers_and_kernels():
    assert wb.ModelSpec.burgers().multiplier(2.0) == 0
    m = wb.ModelSpec.fkdv(-0.5).multiplier(2.0)
    assert abs(m.imag - math.sqrt(2.0)) < 1e-12
    assert abs(wb.gamma_ratio(2.0) - 1.0) < 1e-12
    assert abs(wb.gamma_ratio(3.0) - 2.0 / math.pi) < 1e-12
    k1 = wb.whitham_kernel(1.0)
    assert 0.0 < k1 <= 1.0 / math.sqrt(2.0 * math.pi)
    assert abs(wb.bessel_kernel(2.0, 1.0) - 0.5 * math.exp(-1.0)) < 1e-8


def test_criterion_and_interval():
    grid = wb.GridSpec(20.0, 512)
    x = -20.0 + 40.0 / 512 * np.arange(512)
    u0 = wb.Field(grid, -50.0 * x * np.exp(-x * x / 2.0))
    r = wb.whitham_criterion(u0, 0.1, 0.55)
    assert abs(r["gamma_u"] - 1.0) < 1e-8
    assert abs(r["lhs"] - 50.0) < 1e-6
    assert r["t_lo"] < 1.0 / r["lhs"] < r["t_hi"]
    if r["holds"]:
        assert r["lhs"] > r["rhs"]


def test_burgers_breaking_time():
    est = wb.simulate_sine(amplitude=1.0, n=512, m_cap_factor=10.0)
    assert est["valid"]
    assert est["stop_reason"] == "m_cap"
    assert abs(est["t_star_est"] - 1.0) < 0.02


def test_operator_identities():
    grid = wb.GridSpec(20.0, 256)
    x = -20.0 + 40.0 / 256 * np.arange(256)
    f = wb.Field(grid, np.exp(-x * x) * (1.0 + 0.5 * x))
    commute, orth = wb.operator_identities(wb.ModelSpec.whitham(), f)
    assert commute < 1e-10
    assert orth < 1e-10


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
