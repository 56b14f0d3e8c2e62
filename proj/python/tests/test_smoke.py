import json
import math

import pytest

import setfrac


def test_interval_and_hausdorff():
    a = setfrac.Interval(-1.0, 1.0)
    b = setfrac.Interval(0.0, 3.0)
    assert setfrac.hausdorff(a, b) == 2.0
    assert setfrac.hausdorff_to_zero(setfrac.Interval(-5.0, -3.0)) == 5.0
    assert 0.5 in a
    with pytest.raises(ValueError):
        setfrac.Interval(1.0, 0.0)


def test_gamma():
    assert setfrac.gamma_fn(1.5) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-14)
    with pytest.raises(ValueError):
        setfrac.gamma_fn(0.0)


def test_rl_scalar_power_rule():
    n = 64
    values = [i / n for i in range(n + 1)]
    got = setfrac.rl_scalar(0.0, 1.0, values, 0.5)
    assert got == pytest.approx(math.gamma(2) / math.gamma(2.5), rel=1e-12)


def test_setvalued_integral():
    f = setfrac.builtin_map("sym_linear", 0.0, 1.0, 256)
    g = setfrac.rl_setvalued(f, 0.5)
    assert len(g) == 257
    assert g[256].hi == pytest.approx(0.752252778064, rel=1e-11)
    assert g[256].lo == -g[256].hi
    oracle = setfrac.rl_selection_oracle(f, 0.7, 256, samples=200)
    hull = setfrac.rl_setvalued(f, 0.7)[256]
    assert min(oracle) == pytest.approx(hull.lo, abs=1e-9)
    assert max(oracle) == pytest.approx(hull.hi, abs=1e-9)


def test_map_from_lists_and_regularity():
    f = setfrac.GridMap(0.0, 1.0, [0.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    assert setfrac.total_variation(f) == 2.0
    assert setfrac.lipschitz_constant(f) == 2.0
    assert f(0.25).hi == 0.5
    g = setfrac.rl_setvalued(f, 1.5)
    assert setfrac.lipschitz_constant(g) <= setfrac.bound_L0(1.5, setfrac.sup_bound(f), 0.0, 1.0) + 1e-9
    assert setfrac.continuity_modulus(f, 1.0, 0.0, 1.0) == pytest.approx(0.5, rel=1e-12)


def test_selections():
    g = setfrac.rl_setvalued(setfrac.builtin_map("sym_linear", 0.0, 1.0, 8), 1.0)
    lo, hi = setfrac.extremal_selections(g)
    assert hi[-1] == pytest.approx(0.5)
    assert lo[-1] == pytest.approx(-0.5)
    cert = json.loads(setfrac.regular_selection(g, "lipschitz"))
    assert cert["kind"] == "lower-extremal"
    assert cert["membership_checked"]


def test_inclusion_builtin_and_callable():
    traj = setfrac.solve_inclusion("constant", {"c": 1.0}, segments=1024)
    assert traj["u"][-1] == pytest.approx(1.0 / math.gamma(2.5), abs=1e-4)
    traj = setfrac.solve_inclusion(lambda t, u: (t, t), segments=1024)
    assert traj["u"][-1] == pytest.approx(1.0 / math.gamma(3.5), abs=1e-4)
    funnel = setfrac.solution_funnel("symmetric")
    assert funnel["hi"][-1] == pytest.approx(0.752252778064, rel=1e-10)
    with pytest.raises(ValueError):
        setfrac.solve_inclusion("constant", alpha=2.5)
    with pytest.raises(setfrac.NonConvergence):
        setfrac.solve_inclusion("linear_u", {"L": 6.0}, max_iter=2)


def test_verify_is_deterministic():
    a = setfrac.verify(rhos=[1.5], segments=64, samples=100)
    b = setfrac.verify(rhos=[1.5], segments=64, samples=100)
    assert a == b
    entries = json.loads(a)
    assert all(e["pass"] for e in entries)
