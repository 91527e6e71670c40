import math

import pytest

import uavbs


def test_reference_config_outage():
    cfg = uavbs.parse_config("")
    assert cfg.system.M == 3
    report = uavbs.system_outage(cfg.scenario, cfg.system, cfg.channel)
    assert len(report.per_tag) == 3
    assert 0.0 < report.system_avg < 1.0
    assert report.system_avg == pytest.approx(sum(report.per_tag) / 3, rel=1e-15)


def test_special_function_and_channel():
    assert uavbs.reg_lower_inc_gamma(2.0, 1.0) == pytest.approx(1 - 2 / math.e, abs=1e-15)
    ch = uavbs.ChannelParams()
    link = uavbs.make_link_stats(50.0, 50.0, ch)
    assert link.theta_deg == pytest.approx(90.0)
    assert link.omega_los == pytest.approx(4e-4)


def test_energy_outage_worked_value():
    ch = uavbs.ChannelParams()
    p = uavbs.SystemParams()
    link = uavbs.make_link_stats(50.0, 50.0, ch)
    assert uavbs.energy_outage(1, link, p, ch) == pytest.approx(0.5940863675439111, rel=1e-12)


def test_monte_carlo_agrees():
    cfg = uavbs.parse_config("")
    mc = uavbs.McConfig()
    mc.trials = 100_000
    est = uavbs.mc_system_outage(cfg.scenario, cfg.system, cfg.channel, mc)
    exact = uavbs.system_outage(cfg.scenario, cfg.system, cfg.channel).system_avg
    assert abs(est.value - exact) <= 3 * est.half_width_95


def test_optimize_and_feasibility():
    cfg = uavbs.parse_config("[SystemParams]\nE_total = 2100\n")
    region = uavbs.feasible_region(cfg.scenario, cfg.system)
    assert (region.lo, region.hi) == (92.0, 300.0)
    r = uavbs.optimize_location(cfg.scenario, cfg.system, cfg.channel)
    assert region.lo <= r.x1_star <= region.hi
    assert uavbs.mission_energy(r.x1_star, cfg.scenario, cfg.system) <= cfg.system.E_total


def test_errors_are_typed():
    with pytest.raises(uavbs.ConfigError, match="cfg:1"):
        uavbs.parse_config("[Bogus]\n", "cfg")
    cfg = uavbs.parse_config("[SystemParams]\nE_total = 1\n")
    with pytest.raises(uavbs.InfeasibleBudget):
        uavbs.optimize_location(cfg.scenario, cfg.system, cfg.channel)
    assert issubclass(uavbs.QuadratureError, uavbs.NumericalError)


def test_mc_validate_is_reproducible():
    cfg = uavbs.parse_config("[McConfig]\ntrials = 20000\n[Sweep]\nsteps = 2\n")
    ok, first = uavbs.mc_validate(cfg)
    _, second = uavbs.mc_validate(cfg, threads=1)
    assert first == second
    assert "checks passed" in first
    assert ok
