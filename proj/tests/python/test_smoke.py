"""Smoke tests for the Python bindings."""

import math
import os

import bqed


def iso_atom():
    path = os.path.join(os.environ["BQED_ATOM_DIR"], "twolevel_iso.json")
    return bqed.load_atom_file(path)


def test_atom_round_trip():
    spec = iso_atom()
    assert spec.initial_state == "e"
    assert [lv.id for lv in spec.levels] == ["g", "e"]
    assert bqed.validate(spec) == []
    transitions = bqed.transitions_from(spec, "e")
    assert len(transitions) == 1
    assert transitions[0]["partner"] == "g"
    assert transitions[0]["omega"] == 1.0
    pol = transitions[0]["polarization"]
    assert math.isclose(pol[0][0], 1.0 / 3.0, rel_tol=1e-14)


def test_ground_state_is_exactly_stable():
    spec = iso_atom()
    bd = bqed.rate_inertial(spec, "g", 0.5)
    assert bd["total"] == 0.0
    assert bd["unbounded_total"] == 0.0
    assert all(e["channel"] == "excitation" for e in bd["entries"])


def test_boundary_modulation_fixture():
    assert math.isclose(bqed.f_x(1.0), 1.89559860738276031219, rel_tol=1e-13)
    assert math.isclose(
        bqed.f_accel("xx", 1.0, 0.0), bqed.f_x(1.0), rel_tol=0.0, abs_tol=0.0
    )


def test_planck_fixture():
    assert math.isclose(
        bqed.planck_n(1.0, 1.0), 0.00187093659866064410078, rel_tol=1e-14
    )
    assert bqed.planck_n(1.0, 0.0) == 0.0


def test_accelerated_rate_matches_detailed_balance():
    spec = iso_atom()
    upper = bqed.rate_accelerated(spec, "e", 0.5, 1.0, e2=1.0)
    lower = bqed.rate_accelerated(spec, "g", 0.5, 1.0, e2=1.0)
    ratio = -lower["boundary_total"] / upper["boundary_total"]
    assert math.isclose(ratio, math.exp(-2.0 * math.pi), rel_tol=1e-12)


def test_sweep_header_and_shape():
    spec = iso_atom()
    csv = bqed.run_sweep(spec, "e", "z", 0.5, 1.5, points=3)
    lines = csv.strip().split("\n")
    assert lines[0] == "variable,omega_bd,pair,mechanism,part,channel,rate"
    assert len(lines) == 1 + 3 * 15


def test_crossing_present_for_weak_acceleration():
    res = bqed.nonthermal_crossing(1.0, 0.1, "zz", 0.01, 20.0)
    assert res["component"] == "zz"
    assert len(res["roots"]) >= 1
    assert all(r <= 1e-10 for r in res["residuals"])
