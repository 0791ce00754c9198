"""Smoke tests for the python module: the main operations round-trip through
their JSON surfaces and reproduce the pinned values."""

import json

import pairstab


def test_version():
    assert pairstab.__version__


def test_kernel_dimensions():
    assert pairstab.gamma_dimension(24, 1) == 675
    assert pairstab.gamma_basis_size(24, 1) == 675
    assert pairstab.gamma_basis_size(1, 1) == 8
    assert pairstab.wprime_dimension(12) == 552


def test_pair_structure():
    v, w0 = pairstab.sl3_pair_json(12)
    assert json.loads(pairstab.contract_json(w0))["terms"] == []
    assert json.loads(pairstab.act_lie_json(2, 3, w0))["terms"] == []
    twice = json.loads(pairstab.act_lie_json(2, 3, pairstab.act_lie_json(2, 3, v)))
    assert twice["terms"] == [
        {"component": 0, "alpha": [0, 0, 0], "beta": [0, 0, 13], "coeff": "2"}
    ]


def test_destabilizing_curve_orders():
    v, w = pairstab.sl3_shifted_pair_json(12, seed=1)
    for mu in (1, 2, 3):
        verdict = json.loads(pairstab.destabilizes(pairstab.sl3_mu_curve_json(mu), v, w))
        assert verdict["kind"] == "destabilized"
        assert verdict["ord_v"] == 2 - 26 * mu
        assert verdict["ord_w"] == min(-23 * mu, 3 - 26 * mu)


def test_sl2_reducible_gap():
    v, w = pairstab.sl2_reducible_pair_json(3)
    sampled = json.loads(pairstab.sample_numerical_semistability(v, w, seed=1, samples=120))
    assert sampled["kind"] == "numerically-semistable-sample-pass"
    verdict = json.loads(pairstab.destabilizes(pairstab.sl2_reducible_curve_json(), v, w))
    assert (verdict["ord_v"], verdict["ord_w"]) == (-2, -1)


def test_torus_and_q():
    v, _ = pairstab.sl3_pair_json(12)
    destabilizing, witness = pairstab.torus_destabilizes(v)
    assert destabilizing and witness == (11, 9)
    assert pairstab.q_obstruction(4, 6, 0, 2) == "-8"
    assert pairstab.degree_of_space(v) == 26


def test_scenario_report():
    report = json.loads(pairstab.verify("sl2-reducible", n=3, samples=100, seed=2))
    assert report["overall"] == "pass"
    ids = {item["id"] for item in report["checklist"]}
    assert "sl2red.curve-destabilized" in ids


def test_svg():
    v, _ = pairstab.sl3_pair_json(12)
    assert pairstab.polytope_svg(v).startswith("<svg")
