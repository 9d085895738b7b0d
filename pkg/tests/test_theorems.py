import json

import pytest
from hypothesis import given, settings

from totalvis import constructors as cons
from totalvis import theorems
from totalvis.constructors import complete, cycle, path, star
from totalvis.errors import BadParameter
from totalvis.graph import parse_edge_list
from totalvis.suites import SUITES, build_instances, run_suite
from totalvis.theorems import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    ClaimVerdict,
    check_cartesian,
    check_diameter_characterization,
    check_figure,
    check_gamma_c_characterization,
    check_graph_claims,
    check_lexicographic,
)
from totalvis.visibility import SolveResult

from conftest import connected_graphs


def by_claim(verdicts):
    return {v.claim: v for v in verdicts}


def assert_no_fail(verdicts):
    bad = [v.to_dict() for v in verdicts if v.status == FAIL]
    assert not bad, bad


def test_graph_claims_on_named_graphs():
    for g in (path(5), cycle(4), cycle(7), complete(5), star(4), cons.bowtie(),
              cons.figure1(), cons.figure2(), cons.figure3(), cons.crown(4)):
        assert_no_fail(check_graph_claims(g))


def test_graph_claim_applicability():
    v = by_claim(check_graph_claims(cycle(6)))
    assert v["CYCLE_ZERO"].status == PASS
    assert v["TREE_FORMULA"].status == NOT_APPLICABLE
    assert v["BLOCK_FORMULA"].status == NOT_APPLICABLE
    t = by_claim(check_graph_claims(star(3)))
    assert t["TREE_FORMULA"].status == PASS and t["BLOCK_FORMULA"].status == PASS
    k = by_claim(check_graph_claims(complete(4)))
    assert k["GAMMAC_BOUND"].status == NOT_APPLICABLE
    assert k["COMPLETE_IFF"].status == PASS


def test_universal_vertex_claim():
    fan = cons.join_graph(complete(1), path(4))
    v = by_claim(check_graph_claims(fan))
    assert v["UNIVERSAL_IFF"].status == PASS and v["UNIVERSAL_IFF"].lhs == fan.n - 1


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=8))
def test_graph_claims_hold(g):
    assert_no_fail(check_graph_claims(g))
    assert check_diameter_characterization(g).status != FAIL
    assert check_gamma_c_characterization(g).status != FAIL


def test_characterizations():
    assert check_diameter_characterization(path(5)).status == PASS
    assert check_diameter_characterization(complete(1)).status == NOT_APPLICABLE
    assert check_gamma_c_characterization(complete(3)).status == NOT_APPLICABLE
    assert check_gamma_c_characterization(cons.figure1()).status == PASS
    big = cons.cycle(theorems.CHARACTERIZATION_MAX_N + 1)
    assert check_diameter_characterization(big).status == NOT_APPLICABLE


def test_lexicographic_examples():
    v = by_claim(check_lexicographic(cycle(5), complete(2)))
    assert v["LEX_GAMMA2"].status == PASS and v["LEX_GAMMA2"].lhs == 5
    v = by_claim(check_lexicographic(path(3), path(3)))
    assert v["LEX_U1"].status == PASS and v["LEX_U1"].lhs == 8
    v = by_claim(check_lexicographic(path(3), cycle(4)))
    assert v["LEX_U2"].status == PASS and v["LEX_U2"].lhs == 10
    v = by_claim(check_lexicographic(path(4), path(4)))
    assert v["JOIN_II"].status == PASS and v["JOIN_II"].lhs == 6
    v = by_claim(check_lexicographic(path(3), complete(2)))
    assert v["CORONA"].status == PASS and v["CORONA"].lhs == 6


def test_lexicographic_not_applicable_cases():
    v = by_claim(check_lexicographic(complete(1), cons.empty(2)))
    assert all(v[c].status == NOT_APPLICABLE for c in ("LEX_GAMMA2", "LEX_ALLBUTONE", "LEX_U1", "LEX_U2"))
    v = by_claim(check_lexicographic(complete(2), complete(3)))
    assert v["JOIN_I"].status == NOT_APPLICABLE and v["JOIN_II"].status == NOT_APPLICABLE
    assert by_claim(check_lexicographic(complete(1), complete(3)))["CORONA"].status == NOT_APPLICABLE


def test_cartesian_examples():
    v = by_claim(check_cartesian(path(3), path(3)))
    assert v["CART_INDEP_EQ"].status == PASS and v["CART_INDEP_EQ"].lhs == 4
    v = by_claim(check_cartesian(complete(5), complete(5)))
    assert v["TWIN_FORMULA"].status == PASS and v["TWIN_FORMULA"].lhs == 5
    v = by_claim(check_cartesian(cons.bowtie(), complete(3)))
    assert v["TWIN_FORMULA"].lhs == 6 and v["TWIN_FORMULA"].status == PASS
    v = by_claim(check_cartesian(star(3), path(3)))
    assert v["K2_REMARK"].status == NOT_APPLICABLE
    assert_no_fail(check_cartesian(cycle(5), complete(2)))


def test_figures():
    for name in ("figure1", "figure2", "figure3", "figure4"):
        out = check_figure(name)
        assert out and all(v.status == PASS for v in out), [v.to_dict() for v in out]
    with pytest.raises(ValueError):
        check_figure("figure9")


def test_fail_payload(monkeypatch):
    # a deliberately wrong solver must be caught, with a replayable graph attached
    def broken(g):
        return SolveResult(0, frozenset(), 0)

    monkeypatch.setattr(theorems, "mu_t", broken)
    out = check_graph_claims(complete(3))
    fails = [v for v in out if v.status == FAIL]
    assert any(v.claim == "COMPLETE_IFF" for v in fails)
    f = fails[0].to_dict()
    assert parse_edge_list(f["graph"]) == complete(3)
    assert f["values"]["mu_t"] == 0 and f["values"]["n"] == 3


def test_verdict_to_dict_order():
    d = ClaimVerdict("X", PASS, 1, 2).to_dict()
    assert list(d) == ["claim", "status", "lhs", "rhs"]
    d = ClaimVerdict("X", FAIL, {2, 1}, 2, note="n", graph="1 0\n", values={"a": {3}}, instance="i").to_dict()
    assert d == {"claim": "X", "status": FAIL, "lhs": [1, 2], "rhs": 2, "graph": "1 0\n",
                 "instance": "i", "note": "n", "values": {"a": [3]}}


# -- suites ------------------------------------------------------------------------

@pytest.mark.parametrize("suite", [s for s in SUITES if s != "all_small"])
def test_suites_pass(suite):
    max_n = {"trees": 8, "products": 12, "random": 8}.get(suite)
    report = run_suite(suite, max_n=max_n)
    assert report.instances > 0
    assert_no_fail(report.verdicts)


def test_suite_json_shape():
    report = run_suite("cycles", max_n=6)
    doc = json.loads(report.to_json())
    assert list(doc) == ["suite", "seed", "instances", "verdicts", "duration_ms"]
    assert doc["instances"] == len(build_instances("cycles", 6, 0))


def test_suite_determinism_across_threads():
    a = run_suite("random", max_n=7, seed=3, threads=1)
    b = run_suite("random", max_n=7, seed=3, threads=2)
    assert a.body() == b.body()
    assert run_suite("random", max_n=7, seed=4).body() != a.body()


def test_unknown_suite():
    with pytest.raises(BadParameter):
        build_instances("nope", 5, 0)
    with pytest.raises(BadParameter):
        build_instances("random", 1, 0)


def test_all_small_tiny():
    report = run_suite("all_small", max_n=4)
    assert report.instances == 1 + 1 + 4 + 38
    assert_no_fail(report.verdicts)


def test_characterization_examples():
    p4 = check_diameter_characterization(path(4))
    assert (p4.status, p4.lhs, p4.rhs) == (PASS, True, True)
    k3 = check_diameter_characterization(complete(3))
    assert (k3.status, k3.lhs, k3.rhs) == (PASS, True, True)
    f1 = check_diameter_characterization(cons.figure1())
    assert (f1.status, f1.lhs, f1.rhs) == (PASS, False, False)
    g = check_gamma_c_characterization(cons.corona_product(path(3), complete(2)))
    assert (g.status, g.lhs, g.rhs) == (PASS, True, True)
    for t in cons.free_trees(7):
        g = check_gamma_c_characterization(t)
        assert (g.status, g.lhs, g.rhs) == (PASS, True, True)


def test_figure1_graph_claims():
    v = by_claim(check_graph_claims(cons.figure1()))
    assert (v["DIAM_BOUND"].lhs, v["DIAM_BOUND"].rhs) == (2, 7)
    assert (v["GAMMAC_BOUND"].lhs, v["GAMMAC_BOUND"].rhs) == (2, 7)
    assert v["S_EQ_IMPLIES_P_EQ"].status == PASS and v["S_EQ_IMPLIES_P_EQ"].rhs == 2
    # gamma_c = diam - 1 here although mu_t < n - diam + 1: recorded, not failed
    assert v["DIAM_EQ_IMPLIES_GAMMAC"].status == NOT_APPLICABLE
    assert "converse gap" in v["DIAM_EQ_IMPLIES_GAMMAC"].note


def test_k3_k4_twin_formula():
    v = by_claim(check_cartesian(complete(3), complete(4)))
    assert (v["TWIN_FORMULA"].status, v["TWIN_FORMULA"].lhs) == (PASS, 4)
