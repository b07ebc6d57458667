import json
from fractions import Fraction

import pytest

from charsimple import verify
from charsimple.arith import legendre_valuation

SCHEMA = {
    "type": "object",
    "required": ["scenario", "verdict", "paper_ref", "evidence", "millis"],
    "properties": {
        "scenario": {"type": "string"},
        "verdict": {"enum": ["pass", "fail", "error"]},
        "paper_ref": {"type": "string"},
        "evidence": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["claim", "computed", "expected", "provenance"],
                "properties": {"claim": {"type": "string"}, "provenance": {"type": "string"}},
            },
        },
        "seed": {"type": "integer"},
        "millis": {"type": "integer", "minimum": 0},
    },
}


@pytest.fixture(scope="module")
def reports():
    return {r.scenario: r for r in verify.run_all()}


def rows(report):
    return {e.claim: e for e in report.evidence}


def test_all_default_scenarios_pass(reports):
    assert set(reports) == set(verify.scenario_ids(include_optional=False))
    for r in reports.values():
        assert r.verdict == "pass", (r.scenario, [e for e in r.evidence if not e.holds], r.error)
    assert verify.aggregate_passed(list(reports.values()))


def test_reports_validate(reports):
    jsonschema = pytest.importorskip("jsonschema")
    for r in reports.values():
        doc = json.loads(json.dumps(r.to_json()))
        jsonschema.validate(doc, SCHEMA)
        for row in doc["evidence"]:
            assert row["provenance"] in (verify.PUBLISHED, verify.DERIVED, verify.DEFINITION)


def test_m12_evidence(reports):
    ev = rows(reports["m12_lemma"])
    assert ev["|A_1 ∩ A_2| = |C_1|"].computed == 660
    assert ev["|(A_3 ∩ A_4) ψ^-1| = |C_2|"].computed == 660
    assert ev["|X||Y|/|S|, the value |X ∩ Y| would need if S = XY"].computed == 55
    assert ev["|X||Y|/|X ∩ Y| = |S|"].computed is False
    assert ev["C_1 and C_2 conjugate in A_2"].computed is True


def test_m12_intersection_matches_subgroup_meet(reports):
    ev = rows(reports["m12_lemma"])
    row = ev["|X ∩ Y| = |C_1 ∩ C_2|"]
    assert row.holds and row.computed != 55


def test_pomega_evidence(reports):
    ev = rows(reports["pOmega_arith"])
    assert ev["|A5|^3 / |A6|^2"].computed == Fraction(5, 3)
    assert ev["|A5|^3 / |A6|^2"].to_json()["computed"] == "5/3"


def test_omega_ratio_closed_form():
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert verify.omega_ratio(q) == verify.omega_ratio_closed(q)
        assert verify.omega_ratio(q).denominator != 1


def test_lemma_prime_boundary_row(reports):
    ev = rows(reports["lemma_prime"])
    assert ev["v_2(8!) (boundary case p^(n-1) | n!, n = 2^3)"].computed == legendre_valuation(2, 8) == 7


def test_seeded_scenarios_record_seed(reports):
    assert reports["uniform2_desk"].seed == verify.DEFAULT_SEED
    assert reports["lemma_prime"].seed is None


def test_seed_changes_sample_but_not_verdict():
    r = verify.run("uniform2_desk", verify.VerifyConfig(seed=7))
    assert r.seed == 7 and r.passed


def test_deterministic_evidence():
    a = verify.run("uniform2_desk").to_json()
    b = verify.run("uniform2_desk").to_json()
    assert a["evidence"] == b["evidence"]


def test_bound_error_is_error_verdict():
    r = verify.run("m12_lemma", verify.VerifyConfig(enum_bound=10))
    assert r.verdict == "error" and r.error_kind == "bound"


def test_wreath_r_bound():
    r = verify.run("imbase_curated", verify.VerifyConfig(max_wreath_r=2))
    assert r.error_kind == "bound"


def test_load_error(tmp_path):
    r = verify.run("qabt_desk", verify.VerifyConfig(data_dir=str(tmp_path)))
    assert r.verdict == "error" and r.error_kind == "load"


def test_unknown_scenario():
    with pytest.raises(KeyError):
        verify.run("nosuch")


def test_config_rejects_nonpositive():
    with pytest.raises(ValueError):
        verify.VerifyConfig(enum_bound=0)


def test_verdict_rules():
    rep = verify.Report("x", "statement")
    assert rep.verdict == "fail"  # no evidence
    rep.evidence.append(verify.Evidence("a", 1, 1, verify.DERIVED))
    assert rep.verdict == "pass"
    rep.evidence.append(verify.Evidence("b", 1, 2, verify.DERIVED))
    assert rep.verdict == "fail"
    rep.error = "boom"
    assert rep.verdict == "error"


def test_uniform2_pair_counts():
    ctx = verify.Context(verify.Report("t", ""), verify.VerifyConfig())
    # r = 2: one layout {0,1}; Y exhausts the 120 automorphisms
    assert sum(1 for _ in verify.uniform2_pairs(ctx, 2)) == 120
    layouts = verify._strip_layouts(3)
    assert len(layouts) == 4
