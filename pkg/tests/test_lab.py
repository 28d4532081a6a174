import json

import pytest

from epglab.lab import (CORPUS, classify_group, corpus_for_tier,
                        cross_validate, group_and_catalog, run_suite)


def test_corpus_well_formed():
    assert len(CORPUS) > 60
    assert len([e for e in CORPUS if "nilpotent" in e.note]) >= 30
    specs = [e.spec for e in CORPUS]
    assert len(specs) == len(set(specs))
    for e in CORPUS:
        assert e.tier in ("fast", "standard", "extended")
        assert e.note  # every expected value carries a provenance note
    assert len(corpus_for_tier("fast")) < len(corpus_for_tier("standard"))


def test_corpus_expected_values_fast_tier():
    for e in corpus_for_tier("fast"):
        G, cat = group_and_catalog(e.spec)
        num = e.numerics
        if "order" in num:
            assert G.order == num["order"], e.spec
        if "m" in num:
            assert len(cat.subgroups) == num["m"], e.spec
        if "cyc" in num:
            assert len(cat.cyc) == num["cyc"], e.spec
        if "omega" in num:
            assert cat.omega == num["omega"], e.spec
        if "maximal_elements" in num:
            assert len(cat.maximal_elements) == num["maximal_elements"], e.spec
        if "simplicial" in num:
            assert len(cat.simplicial) == num["simplicial"], e.spec


def test_classify_matches_expected_fast():
    for e in corpus_for_tier("fast"):
        rep = classify_group(e.spec)
        assert rep["consistent"], e.spec
        for prop, want in e.expected.items():
            got = rep["predicates"][prop]["value"]
            if got is not None:
                assert got == want, (e.spec, prop)


def test_cross_validate_corpus_small():
    for e in corpus_for_tier("fast"):
        G, _ = group_and_catalog(e.spec)
        if G.order <= 200:
            out = cross_validate(e.spec)
            assert out["pass"], (e.spec, out["checks"])


def test_cross_validate_rejects_large():
    with pytest.raises(ValueError):
        cross_validate("A7")


def test_report_round_trip(tmp_path):
    rep = run_suite("partition", "fast", out_dir=str(tmp_path), figure=False)
    loaded = json.loads(open(rep["path"]).read())
    assert loaded["suite"] == "partition"
    assert loaded["pass"] == rep["pass"] is True
    assert loaded["entries"] == rep["entries"]


def test_deterministic_reports(tmp_path):
    r1 = run_suite("eppo", "fast", out_dir=str(tmp_path / "a"), figure=False)
    r2 = run_suite("eppo", "fast", out_dir=str(tmp_path / "b"), figure=False)
    strip = lambda r: [{**c, "millis": 0} for e in r["entries"] for c in e["checks"]]
    assert strip(r1) == strip(r2)


def test_every_failure_embeds_a_witness_or_values():
    # force a look at a failing-style payload: chain violations carry orders
    from epglab.epgcore import cograph_by_chains
    _, cat = group_and_catalog("A7")
    ok, viol = cograph_by_chains(cat)
    assert not ok and viol is not None
    orders = viol.subgroup_orders(cat)
    assert len(orders) == 3 and all(o > 1 for o in orders)
