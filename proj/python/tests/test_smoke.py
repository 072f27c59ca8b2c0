import json
from pathlib import Path

import pytest

import ontogen

DATA = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def kb():
    return ontogen.load_kb(str(DATA / "kb/ontology.json"), str(DATA / "kb/lexicon.json"), str(DATA / "kb/memory.json"))


def tmr(name):
    return ontogen.load_tmr(DATA / "tmr" / f"{name}.json")


def test_running_example(kb):
    ranked = ontogen.generate(tmr("painting-nlg"), kb, freq=str(DATA / "freq.json"))
    assert ranked[0]["sentence"] == "Tom secured a painting to the wall."
    fix = {r["sentence"] for r in ranked if r["sense"] == "fix-v2" and "painting" in r["sentence"]}
    assert fix == {f"Tom {v} a painting to the wall." for v in ("fixed", "attached", "fastened", "secured")}


def test_explanations_sum_to_score(kb):
    for r in ontogen.generate(tmr("request-polite"), kb):
        assert sum(t["value"] for t in r["explanation"]) == pytest.approx(r["score"])


def test_top_limits_results(kb):
    assert len(ontogen.generate(tmr("painting-nlg"), kb, top=3)) == 3


def test_moor_ranks_first(kb):
    assert ontogen.generate(tmr("moor"), kb, top=1)[0]["sentence"] == "They moored the ship."


def test_structured_report(kb):
    report = ontogen.structured_report(tmr("painting-nlg"), kb, top=1, trace=True)
    assert report["schema"] == "ontogen-report/1"
    assert json.dumps(report)


def test_strip_and_isomorphism():
    stripped = ontogen.strip_metadata(tmr("painting-nlu"))
    assert ontogen.isomorphic(stripped, tmr("painting-nlg"))
    assert ontogen.strip_metadata(stripped).to_json() == stripped.to_json()


def test_errors(kb):
    with pytest.raises(ontogen.AllSetsPruned):
        ontogen.generate(tmr("empty"), kb)
    with pytest.raises(ontogen.ParseError):
        ontogen.parse_tmr("{")
    with pytest.raises(ontogen.Error):
        ontogen.load_kb("missing.json", "missing.json", "missing.json")


def test_knowledge_queries(kb):
    assert kb.is_a("SHIP", "PHYSICAL-OBJECT")
    assert kb.senses_for("FASTEN") == ["affix-v1", "fix-v2", "moor-v1", "skewer-v1"]
    assert kb.warnings


def test_morphology():
    assert ontogen.indefinite_article("hour") == "an"
    assert ontogen.past_tense("make") == "made"
    assert ontogen.past_tense("secure") == "secured"
