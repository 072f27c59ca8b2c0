#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ontogen/error.hpp"
#include "ontogen/pipeline.hpp"
#include "support.hpp"

using namespace ontogen;

namespace {

SelectionResult select(const std::string& name, const ScoringConfig& config = {}) {
  const auto t = testing::fixture(name);
  return runLexicalSelection(t, testing::bundledKb(), t.context, config);
}

bool hasRecord(const Trace& trace, const std::string& stage, const std::string& rule, const std::string& subject) {
  return std::any_of(trace.records.begin(), trace.records.end(), [&](const TraceRecord& r) {
    return r.stage == stage && r.rule == rule && r.subject == subject;
  });
}

std::set<std::string> senseIds(const std::vector<CandidateSet>& sets, const std::string& frame) {
  std::set<std::string> ids;
  for (const auto& s : sets)
    if (const auto* cs = s.chosen(frame)) ids.insert(cs->sense->id);
  return ids;
}

}  // namespace

TEST_CASE("running example stage counts") {
  const auto r = select("painting-nlg");
  CHECK(r.counts.candidates == 11);
  CHECK(r.counts.aggregated == 20);
  CHECK(r.counts.afterSemantic == 4);
  CHECK(r.counts.afterSyntactic == 4);
  CHECK(r.counts.afterSynonyms == 10);
  CHECK_FALSE(r.counts.truncated);
}

TEST_CASE("running example pruning trace") {
  const auto r = select("painting-nlg");
  CHECK(hasRecord(r.trace, "prune-semantic", "exclude-argument", "FASTEN-18 moor-v1"));
  CHECK(hasRecord(r.trace, "prune-semantic", "exclude-argument", "FASTEN-18 skewer-v1"));
  CHECK(hasRecord(r.trace, "prune-semantic", "exclude-nonargument", "PICTURE-7 cityscape-n1"));
  CHECK(hasRecord(r.trace, "prune-semantic", "exclude-nonargument", "PICTURE-7 graffiti-n1"));
  CHECK(hasRecord(r.trace, "prune-semantic", "exclude-nonargument", "PICTURE-7 landscape-n1"));
  CHECK(senseIds(r.sets, "FASTEN-18") == std::set<std::string>{"affix-v1", "fix-v2"});
  CHECK(senseIds(r.sets, "PICTURE-7") == std::set<std::string>{"painting-n1", "picture-n1"});
}

TEST_CASE("set score is the ledger sum") {
  for (const char* name : {"painting-nlg", "moor", "request-polite", "request-rude", "pretty-painting", "johnny"}) {
    CAPTURE(name);
    for (const auto& s : select(name).sets) {
      const int sum = std::accumulate(s.ledger.begin(), s.ledger.end(), 0,
                                      [](int acc, const LedgerEntry& e) { return acc + e.delta; });
      CHECK(s.score == sum);
    }
  }
}

TEST_CASE("narrow constraints win") {
  const auto r = select("moor");
  int moor = INT32_MIN;
  int other = INT32_MIN;
  for (const auto& s : r.sets) {
    const auto id = s.chosen("FASTEN-3")->sense->id;
    (id == "moor-v1" ? moor : other) = std::max(id == "moor-v1" ? moor : other, s.score);
  }
  REQUIRE(moor != INT32_MIN);
  REQUIRE(other != INT32_MIN);
  CHECK(moor > other);
}

TEST_CASE("feature matching selects constructions") {
  CHECK(senseIds(select("request-polite").sets, "REQUEST-ACTION-1").count("appreciate-v8"));
  const auto rude = senseIds(select("request-rude").sets, "REQUEST-ACTION-1");
  CHECK(rude == std::set<std::string>{"dammit-interj1"});
}

TEST_CASE("aggregation is a cartesian product") {
  const auto t = testing::fixture("painting-nlg");
  auto candidates = extractCandidates(t, testing::bundledKb());
  const auto agg = aggregateSets(candidates);
  std::size_t expected = 1;
  for (const auto& [frame, list] : candidates) expected *= list.size();
  CHECK(agg.fullSize == expected);
  CHECK(agg.sets.size() == expected);
  std::set<std::string> signatures;
  for (const auto& s : agg.sets) signatures.insert(s.signature());
  CHECK(signatures.size() == expected);
}

TEST_CASE("aggregation cap truncates") {
  const auto t = testing::fixture("painting-nlg");
  Trace trace;
  const auto agg = aggregateSets(extractCandidates(t, testing::bundledKb()), 3, &trace);
  CHECK(agg.truncated);
  CHECK(agg.sets.size() == 3);
  CHECK(hasRecord(trace, "aggregate", "cap-exceeded", "sets"));
}

TEST_CASE("synonym expansion keeps the original first") {
  const auto r = select("painting-nlg");
  const auto& first = r.sets.front();
  CHECK(first.chosen("FASTEN-18")->lemma == first.chosen("FASTEN-18")->sense->headword);
  std::set<std::string> lemmas;
  for (const auto& s : r.sets)
    if (s.chosen("FASTEN-18")->sense->id == "fix-v2") lemmas.insert(s.chosen("FASTEN-18")->lemma);
  CHECK(lemmas == std::set<std::string>{"attach", "fasten", "fix", "secure"});
}

TEST_CASE("empty TMR cannot be expressed") {
  const auto t = testing::fixture("empty");
  try {
    runLexicalSelection(t, testing::bundledKb(), t.context);
    FAIL("expected AllSetsPruned");
  } catch (const AllSetsPruned& e) {
    CHECK(e.stage() == "extract");
  }
}

TEST_CASE("unknown concept in a TMR") {
  const auto t = parseTmr(R"({"schema":"ontogen-tmr/1","frames":[{"id":"BLORP-1","slots":{}}]})");
  CHECK_THROWS_AS(runLexicalSelection(t, testing::bundledKb(), t.context), UnknownConcept);
}

TEST_CASE("incompatible filler prunes everything with an explanation") {
  const auto t = parseTmr(R"({"schema":"ontogen-tmr/1","frames":[
    {"id":"FASTEN-1","slots":{"AGENT":"NOISE-1","THEME":"WALL-1"}},{"id":"NOISE-1","slots":{}},{"id":"WALL-1","slots":{}}]})");
  try {
    runLexicalSelection(t, testing::bundledKb(), t.context);
    FAIL("expected AllSetsPruned");
  } catch (const AllSetsPruned& e) {
    CHECK(e.stage() != "extract");
    CHECK_FALSE(e.explanation().empty());
  }
}

TEST_CASE("pruning is deterministic") {
  const auto a = select("painting-nlg");
  const auto b = select("painting-nlg");
  REQUIRE(a.sets.size() == b.sets.size());
  for (std::size_t i = 0; i < a.sets.size(); ++i) CHECK(a.sets[i].signature() == b.sets[i].signature());
  CHECK(a.trace.lines() == b.trace.lines());
}
