#include <doctest.h>

#include <vector>

#include "morph_cases.hpp"
#include "ontogen/morphology.hpp"

using namespace ontogen;

TEST_CASE("inflection table") {
  const auto cases = testing::inflectionCases();
  CHECK(cases.size() >= 50);
  for (const auto& c : cases) {
    CAPTURE(c.lemma);
    CHECK(inflect(c.lemma, c.pos, c.features) == c.expected);
  }
}

TEST_CASE("a/an choice") {
  const auto words = testing::articleCases();
  CHECK(words.size() >= 20);
  for (const auto& [w, article] : words) {
    CAPTURE(w);
    CHECK(indefiniteArticle(w) == article);
  }
}

TEST_CASE("regular past helper") {
  CHECK(regularPast("hop") == "hopped");
  CHECK(regularPast("visit") == "visited");
  CHECK(regularPast("try") == "tried");
  CHECK(regularPast("commit") == "committed");
  CHECK(regularPast("bake") == "baked");
}

TEST_CASE("custom tables override builtin") {
  const auto t = MorphTables::parse(R"({"schema":"ontogen-morph/1","verbs":{"fix":{"past":"fixt","participle":"fixt"}},
    "plurals":{},"pronouns":{}})");
  FeatureBundle past;
  past.tense = Tense::Past;
  CHECK(inflect("fix", PartOfSpeech::Verb, past, t) == "fixt");
  CHECK(inflect("walk", PartOfSpeech::Verb, past, t) == "walked");
}

TEST_CASE("morph tables reject wrong schema") {
  CHECK_THROWS(MorphTables::parse(R"({"schema":"other/1"})"));
}
