#include <doctest.h>

#include <string>

#include "ontogen/error.hpp"
#include "ontogen/knowledge.hpp"
#include "support.hpp"

using namespace ontogen;

namespace {

std::string kb(const std::string& concepts) { return R"({"schema":"ontogen-kb/1","concepts":[)" + concepts + "]}"; }

}  // namespace

TEST_CASE("bundled knowledge base loads") {
  const auto& k = testing::bundledKb();
  CHECK(k.ontology().concepts().size() >= 50);
  CHECK(k.lexicon().find("fix-v2"));
  CHECK(k.memory().find("HUMAN-104"));
  CHECK(k.isA("SHIP", "PHYSICAL-OBJECT"));
  CHECK(k.isA("PICTURE", "PAINTING"));
  CHECK_FALSE(k.isA("PAINTING", "PICTURE"));
  CHECK(k.isA("WALL", "WALL"));
}

TEST_CASE("senses by head concept are ordered by id") {
  const auto senses = testing::bundledKb().sensesByHeadConcept("FASTEN");
  REQUIRE(senses.size() == 4);
  CHECK(senses[0]->id == "affix-v1");
  CHECK(senses[1]->id == "fix-v2");
  CHECK(senses[2]->id == "moor-v1");
  CHECK(senses[3]->id == "skewer-v1");
}

TEST_CASE("constraint inheritance and match degrees") {
  const auto& k = testing::bundledKb();
  const auto theme = k.constraintOn("FASTEN", "THEME");
  REQUIRE(theme.sem);
  CHECK(theme.sem->conceptName() == "PHYSICAL-OBJECT");
  CHECK(k.constraintOn("WALK", "AGENT").sem->conceptName() == "ANIMATE");
  CHECK((k.matchDegree("PAINTING", theme) != MatchDegree::None));
  CHECK((k.matchDegree("SHIP", theme, Constraint::ofConcept("SURFACE-WATER-VEHICLE")) == MatchDegree::Narrow));
  CHECK((k.matchDegree("PAINTING", theme, Constraint::ofConcept("SURFACE-WATER-VEHICLE")) == MatchDegree::None));
  CHECK((k.matchDegree("WALK", theme) == MatchDegree::None));
}

TEST_CASE("modifier senses by range") {
  const auto& k = testing::bundledKb();
  const auto pretty = k.sensesForProperty("AESTHETIC-ATTRIBUTE", 0.8);
  CHECK(pretty.size() == 3);
  CHECK(k.sensesForProperty("AESTHETIC-ATTRIBUTE", 0.1).size() == 1);
  CHECK(k.sensesForProperty("AESTHETIC-ATTRIBUTE", 0.5).empty());
}

TEST_CASE("default facet outside sem is a warning") {
  const auto& warnings = testing::bundledKb().warnings();
  REQUIRE_FALSE(warnings.empty());
  CHECK(warnings.front().find("FASTEN.DESTINATION") != std::string::npos);
}

TEST_CASE("IS-A cycle is rejected and named") {
  const auto text = kb(R"({"name":"A","parents":["C"]},{"name":"B","parents":["A"]},{"name":"C","parents":["B"]})");
  try {
    parseOntology(text);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("cycle") != std::string::npos);
    CHECK(what.find("A") != std::string::npos);
    CHECK(what.find("B") != std::string::npos);
  }
}

TEST_CASE("dangling references are rejected") {
  CHECK_THROWS_AS(parseOntology(kb(R"({"name":"A","parents":["NOPE"]})")), ValidationError);
  CHECK_THROWS_AS(parseOntology(kb(R"({"name":"A","parents":[],"slots":{"THEME":{"sem":"NOPE"}}})")),
                  ValidationError);
}

TEST_CASE("duplicate concept reports a location") {
  const auto text = kb("{\"name\":\"A\",\"parents\":[]},\n{\"name\":\"A\",\"parents\":[]}");
  try {
    parseOntology(text, "onto.json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.location().rfind("onto.json:", 0) == 0);
  }
}

TEST_CASE("malformed json is a parse error") {
  CHECK_THROWS_AS(parseOntology("{ not json"), ParseError);
  CHECK_THROWS_AS(parseLexicon(R"({"schema":"ontogen-kb/1","senses":{}})"), ParseError);
}

TEST_CASE("lexicon invariants") {
  auto sense = [](const std::string& syn, const std::string& sem) {
    return R"({"schema":"ontogen-kb/1","senses":[{"id":"x-v1","headword":"x","pos":"v","syn":[)" + syn +
           R"(],"sem":{"head":"EVENT","slots":{)" + sem + "}}}]}";
  };
  CHECK_NOTHROW(parseLexicon(sense(R"({"cat":"v","var":"$var0"})", "")));
  // no $var0
  CHECK_THROWS_AS(parseLexicon(sense(R"({"cat":"n","var":"$var1"})", "")), ValidationError);
  // sem variable without syn node
  CHECK_THROWS_AS(parseLexicon(sense(R"({"cat":"v","var":"$var0"})", R"("AGENT":{"var":"$var1"})")), ValidationError);
  // duplicated variable
  CHECK_THROWS_AS(parseLexicon(sense(R"({"cat":"v","var":"$var0"},{"cat":"n","var":"$var0"})", "")),
                  ValidationError);
}

TEST_CASE("memory ids must name known concepts") {
  const auto onto = parseOntology(kb(R"({"name":"THING","parents":[]})"));
  const auto lex = parseLexicon(R"({"schema":"ontogen-kb/1","senses":[]})");
  const auto bad = parseMemory(R"({"schema":"ontogen-kb/1","instances":[{"id":"DOG-1","slots":{}}]})");
  CHECK_THROWS_AS(KnowledgeBase(onto, lex, bad), ValidationError);
}

TEST_CASE("constraints") {
  const auto r = Constraint::range(0.7, 1.0);
  CHECK(r.coversScalar(0.8));
  CHECK_FALSE(r.coversScalar(0.5));
  const auto l = Constraint::literals({"no"});
  CHECK(l.coversLiteral("no"));
  CHECK_FALSE(l.coversLiteral("yes"));
}
