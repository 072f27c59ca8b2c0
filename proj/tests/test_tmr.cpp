#include <doctest.h>

#include "ontogen/error.hpp"
#include "ontogen/tmr.hpp"
#include "support.hpp"

using namespace ontogen;

TEST_CASE("instance ids") {
  CHECK(conceptOf("FASTEN-18") == "FASTEN");
  CHECK(conceptOf("REQUEST-ACTION-1") == "REQUEST-ACTION");
  CHECK(isInstanceId("WALL-40"));
  CHECK_FALSE(isInstanceId("WALL"));
  CHECK_THROWS_AS(conceptOf("WALL"), MalformedId);
}

TEST_CASE("inverse properties") {
  CHECK(isInverseProperty("AGENT-OF"));
  CHECK_FALSE(isInverseProperty("AGENT"));
  CHECK(inverseOf("THEME") == "THEME-OF");
  CHECK(inverseOf("THEME-OF") == "THEME");
}

TEST_CASE("running example fixture parses") {
  const auto t = testing::fixture("painting-nlg");
  CHECK(t.frames.size() == 4);
  const auto* fasten = t.find("FASTEN-18");
  REQUIRE(fasten);
  REQUIRE(fasten->instanceFiller("AGENT"));
  CHECK(*fasten->instanceFiller("AGENT") == "HUMAN-104");
  CHECK((relativeTimeOf(*fasten, t) == RelativeTime::BeforeReference));
  REQUIRE(t.find("WALL-40")->coref);
  CHECK(*t.find("WALL-40")->coref == "WALL-39");
}

TEST_CASE("missing inverse slots are completed") {
  const auto t = parseTmr(R"({"schema":"ontogen-tmr/1","frames":[
    {"id":"WALK-1","slots":{"AGENT":"HUMAN-1"}},{"id":"HUMAN-1","slots":{}}]})");
  REQUIRE(t.find("HUMAN-1")->instanceFiller("AGENT-OF"));
  CHECK(*t.find("HUMAN-1")->instanceFiller("AGENT-OF") == "WALK-1");
}

TEST_CASE("malformed TMRs") {
  CHECK_THROWS_AS(parseTmr("[1,2"), ParseError);
  CHECK_THROWS_AS(parseTmr(R"({"schema":"ontogen-tmr/1","frames":[{"id":"A-1","slots":{}},{"id":"A-1","slots":{}}]})"),
                  ParseError);
  CHECK_THROWS_AS(parseTmr(R"({"schema":"nope","frames":[]})"), ParseError);
}

TEST_CASE("strip removes metadata and is idempotent") {
  const auto nlu = testing::fixture("painting-nlu");
  REQUIRE(nlu.frames.front().metadata);
  const auto once = stripMetadata(nlu);
  for (const auto& f : once.frames) CHECK_FALSE(f.metadata);
  CHECK((relativeTimeOf(*once.find("FASTEN-1"), once) == RelativeTime::BeforeReference));
  const auto twice = stripMetadata(once);
  CHECK(serializeTmr(once) == serializeTmr(twice));
}

TEST_CASE("stripped analysis TMR is isomorphic to the generation TMR") {
  const auto stripped = stripMetadata(testing::fixture("painting-nlu"));
  const auto result = tmrIsomorphic(stripped, testing::fixture("painting-nlg"));
  REQUIRE(result);
  CHECK(result.mapping.at("FASTEN-1") == "FASTEN-18");
  CHECK(result.mapping.at("HUMAN-1") == "HUMAN-104");
  CHECK(result.mapping.at("PICTURE-1") == "PICTURE-7");
  CHECK(result.mapping.at("WALL-2") == "WALL-40");
}

TEST_CASE("isomorphism notices structural differences") {
  const auto a = testing::fixture("painting-nlg");
  CHECK_FALSE(tmrIsomorphic(a, testing::fixture("moor")));
  CHECK_FALSE(tmrIsomorphic(a, testing::fixture("passive")));
  CHECK(tmrIsomorphic(a, a));
}

TEST_CASE("serialization round trip") {
  for (const char* name : {"painting-nlg", "painting-nlu", "request-polite", "johnny", "plural-paintings"}) {
    CAPTURE(name);
    const auto t = testing::fixture(name);
    const auto again = parseTmr(serializeTmr(t));
    CHECK(serializeTmr(again) == serializeTmr(t));
    CHECK(tmrIsomorphic(t, again));
  }
}

TEST_CASE("plurality from cardinality") {
  const auto t = testing::fixture("plural-paintings");
  bool found = false;
  for (const auto& f : t.frames)
    if (isPlural(f)) found = true;
  CHECK(found);
}
