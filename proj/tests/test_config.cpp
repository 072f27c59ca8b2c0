#include <doctest.h>

#include "ontogen/config.hpp"
#include "ontogen/error.hpp"
#include "support.hpp"

using namespace ontogen;

TEST_CASE("bundled config matches the defaults") {
  const auto cfg = loadConfig(testing::dataPath("config.json"));
  const EngineConfig d;
  CHECK(cfg.scoring.exactBonus == d.scoring.exactBonus);
  CHECK(cfg.scoring.narrowBonus == d.scoring.narrowBonus);
  CHECK(cfg.scoring.uncoveredSlotPenalty == d.scoring.uncoveredSlotPenalty);
  CHECK(cfg.scoring.featureTolerance == d.scoring.featureTolerance);
  CHECK(cfg.weights.frequencyWeight == d.weights.frequencyWeight);
  CHECK(cfg.weights.repetitionPenalty == d.weights.repetitionPenalty);
  CHECK(cfg.top == d.top);
}

TEST_CASE("partial config keeps defaults") {
  const auto cfg = parseConfig(R"({"schema":"ontogen-config/1","weights":{"frequencyWeight":2},"top":1})");
  CHECK(cfg.weights.frequencyWeight == 2);
  CHECK(cfg.weights.pipelineScoreWeight == 1);
  CHECK(cfg.scoring.exactBonus == 20);
  CHECK(cfg.top == 1);
}

TEST_CASE("variants section") {
  const auto cfg = parseConfig(R"({"schema":"ontogen-config/1","variants":{"voice":true,"optional":true}})");
  CHECK(cfg.scoring.emitVoiceVariants);
  CHECK(cfg.scoring.emitOptionalVariants);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parseConfig(R"({"schema":"ontogen-config/1","bogus":1})"), ValidationError);
  CHECK_THROWS_AS(parseConfig(R"({"schema":"ontogen-config/1","scoring":{"exactbonus":1}})"), ValidationError);
  CHECK_THROWS_AS(parseConfig(R"({"schema":"ontogen-config/1","weights":{"frequencyWeight":"high"}})"), ParseError);
  CHECK_THROWS_AS(parseConfig(R"({"schema":"ontogen-config/1","scoring":{"aggregateCap":0}})"), ValidationError);
  CHECK_THROWS_AS(parseConfig(R"({"schema":"ontogen-config/1","weights":{"repetitionPenalty":-1}})"), ValidationError);
  CHECK_THROWS_AS(parseConfig(R"({"schema":"other/1"})"), ParseError);
  CHECK_THROWS_AS(parseConfig("{"), ParseError);
}
