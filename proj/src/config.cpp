#include "ontogen/config.hpp"

#include <set>

#include "json_util.hpp"
#include "ontogen/error.hpp"

namespace ontogen {

namespace {

using detail::Json;

void rejectUnknown(const Json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!known.count(key)) throw ValidationError(where, "unknown key \"" + key + "\"");
}

template <typename T>
void take(const Json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

}  // namespace

EngineConfig parseConfig(std::string_view text, const std::string& source) {
  const auto doc = detail::parseJson(text, source);
  detail::requireSchema(doc, "ontogen-config/1", source);
  EngineConfig cfg;
  try {
    rejectUnknown(doc, {"schema", "scoring", "weights", "variants", "top"}, source);
    if (doc.contains("scoring")) {
      const auto& s = doc.at("scoring");
      rejectUnknown(s,
                    {"exactBonus", "narrowBonus", "defaultFacetBonus", "uncoveredSlotPenalty", "featureTolerance",
                     "aggregateCap"},
                    source + ": scoring");
      take(s, "exactBonus", cfg.scoring.exactBonus);
      take(s, "narrowBonus", cfg.scoring.narrowBonus);
      take(s, "defaultFacetBonus", cfg.scoring.defaultFacetBonus);
      take(s, "uncoveredSlotPenalty", cfg.scoring.uncoveredSlotPenalty);
      take(s, "featureTolerance", cfg.scoring.featureTolerance);
      take(s, "aggregateCap", cfg.scoring.aggregateCap);
    }
    if (doc.contains("weights")) {
      const auto& w = doc.at("weights");
      rejectUnknown(w,
                    {"pipelineScoreWeight", "frequencyWeight", "repetitionPenalty", "lengthTieBreak",
                     "singleLemmaFrequency"},
                    source + ": weights");
      take(w, "pipelineScoreWeight", cfg.weights.pipelineScoreWeight);
      take(w, "frequencyWeight", cfg.weights.frequencyWeight);
      take(w, "repetitionPenalty", cfg.weights.repetitionPenalty);
      take(w, "lengthTieBreak", cfg.weights.lengthTieBreak);
      take(w, "singleLemmaFrequency", cfg.weights.singleLemmaFrequency);
    }
    if (doc.contains("variants")) {
      const auto& v = doc.at("variants");
      rejectUnknown(v, {"voice", "optional"}, source + ": variants");
      take(v, "voice", cfg.scoring.emitVoiceVariants);
      take(v, "optional", cfg.scoring.emitOptionalVariants);
    }
    take(doc, "top", cfg.top);
  } catch (const Json::exception& e) {
    throw ParseError(source, e.what());
  }
  if (cfg.scoring.featureTolerance < 0) throw ValidationError(source, "featureTolerance must be >= 0");
  if (cfg.scoring.aggregateCap == 0) throw ValidationError(source, "aggregateCap must be > 0");
  cfg.weights.validate();
  return cfg;
}

EngineConfig loadConfig(const std::string& path) { return parseConfig(detail::readFile(path), path); }

}  // namespace ontogen
