#pragma once

// Run configuration in the "ontogen-config/1" schema.

#include <string>
#include <string_view>

#include "ontogen/pipeline.hpp"
#include "ontogen/selector.hpp"

namespace ontogen {

struct EngineConfig {
  ScoringConfig scoring;
  WeightConfig weights;
  std::size_t top = 5;
};

/// Missing keys keep their defaults; unknown keys are rejected.
EngineConfig parseConfig(std::string_view text, const std::string& source = "<config>");
EngineConfig loadConfig(const std::string& path);

}  // namespace ontogen
