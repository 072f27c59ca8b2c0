#pragma once

#include <utility>
#include <vector>

#include "ontogen/morphology.hpp"

namespace testing {

struct InflectionCase {
  const char* lemma;
  ontogen::PartOfSpeech pos;
  ontogen::FeatureBundle features;
  const char* expected;
};

std::vector<InflectionCase> inflectionCases();
/// Word and the article it takes.
std::vector<std::pair<const char*, const char*>> articleCases();

}  // namespace testing
