#pragma once

// Surface realization: CandidateSolution -> English sentence.

#include <string>
#include <vector>

#include "ontogen/morphology.hpp"
#include "ontogen/solution.hpp"

namespace ontogen {

/// Inflected words in order, one per solution leaf (punctuation attached to
/// the preceding word, capitalization not yet applied). Throws EmptySolution.
std::vector<std::string> realizeWords(const CandidateSolution& solution,
                                      const MorphTables& tables = MorphTables::builtin());

/// The finished sentence: capitalized, terminal punctuation added.
std::string realize(const CandidateSolution& solution, const MorphTables& tables = MorphTables::builtin());

/// Words of a realized sentence with punctuation and case stripped.
std::vector<std::string> sentenceWords(const std::string& sentence);

}  // namespace ontogen
