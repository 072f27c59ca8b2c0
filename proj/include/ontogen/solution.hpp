#pragma once

// CandidateSolutions: bound, ordered, feature-decorated token plans built
// from surviving CandidateSets.

#include <optional>
#include <string>
#include <vector>

#include "ontogen/features.hpp"
#include "ontogen/knowledge.hpp"
#include "ontogen/morphology.hpp"
#include "ontogen/pipeline.hpp"
#include "ontogen/tmr.hpp"

namespace ontogen {

enum class Function {
  Subject,
  MainVerb,
  Auxiliary,
  DirectObject,
  PrepositionalPhrase,
  Preposition,
  NounPhrase,
  NounHead,
  Determiner,
  Modifier,
  Adverb,
  FixedWord,
  VerbPhrase,  // embedded event (infinitival complement)
  Punctuation,
};

std::string_view toString(Function f);

struct Constituent {
  Function function = Function::FixedWord;
  std::string lemma;  // empty for grouping nodes
  PartOfSpeech pos = PartOfSpeech::Other;
  FeatureBundle features;
  std::vector<Constituent> children;
  std::string frameId;  // TMR frame the constituent expresses, if any
  bool proper = false;  // proper name: keep capitalization, counts for repetition

  bool isGroup() const { return lemma.empty(); }
};

struct CandidateSolution {
  std::vector<Constituent> clauses;
  CandidateSet sourceSet;
  std::string headSense;  // sense id of the main clause's head
  std::string headLemma;
  ClauseShape shape;
  Voice voice = Voice::Active;
  Tense tense = Tense::None;
};

struct SolutionOptions {
  bool emitVoiceVariants = false;
  bool emitOptionalVariants = false;
};

Tense deriveTense(const TmrFrame& eventFrame, const Tmr& tmr);
Voice chooseVoice(const CandidateSet& set, const Tmr& tmr);

/// The default solution for a set (first-listed roots, optional words in,
/// voice from chooseVoice). Throws UnboundVariable on an unfillable slot.
CandidateSolution buildSolution(const CandidateSet& set, const Tmr& tmr, const KnowledgeBase& kb);

/// The default solution plus voice/optional-word variants as configured.
std::vector<CandidateSolution> buildSolutions(const CandidateSet& set, const Tmr& tmr, const KnowledgeBase& kb,
                                              const SolutionOptions& options);

/// Leaf lemmas in linear order (punctuation excluded).
std::vector<std::string> solutionLemmas(const CandidateSolution& solution);

/// Indented debug rendering for --dump-solutions.
std::string dumpSolution(const CandidateSolution& solution);

}  // namespace ontogen
