#pragma once

// Ranking of realized sentences.

#include <map>
#include <string>
#include <vector>

#include "ontogen/solution.hpp"

namespace ontogen {

struct WeightConfig {
  double pipelineScoreWeight = 1.0;
  double frequencyWeight = 10.0;
  double repetitionPenalty = 5.0;
  double lengthTieBreak = 0.0;
  /// When false, frequencies keyed by a bare lemma (rather than a
  /// construction/sense id) contribute nothing.
  bool singleLemmaFrequency = true;

  void validate() const;  // throws ValidationError
};

/// Relative construction frequencies in [0,1] keyed by sense id or lemma.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  FrequencyTable(std::map<std::string, double> weights, double defaultWeight);

  static FrequencyTable parse(std::string_view text, const std::string& source = "<freq>");
  static FrequencyTable load(const std::string& path);

  struct Lookup {
    double weight = 0.0;
    std::string key;  // matched key, empty for the default
    bool bySense = false;
  };
  Lookup lookup(const std::string& senseId, const std::string& lemma) const;
  double defaultWeight() const noexcept { return default_; }
  const std::map<std::string, double>& weights() const noexcept { return weights_; }

 private:
  std::map<std::string, double> weights_;
  double default_ = 0.5;
};

struct Candidate {
  std::string sentence;
  CandidateSolution solution;
};

struct ScoreTerm {
  std::string name;
  double value = 0.0;
  std::string note;
};

struct ScoredSentence {
  std::string sentence;
  double score = 0.0;
  std::vector<ScoreTerm> explanation;  // terms sum to score
  CandidateSolution solution;
  std::size_t inputIndex = 0;
};

/// Proper names in the sentence that were already mentioned in the history
/// or earlier in the same sentence.
int repeatedNames(const CandidateSolution& solution, const std::vector<std::string>& history);

ScoredSentence scoreSentence(const Candidate& candidate, const std::vector<std::string>& history,
                             const WeightConfig& weights, const FrequencyTable& freq);

/// Descending score; ties broken by sentence text, then input position.
/// Throws NoCandidates on empty input.
std::vector<ScoredSentence> rank(const std::vector<Candidate>& candidates, const std::vector<std::string>& history,
                                 const WeightConfig& weights, const FrequencyTable& freq);

}  // namespace ontogen
