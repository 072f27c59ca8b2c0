#include "ontogen/selector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "ontogen/error.hpp"
#include "ontogen/realizer.hpp"

namespace ontogen {

void WeightConfig::validate() const {
  for (double w : {pipelineScoreWeight, frequencyWeight, repetitionPenalty, lengthTieBreak})
    if (!std::isfinite(w)) throw ValidationError("weights", "weights must be finite");
  if (repetitionPenalty < 0) throw ValidationError("weights", "repetitionPenalty must be >= 0");
}

FrequencyTable::FrequencyTable(std::map<std::string, double> weights, double defaultWeight)
    : weights_(std::move(weights)), default_(defaultWeight) {
  for (const auto& [key, w] : weights_)
    if (!(w >= 0.0 && w <= 1.0)) throw ValidationError(key, "frequency outside [0,1]");
  if (!(default_ >= 0.0 && default_ <= 1.0)) throw ValidationError("default", "frequency outside [0,1]");
}

FrequencyTable FrequencyTable::parse(std::string_view text, const std::string& source) {
  const auto doc = detail::parseJson(text, source);
  detail::requireSchema(doc, "ontogen-freq/1", source);
  std::map<std::string, double> weights;
  double def = 0.5;
  try {
    def = doc.value("default", 0.5);
    if (doc.contains("weights"))
      for (const auto& item : doc.at("weights").items()) weights[item.key()] = item.value().get<double>();
  } catch (const detail::Json::exception& e) {
    throw ParseError(source, e.what());
  }
  return FrequencyTable(std::move(weights), def);
}

FrequencyTable FrequencyTable::load(const std::string& path) { return parse(detail::readFile(path), path); }

FrequencyTable::Lookup FrequencyTable::lookup(const std::string& senseId, const std::string& lemma) const {
  if (auto it = weights_.find(senseId); it != weights_.end()) return {it->second, senseId, true};
  if (auto it = weights_.find(lemma); it != weights_.end()) return {it->second, lemma, false};
  return {default_, "", false};
}

namespace {

void collectNames(const Constituent& c, std::vector<std::string>& out) {
  if (!c.isGroup()) {
    if (c.proper) out.push_back(c.lemma);
    return;
  }
  for (const auto& child : c.children) collectNames(child, out);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

}  // namespace

int repeatedNames(const CandidateSolution& solution, const std::vector<std::string>& history) {
  std::set<std::string> mentioned;
  for (const auto& h : history)
    for (const auto& w : sentenceWords(h)) mentioned.insert(w);
  std::vector<std::string> names;
  for (const auto& c : solution.clauses) collectNames(c, names);
  int repeats = 0;
  for (const auto& n : names) {
    if (!mentioned.insert(lower(n)).second) ++repeats;
  }
  return repeats;
}

ScoredSentence scoreSentence(const Candidate& candidate, const std::vector<std::string>& history,
                             const WeightConfig& weights, const FrequencyTable& freq) {
  ScoredSentence s;
  s.sentence = candidate.sentence;
  s.solution = candidate.solution;
  const int setScore = candidate.solution.sourceSet.score;
  s.explanation.push_back({"pipeline", weights.pipelineScoreWeight * setScore,
                           fmt(weights.pipelineScoreWeight) + " x set score " + std::to_string(setScore)});

  const auto hit = freq.lookup(candidate.solution.headSense, candidate.solution.headLemma);
  const bool counts = hit.bySense || weights.singleLemmaFrequency;
  const double f = counts ? hit.weight : 0.0;
  s.explanation.push_back({"frequency", weights.frequencyWeight * f,
                           fmt(weights.frequencyWeight) + " x " + fmt(f) + " (" +
                               (hit.key.empty() ? std::string("default") : hit.key) + ")"});

  const int repeats = repeatedNames(candidate.solution, history);
  s.explanation.push_back({"repetition", repeats ? -weights.repetitionPenalty * repeats : 0.0,
                           fmt(weights.repetitionPenalty) + " x " + std::to_string(repeats) + " repeated names"});

  if (weights.lengthTieBreak != 0.0) {
    const auto n = sentenceWords(candidate.sentence).size();
    s.explanation.push_back({"length", -weights.lengthTieBreak * static_cast<double>(n),
                             fmt(weights.lengthTieBreak) + " x " + std::to_string(n) + " words"});
  }
  for (const auto& t : s.explanation) s.score += t.value;
  return s;
}

std::vector<ScoredSentence> rank(const std::vector<Candidate>& candidates, const std::vector<std::string>& history,
                                 const WeightConfig& weights, const FrequencyTable& freq) {
  if (candidates.empty()) throw NoCandidates();
  std::vector<ScoredSentence> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.push_back(scoreSentence(candidates[i], history, weights, freq));
    out.back().inputIndex = i;
  }
  std::stable_sort(out.begin(), out.end(), [](const ScoredSentence& a, const ScoredSentence& b) {
    const double tol = 1e-9 * std::max({1.0, std::fabs(a.score), std::fabs(b.score)});
    if (std::fabs(a.score - b.score) > tol) return a.score > b.score;
    if (a.sentence != b.sentence) return a.sentence < b.sentence;
    return a.inputIndex < b.inputIndex;
  });
  return out;
}

}  // namespace ontogen
