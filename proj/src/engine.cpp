#include "ontogen/engine.hpp"

#include <set>
#include <sstream>

#include "json_util.hpp"
#include "ontogen/realizer.hpp"
#include "ontogen/solution.hpp"

namespace ontogen {

RunReport generate(const Tmr& tmr, const KnowledgeBase& kb, const EngineConfig& config, const FrequencyTable& freq) {
  RunReport report;
  report.warnings = kb.warnings();
  auto selection = runLexicalSelection(tmr, kb, tmr.context, config.scoring);
  report.counts = selection.counts;
  report.trace = std::move(selection.trace);
  for (const auto& r : report.trace.records)
    if (r.rule == "unresolved-coreference" && r.stage == "reference") report.warnings.push_back(r.subject + ": coreference to unknown " + r.note);

  const SolutionOptions options{config.scoring.emitVoiceVariants, config.scoring.emitOptionalVariants};
  std::vector<Candidate> candidates;
  for (const auto& set : selection.sets) {
    for (auto& sol : buildSolutions(set, tmr, kb, options)) {
      ++report.solutions;
      std::string sentence = realize(sol);
      candidates.push_back({std::move(sentence), std::move(sol)});
    }
  }
  auto ranked = rank(candidates, tmr.context.history, config.weights, freq);
  std::set<std::string> seen;
  for (auto& s : ranked)
    if (seen.insert(s.sentence).second) report.ranked.push_back(std::move(s));
  return report;
}

std::vector<std::string> generateSentences(const Tmr& tmr, const KnowledgeBase& kb, const EngineConfig& config,
                                           const FrequencyTable& freq) {
  std::vector<std::string> out;
  for (const auto& s : generate(tmr, kb, config, freq).ranked) out.push_back(s.sentence);
  return out;
}

namespace {

std::size_t shown(const RunReport& report, const ReportOptions& options) {
  return options.top == 0 ? report.ranked.size() : std::min(options.top, report.ranked.size());
}

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

}  // namespace

std::string formatHuman(const RunReport& report, const ReportOptions& options) {
  std::ostringstream o;
  const std::size_t n = shown(report, options);
  for (std::size_t i = 0; i < n; ++i) o << report.ranked[i].sentence << "\n";
  if (options.trace) {
    const auto& c = report.counts;
    o << "\n# stages: candidates=" << c.candidates << " aggregated=" << c.aggregated
      << " semantic=" << c.afterSemantic << " syntactic=" << c.afterSyntactic << " synonyms=" << c.afterSynonyms
      << " solutions=" << report.solutions << " sentences=" << report.ranked.size()
      << (c.truncated ? " (truncated)" : "") << "\n";
    o << "# trace\n";
    for (const auto& line : report.trace.lines()) o << line << "\n";
    o << "# ranking\n";
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = report.ranked[i];
      o << (i + 1) << ". " << s.sentence << " score=" << fmt(s.score) << "\n";
      for (const auto& t : s.explanation) o << "   " << t.name << " " << fmt(t.value) << " : " << t.note << "\n";
      for (const auto& e : s.solution.sourceSet.ledger)
        o << "   ledger " << e.rule << " " << (e.delta > 0 ? "+" : "") << e.delta << " : " << e.note << "\n";
    }
  }
  if (options.dumpSolutions) {
    o << "\n# solutions\n";
    for (std::size_t i = 0; i < n; ++i) o << dumpSolution(report.ranked[i].solution);
  }
  if (options.trace)
    for (const auto& w : report.warnings) o << "warning: " << w << "\n";
  return o.str();
}

std::string formatStructured(const RunReport& report, const ReportOptions& options) {
  using detail::Json;
  Json doc;
  doc["schema"] = "ontogen-report/1";
  const auto& c = report.counts;
  doc["counts"] = {{"candidates", c.candidates},     {"aggregated", c.aggregated},
                   {"afterSemantic", c.afterSemantic}, {"afterSyntactic", c.afterSyntactic},
                   {"afterSynonyms", c.afterSynonyms}, {"solutions", report.solutions},
                   {"sentences", report.ranked.size()}, {"truncated", c.truncated}};
  Json ranked = Json::array();
  const std::size_t n = shown(report, options);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = report.ranked[i];
    Json item{{"rank", i + 1}, {"sentence", s.sentence}, {"score", s.score}, {"headSense", s.solution.headSense},
              {"setScore", s.solution.sourceSet.score}};
    Json terms = Json::array();
    for (const auto& t : s.explanation) terms.push_back({{"term", t.name}, {"value", t.value}, {"note", t.note}});
    item["explanation"] = std::move(terms);
    if (options.trace) {
      Json ledger = Json::array();
      for (const auto& e : s.solution.sourceSet.ledger)
        ledger.push_back({{"rule", e.rule}, {"delta", e.delta}, {"note", e.note}});
      item["ledger"] = std::move(ledger);
    }
    if (options.dumpSolutions) item["solution"] = dumpSolution(s.solution);
    ranked.push_back(std::move(item));
  }
  doc["ranked"] = std::move(ranked);
  if (options.trace) {
    Json trace = Json::array();
    for (const auto& r : report.trace.records)
      trace.push_back({{"stage", r.stage}, {"rule", r.rule}, {"subject", r.subject}, {"delta", r.delta}, {"note", r.note}});
    doc["trace"] = std::move(trace);
  }
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace ontogen
