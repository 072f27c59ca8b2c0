#pragma once

// End-to-end generation: TMR -> ranked sentences with explanations.

#include <string>
#include <vector>

#include "ontogen/config.hpp"
#include "ontogen/knowledge.hpp"
#include "ontogen/pipeline.hpp"
#include "ontogen/selector.hpp"
#include "ontogen/tmr.hpp"

namespace ontogen {

struct RunReport {
  std::vector<ScoredSentence> ranked;  // distinct sentences, best first
  StageCounts counts;
  std::size_t solutions = 0;
  Trace trace;
  std::vector<std::string> warnings;
};

/// Throws AllSetsPruned, NoRealizableSense, UnknownConcept.
RunReport generate(const Tmr& tmr, const KnowledgeBase& kb, const EngineConfig& config = {},
                   const FrequencyTable& freq = {});

/// Ranked sentence strings only.
std::vector<std::string> generateSentences(const Tmr& tmr, const KnowledgeBase& kb, const EngineConfig& config = {},
                                           const FrequencyTable& freq = {});

struct ReportOptions {
  std::size_t top = 5;  // 0 = all
  bool trace = false;
  bool dumpSolutions = false;
};

std::string formatHuman(const RunReport& report, const ReportOptions& options);
std::string formatStructured(const RunReport& report, const ReportOptions& options);

}  // namespace ontogen
