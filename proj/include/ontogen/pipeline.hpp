#pragma once

// Lexical selection: from an NLG TMR to scored CandidateSets.
//
// The stages run in a fixed order and each is a pure function of its
// inputs:
//
//   extractCandidates -> manageReference -> aggregateSets
//     -> pruneSemantic -> pruneSyntactic -> expandSynonyms
//
// Every score change is recorded as a LedgerEntry, so a set's score is
// always the sum of its ledger, and every exclusion leaves a TraceRecord.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontogen/knowledge.hpp"
#include "ontogen/tmr.hpp"

namespace ontogen {

/// Additive integer scoring; only ordinal outcomes are meaningful.
struct ScoringConfig {
  int exactBonus = 20;
  int narrowBonus = 10;
  int defaultFacetBonus = 4;
  int uncoveredSlotPenalty = -5;
  double featureTolerance = 0.25;
  std::size_t aggregateCap = 10000;
  bool emitVoiceVariants = false;
  bool emitOptionalVariants = false;

  int bonusFor(MatchDegree degree) const;
};

struct LedgerEntry {
  std::string rule;
  int delta = 0;
  std::string note;
  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

enum class Determiner { Indefinite, Definite, Some, Bare, None };

std::string_view toString(Determiner d);

struct ReferenceDecoration {
  Determiner determiner = Determiner::None;
  std::optional<std::string> pronounForm;  // lemma: I, you, he, she, it, we, they
  std::vector<std::string> modifiers;      // properties expressed by modifier choices
  friend bool operator==(const ReferenceDecoration&, const ReferenceDecoration&) = default;
};

/// One way of expressing one TMR frame (or one property of a frame, for
/// modifier candidates, whose frameId is "FRAME#PROPERTY").
struct CandidateSense {
  LexSensePtr sense;
  std::string frameId;
  std::string lemma;  // headword or, after synonym expansion, a synonym
  std::optional<ReferenceDecoration> ref;
  std::vector<LedgerEntry> ledger;

  bool isModifier() const { return frameId.find('#') != std::string::npos; }
  bool isPronoun() const;
  std::string label() const;  // sense id plus lemma/decoration, for traces
};

std::string modifierSlotId(const std::string& frameId, const std::string& property);

struct CandidateSet {
  std::map<std::string, CandidateSense> choice;
  int score = 0;
  std::vector<LedgerEntry> ledger;

  void add(LedgerEntry entry);
  const CandidateSense* chosen(const std::string& frameId) const;
  std::vector<const CandidateSense*> modifiersOf(const std::string& frameId) const;
  std::string signature() const;  // stable textual identity for ordering/tracing
};

struct TraceRecord {
  std::string stage;
  std::string rule;
  std::string subject;
  int delta = 0;
  std::string note;
};

struct Trace {
  std::vector<TraceRecord> records;
  void add(std::string stage, std::string rule, std::string subject, int delta, std::string note);
  std::vector<std::string> lines() const;
};

using CandidateMap = std::map<std::string, std::vector<CandidateSense>>;

CandidateMap extractCandidates(const Tmr& tmr, const KnowledgeBase& kb, Trace* trace = nullptr);

CandidateMap manageReference(CandidateMap candidates, const Tmr& tmr, const KnowledgeBase& kb,
                             const DiscourseContext& context, Trace* trace = nullptr);

struct AggregateResult {
  std::vector<CandidateSet> sets;
  std::size_t fullSize = 0;
  bool truncated = false;
};

AggregateResult aggregateSets(const CandidateMap& candidates, std::size_t cap = 10000, Trace* trace = nullptr);

std::vector<CandidateSet> pruneSemantic(std::vector<CandidateSet> sets, const Tmr& tmr, const KnowledgeBase& kb,
                                        const ScoringConfig& config, Trace* trace = nullptr);

std::vector<CandidateSet> pruneSyntactic(std::vector<CandidateSet> sets, const Tmr& tmr, const KnowledgeBase& kb,
                                         Trace* trace = nullptr);

std::vector<CandidateSet> expandSynonyms(std::vector<CandidateSet> sets, Trace* trace = nullptr);

struct StageCounts {
  std::size_t candidates = 0;
  std::size_t aggregated = 0;
  std::size_t afterSemantic = 0;
  std::size_t afterSyntactic = 0;
  std::size_t afterSynonyms = 0;
  bool truncated = false;
};

struct SelectionResult {
  std::vector<CandidateSet> sets;
  Trace trace;
  StageCounts counts;
};

/// Runs all six stages. Throws AllSetsPruned (with the trace as its
/// explanation) when nothing survives, NoRealizableSense when a frame has
/// no lexicalisation at all.
SelectionResult runLexicalSelection(const Tmr& tmr, const KnowledgeBase& kb, const DiscourseContext& context,
                                    const ScoringConfig& config = {});

// Frame-classification helpers shared with solution building.
bool isExpressibleAttribute(const std::string& property, const Filler& value);
bool isCaseRoleLike(const std::string& property);
std::vector<std::string> rootFrames(const Tmr& tmr);

}  // namespace ontogen
