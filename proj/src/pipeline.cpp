#include "ontogen/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "ontogen/error.hpp"
#include "pipeline_internal.hpp"

namespace ontogen {

int ScoringConfig::bonusFor(MatchDegree degree) const {
  switch (degree) {
    case MatchDegree::Exact: return exactBonus;
    case MatchDegree::Narrow: return narrowBonus;
    case MatchDegree::Default: return defaultFacetBonus;
    case MatchDegree::Sem:
    case MatchDegree::None: break;
  }
  return 0;
}

std::string_view toString(Determiner d) {
  switch (d) {
    case Determiner::Indefinite: return "indefinite";
    case Determiner::Definite: return "definite";
    case Determiner::Some: return "some";
    case Determiner::Bare: return "bare";
    case Determiner::None: return "none";
  }
  return "?";
}

bool CandidateSense::isPronoun() const { return (sense && sense->isPronoun()) || (ref && ref->pronounForm); }

std::string CandidateSense::label() const {
  std::string s = sense ? sense->id : "?";
  if (sense && lemma != sense->headword) s += "[" + lemma + "]";
  if (ref) {
    if (ref->pronounForm && !(sense && sense->isPronoun())) s += "{pronoun " + *ref->pronounForm + "}";
    else if (ref->determiner != Determiner::None) s += "{" + std::string(toString(ref->determiner)) + "}";
  }
  return s;
}

std::string modifierSlotId(const std::string& frameId, const std::string& property) {
  return frameId + "#" + property;
}

void CandidateSet::add(LedgerEntry entry) {
  score += entry.delta;
  ledger.push_back(std::move(entry));
}

const CandidateSense* CandidateSet::chosen(const std::string& frameId) const {
  auto it = choice.find(frameId);
  return it == choice.end() ? nullptr : &it->second;
}

std::vector<const CandidateSense*> CandidateSet::modifiersOf(const std::string& frameId) const {
  std::vector<const CandidateSense*> out;
  const std::string prefix = frameId + "#";
  for (auto it = choice.lower_bound(prefix); it != choice.end() && it->first.compare(0, prefix.size(), prefix) == 0;
       ++it) {
    out.push_back(&it->second);
  }
  return out;  // map order: lexicographic by property name
}

std::string CandidateSet::signature() const {
  std::string s;
  for (const auto& [frame, cs] : choice) {
    if (!s.empty()) s += " ";
    s += frame + "=" + cs.label();
  }
  return s;
}

void Trace::add(std::string stage, std::string rule, std::string subject, int delta, std::string note) {
  records.push_back({std::move(stage), std::move(rule), std::move(subject), delta, std::move(note)});
}

std::vector<std::string> Trace::lines() const {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    std::ostringstream line;
    line << r.stage << " " << r.rule << " " << r.subject;
    if (r.delta != 0) line << " " << (r.delta > 0 ? "+" : "") << r.delta;
    if (!r.note.empty()) line << " : " << r.note;
    out.push_back(line.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frame classification

namespace detail {

bool isMetaProperty(std::string_view property) {
  return isInverseProperty(property) || isTimeProperty(property) || property == "CARDINALITY" ||
         property == "HAS-NAME" || property == "GENDER" || property == "COREF" || property == "COREFER";
}

bool conceptIsA(const KnowledgeBase& kb, std::string_view cname, std::string_view ancestor) {
  return kb.ontology().contains(cname) && kb.ontology().contains(ancestor) && kb.isA(cname, ancestor);
}

bool isEventFrame(const KnowledgeBase& kb, const TmrFrame& frame) {
  return conceptIsA(kb, conceptOf(frame), "EVENT");
}

bool isModified(const TmrFrame& frame) {
  return std::any_of(frame.slots.begin(), frame.slots.end(), [](const auto& kv) {
    return !kv.second.empty() && isExpressibleAttribute(kv.first, kv.second.front());
  });
}

bool hasCaseRoles(const TmrFrame& frame) {
  return std::any_of(frame.slots.begin(), frame.slots.end(), [](const auto& kv) {
    return !kv.second.empty() && isCaseRoleLike(kv.first) &&
           (std::holds_alternative<InstanceRef>(kv.second.front()) ||
            std::holds_alternative<ConceptRef>(kv.second.front()));
  });
}

std::optional<PropertyValue> propertyValue(const Filler& f) {
  if (const auto* d = std::get_if<double>(&f)) return PropertyValue{*d};
  if (const auto* l = std::get_if<Literal>(&f)) return PropertyValue{l->text};
  return std::nullopt;
}

}  // namespace detail

bool isExpressibleAttribute(const std::string& property, const Filler& value) {
  if (detail::isMetaProperty(property)) return false;
  return std::holds_alternative<double>(value) || std::holds_alternative<Literal>(value);
}

bool isCaseRoleLike(const std::string& property) { return !detail::isMetaProperty(property); }

std::vector<std::string> rootFrames(const Tmr& tmr) {
  std::set<std::string> referenced;
  for (const auto& frame : tmr.frames) {
    for (const auto& [prop, fillers] : frame.slots) {
      if (detail::isMetaProperty(prop)) continue;
      for (const auto& f : fillers)
        if (const auto* r = std::get_if<InstanceRef>(&f)) referenced.insert(r->id);
    }
  }
  std::vector<std::string> roots;
  for (const auto& frame : tmr.frames)
    if (!referenced.count(frame.instanceId)) roots.push_back(frame.instanceId);
  return roots;
}

// ---------------------------------------------------------------------------
// Stage 1: candidate extraction

CandidateMap extractCandidates(const Tmr& tmr, const KnowledgeBase& kb, Trace* trace) {
  CandidateMap out;
  for (const auto& frame : tmr.frames) {
    const std::string cname = conceptOf(frame);
    if (!kb.ontology().contains(cname)) throw UnknownConcept(cname);
    auto senses = kb.sensesByHeadConcept(cname);
    std::optional<std::string> fallback;
    if (senses.empty()) {
      for (const auto& ancestor : kb.ontology().ancestors(cname)) {
        senses = kb.sensesByHeadConcept(ancestor);
        if (!senses.empty()) {
          fallback = ancestor;
          break;
        }
      }
    }
    if (senses.empty()) throw NoRealizableSense(frame.instanceId, cname);

    auto& list = out[frame.instanceId];
    for (const auto& s : senses) {
      CandidateSense cs{s, frame.instanceId, s->headword, std::nullopt, {}};
      if (fallback) cs.ledger.push_back({"fallback-ancestor", 0, cname + " unlexicalised; using " + *fallback});
      list.push_back(std::move(cs));
    }
    if (trace) {
      trace->add("extract", fallback ? "fallback-ancestor" : "head-concept", frame.instanceId, 0,
                 std::to_string(list.size()) + " senses headed by " + (fallback ? *fallback : cname));
    }

    if (!detail::conceptIsA(kb, cname, "OBJECT") && !detail::conceptIsA(kb, cname, "EVENT")) continue;
    for (const auto& [prop, fillers] : frame.slots) {
      if (fillers.empty() || !isExpressibleAttribute(prop, fillers.front())) continue;
      auto value = detail::propertyValue(fillers.front());
      if (!value || !kb.ontology().contains(prop)) continue;
      auto modifiers = kb.sensesForProperty(prop, *value);
      if (modifiers.empty()) continue;
      const auto slotId = modifierSlotId(frame.instanceId, prop);
      auto& mods = out[slotId];
      for (const auto& m : modifiers) mods.push_back(CandidateSense{m, slotId, m->headword, std::nullopt, {}});
      if (trace) trace->add("extract", "property-value", slotId, 0, std::to_string(mods.size()) + " modifier senses");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stage 3: aggregation

AggregateResult aggregateSets(const CandidateMap& candidates, std::size_t cap, Trace* trace) {
  AggregateResult result;
  std::vector<const std::pair<const std::string, std::vector<CandidateSense>>*> slots;
  std::size_t total = 1;
  bool overflow = false;
  for (const auto& kv : candidates) {
    slots.push_back(&kv);
    const std::size_t n = kv.second.size();
    if (n == 0) {
      total = 0;
    } else if (total > std::numeric_limits<std::size_t>::max() / n) {
      overflow = true;
      total = std::numeric_limits<std::size_t>::max();
    } else if (!overflow) {
      total *= n;
    }
  }
  result.fullSize = total;
  const std::size_t produce = std::min(total, cap);
  result.truncated = total > cap;
  result.sets.reserve(produce);

  std::vector<std::size_t> index(slots.size(), 0);
  for (std::size_t made = 0; made < produce; ++made) {
    CandidateSet set;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const CandidateSense& cs = slots[i]->second[index[i]];
      for (const auto& e : cs.ledger) set.add({e.rule, e.delta, cs.frameId + " " + cs.label() + ": " + e.note});
      set.choice.emplace(slots[i]->first, cs);
    }
    result.sets.push_back(std::move(set));
    // odometer increment, last slot fastest
    for (std::size_t i = slots.size(); i-- > 0;) {
      if (++index[i] < slots[i]->second.size()) break;
      index[i] = 0;
    }
  }
  if (trace) {
    trace->add("aggregate", "cartesian-product", "sets", 0, std::to_string(result.sets.size()) + " sets");
    if (result.truncated) {
      trace->add("aggregate", "cap-exceeded", "sets", 0,
                 "product " + std::to_string(total) + " truncated to " + std::to_string(cap));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Stage 6: synonyms

std::vector<CandidateSet> expandSynonyms(std::vector<CandidateSet> sets, Trace* trace) {
  std::vector<CandidateSet> out;
  for (auto& set : sets) {
    std::vector<std::string> frames;
    for (const auto& [frame, cs] : set.choice)
      if (!cs.isModifier() && !cs.sense->synonyms.empty() && !cs.isPronoun()) frames.push_back(frame);
    std::vector<CandidateSet> variants{set};
    for (const auto& frame : frames) {
      std::vector<CandidateSet> next;
      for (const auto& v : variants) {
        next.push_back(v);
        for (const auto& syn : v.choice.at(frame).sense->synonyms) {
          CandidateSet clone = v;
          clone.choice.at(frame).lemma = syn;
          next.push_back(std::move(clone));
        }
      }
      variants = std::move(next);
    }
    if (trace && variants.size() > 1) {
      trace->add("synonyms", "expand", set.signature(), 0, std::to_string(variants.size()) + " lemma variants");
    }
    for (auto& v : variants) out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orchestration

SelectionResult runLexicalSelection(const Tmr& tmr, const KnowledgeBase& kb, const DiscourseContext& context,
                                    const ScoringConfig& config) {
  SelectionResult result;
  Trace& trace = result.trace;
  if (tmr.frames.empty()) {
    trace.add("extract", "empty-tmr", "tmr", 0, "no frames to express");
    throw AllSetsPruned("extract", trace.lines());
  }
  for (const auto& frame : tmr.frames) {
    const Filler* t = frame.first("TIME");
    if (const auto* call = t ? std::get_if<ProceduralCall>(t) : nullptr; call && call->text != "< find-anchor-time") {
      trace.add("extract", "ignored-procedural-call", frame.instanceId, 0, call->text);
    }
  }

  auto candidates = extractCandidates(tmr, kb, &trace);
  candidates = manageReference(std::move(candidates), tmr, kb, context, &trace);
  for (const auto& [frame, list] : candidates) result.counts.candidates += list.size();

  auto aggregated = aggregateSets(candidates, config.aggregateCap, &trace);
  result.counts.aggregated = aggregated.sets.size();
  result.counts.truncated = aggregated.truncated;
  if (aggregated.sets.empty()) {
    trace.add("aggregate", "no-sets", "tmr", 0, "some frame has no surviving candidate");
    throw AllSetsPruned("aggregate", trace.lines());
  }

  auto sets = pruneSemantic(std::move(aggregated.sets), tmr, kb, config, &trace);
  result.counts.afterSemantic = sets.size();
  if (sets.empty()) throw AllSetsPruned("prune-semantic", trace.lines());
  sets = pruneSyntactic(std::move(sets), tmr, kb, &trace);
  result.counts.afterSyntactic = sets.size();
  if (sets.empty()) throw AllSetsPruned("prune-syntactic", trace.lines());
  sets = expandSynonyms(std::move(sets), &trace);
  result.counts.afterSynonyms = sets.size();
  result.sets = std::move(sets);
  return result;
}

}  // namespace ontogen
