// Semantic and syntactic pruning of candidate sets.

#include <algorithm>
#include <cmath>
#include <map>

#include "ontogen/pipeline.hpp"
#include "pipeline_internal.hpp"

namespace ontogen {

namespace {

struct Verdict {
  bool killed = false;
  std::string rule;
  std::string note;
  std::vector<LedgerEntry> entries;
  std::optional<double> featureDistance;
};

std::optional<std::string> fillerConcept(const Filler& f) {
  if (const auto* r = std::get_if<InstanceRef>(&f)) return conceptOf(r->id);
  if (const auto* c = std::get_if<ConceptRef>(&f)) return c->name;
  return std::nullopt;
}

std::string describeFiller(const Filler& f) {
  if (const auto* r = std::get_if<InstanceRef>(&f)) return r->id;
  if (const auto* c = std::get_if<ConceptRef>(&f)) return c->name;
  if (const auto* d = std::get_if<double>(&f)) return std::to_string(*d);
  if (const auto* l = std::get_if<Literal>(&f)) return l->text;
  return "?";
}

bool valueSatisfies(const KnowledgeBase& kb, const Filler& f, const Constraint& c) {
  if (auto cname = fillerConcept(f)) return kb.ontology().contains(*cname) && kb.ontology().satisfies(*cname, c);
  if (const auto* d = std::get_if<double>(&f)) return c.coversScalar(*d);
  if (const auto* l = std::get_if<Literal>(&f)) return c.coversLiteral(l->text);
  return false;
}

Verdict evaluate(const TmrFrame& frame, const CandidateSense& cs, const CandidateSet& set, const KnowledgeBase& kb,
                 const ScoringConfig& config) {
  Verdict v;
  const LexSense& s = *cs.sense;
  const std::string killRule = s.takesArguments() ? "exclude-argument" : "exclude-nonargument";
  auto kill = [&](std::string rule, std::string note) {
    if (v.killed) return;
    v.killed = true;
    v.rule = std::move(rule);
    v.note = std::move(note);
  };

  // bindings, then asserted constraints, then scalar features
  for (const auto pass : {SlotValue::Kind::Binding, SlotValue::Kind::Constraint, SlotValue::Kind::Scalar}) {
    for (const auto& [prop, value] : s.sem.slots) {
      if (prop == "HAS-NAME" || value.kind != pass) continue;
      const Filler* filler = frame.first(prop);
      switch (value.kind) {
        case SlotValue::Kind::Binding: {
          if (!filler) break;
          auto cname = fillerConcept(*filler);
          if (!cname) {
            if (value.constraint && !valueSatisfies(kb, *filler, *value.constraint))
              kill(killRule, prop + " value " + describeFiller(*filler) + " outside " + value.constraint->toString());
            break;
          }
          if (!kb.ontology().contains(*cname)) {
            kill(killRule, prop + " filler " + *cname + " unknown");
            break;
          }
          const auto needed = kb.constraintOn(s.sem.head, prop);
          const auto degree = kb.matchDegree(*cname, needed, value.constraint);
          if (degree == MatchDegree::None) {
            const std::string expected = value.constraint ? value.constraint->toString() : needed.toString();
            kill(killRule, prop + " filler " + *cname + " violates " + expected);
            break;
          }
          if (const int bonus = config.bonusFor(degree); bonus != 0)
            v.entries.push_back({"match-" + std::string(toString(degree)), bonus, prop + " " + *cname});
          break;
        }
        case SlotValue::Kind::Constraint: {
          if (!value.constraint) break;
          if (!filler) {
            kill(killRule, "asserts " + prop + " " + value.constraint->toString() + " absent from TMR");
            break;
          }
          if (!valueSatisfies(kb, *filler, *value.constraint)) {
            kill(killRule, prop + " " + describeFiller(*filler) + " violates " + value.constraint->toString());
            break;
          }
          v.entries.push_back({"match-exact", config.exactBonus, prop + " " + describeFiller(*filler)});
          break;
        }
        case SlotValue::Kind::Scalar: {
          if (!filler) break;
          const auto* d = std::get_if<double>(filler);
          if (!d) break;
          const double distance = std::fabs(*d - value.scalar);
          if (distance > config.featureTolerance + 1e-9) {
            kill("feature-mismatch", prop + " " + std::to_string(*d) + " vs " + std::to_string(value.scalar));
            break;
          }
          v.featureDistance = v.featureDistance.value_or(0.0) + distance;
          break;
        }
      }
    }
  }

  if (config.uncoveredSlotPenalty != 0) {
    for (const auto& [prop, fillers] : frame.slots) {
      if (fillers.empty() || detail::isMetaProperty(prop) || s.sem.slots.count(prop)) continue;
      if (isExpressibleAttribute(prop, fillers.front()) && set.chosen(modifierSlotId(frame.instanceId, prop)))
        continue;
      v.entries.push_back({"uncovered-slot", config.uncoveredSlotPenalty, prop + " not expressed by " + s.id});
    }
  }
  return v;
}

}  // namespace

std::vector<CandidateSet> pruneSemantic(std::vector<CandidateSet> sets, const Tmr& tmr, const KnowledgeBase& kb,
                                        const ScoringConfig& config, Trace* trace) {
  std::map<std::pair<std::string, std::string>, Verdict> cache;
  auto verdictFor = [&](const CandidateSense& cs, const CandidateSet& set) -> const Verdict& {
    auto key = std::make_pair(cs.frameId, cs.sense->id);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Verdict v;
    if (const TmrFrame* frame = tmr.find(cs.frameId); frame && !cs.isModifier()) v = evaluate(*frame, cs, set, kb, config);
    if (trace && v.killed) trace->add("prune-semantic", v.rule, cs.frameId + " " + cs.sense->id, 0, v.note);
    return cache.emplace(key, std::move(v)).first->second;
  };

  std::vector<CandidateSet> survivors;
  std::size_t killed = 0;
  for (auto& set : sets) {
    bool dead = false;
    for (const auto& [frameId, cs] : set.choice) {
      if (verdictFor(cs, set).killed) {
        dead = true;
        break;
      }
    }
    if (dead) {
      ++killed;
      continue;
    }
    for (const auto& [frameId, cs] : set.choice)
      for (const auto& e : verdictFor(cs, set).entries) set.add({e.rule, e.delta, frameId + " " + cs.sense->id + ": " + e.note});
    survivors.push_back(std::move(set));
  }

  // Among surviving feature-bearing choices, the closest per frame is an exact match.
  std::map<std::string, double> best;
  for (const auto& set : survivors)
    for (const auto& [frameId, cs] : set.choice)
      if (auto d = verdictFor(cs, set).featureDistance) {
        auto [it, fresh] = best.emplace(frameId, *d);
        if (!fresh) it->second = std::min(it->second, *d);
      }
  for (auto& set : survivors)
    for (const auto& [frameId, cs] : set.choice)
      if (auto d = verdictFor(cs, set).featureDistance; d && *d <= best[frameId] + 1e-9)
        set.add({"feature-closest", config.exactBonus, frameId + " " + cs.sense->id});

  if (trace) {
    trace->add("prune-semantic", "summary", "sets", 0,
               std::to_string(killed) + " removed, " + std::to_string(survivors.size()) + " remain");
  }
  return survivors;
}

namespace {

std::optional<std::string> bindingProperty(const LexSense& s, const std::string& var) {
  for (const auto& [prop, value] : s.sem.slots)
    if (value.kind == SlotValue::Kind::Binding && value.var == var) return prop;
  return std::nullopt;
}

bool refersTo(const Tmr& tmr, const std::string& id, const std::optional<std::string>& who) {
  if (!who) return false;
  if (id == *who) return true;
  const TmrFrame* f = tmr.find(id);
  return f && f->coref && *f->coref == *who;
}

std::optional<std::string> syntacticViolation(const CandidateSense& cs, const TmrFrame& frame, const Tmr& tmr,
                                              const KnowledgeBase& kb) {
  const LexSense& s = *cs.sense;
  if (cs.isPronoun()) {
    if (detail::isModified(frame)) return "pronoun cannot carry modifiers";
    if (detail::isEventFrame(kb, frame) && detail::hasCaseRoles(frame)) return "pronoun cannot express event roles";
  }
  if (!s.takesArguments()) return std::nullopt;

  const bool tmrTheme = frame.has("THEME");
  const auto themeIt = s.sem.slots.find("THEME");
  if (tmrTheme && themeIt == s.sem.slots.end()) return "THEME " + describeFiller(*frame.first("THEME")) + " has no host";
  const bool transitive = tmrTheme && themeIt->second.kind == SlotValue::Kind::Binding;

  int optionalPp = 0;  // remaining prep/nominal nodes inside an optional pp
  for (const auto& node : s.syn) {
    if (node.category == SynCategory::Pp) {
      optionalPp = node.optional ? 2 : 0;
      continue;
    }
    const bool optional = node.optional || optionalPp-- > 0;
    if (node.var.empty() || node.var == "$var0") continue;
    const auto prop = bindingProperty(s, node.var);
    if (!prop) continue;
    const Filler* filler = frame.first(*prop);
    if (!node.roots.empty()) {
      if (!filler) {
        if (!optional) return node.var + " (" + *prop + ") has no filler";
        continue;
      }
      const auto* ref = std::get_if<InstanceRef>(filler);
      for (const auto& root : node.roots) {
        if ((root == "you") && !(ref && refersTo(tmr, ref->id, tmr.hearerId))) return "\"you\" but " + *prop + " is not the hearer";
        if ((root == "I" || root == "me") && !(ref && refersTo(tmr, ref->id, tmr.speakerId)))
          return "\"" + root + "\" but " + *prop + " is not the speaker";
      }
      continue;
    }
    if (filler || optional) continue;
    if (*prop == "AGENT" && transitive) continue;  // realizable as passive
    return node.var + " (" + *prop + ") is obligatory but has no filler";
  }
  return std::nullopt;
}

}  // namespace

std::vector<CandidateSet> pruneSyntactic(std::vector<CandidateSet> sets, const Tmr& tmr, const KnowledgeBase& kb,
                                         Trace* trace) {
  std::map<std::string, std::optional<std::string>> cache;  // keyed by frame + label
  std::vector<CandidateSet> survivors;
  std::size_t killed = 0;
  for (auto& set : sets) {
    bool dead = false;
    for (const auto& [frameId, cs] : set.choice) {
      if (cs.isModifier()) continue;
      const TmrFrame* frame = tmr.find(frameId);
      if (!frame) continue;
      const std::string key = frameId + " " + cs.label();
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, syntacticViolation(cs, *frame, tmr, kb)).first;
        if (trace && it->second) trace->add("prune-syntactic", "exclude", key, 0, *it->second);
      }
      if (it->second) {
        dead = true;
        break;
      }
    }
    if (dead) {
      ++killed;
      continue;
    }
    survivors.push_back(std::move(set));
  }
  if (trace) {
    trace->add("prune-syntactic", "summary", "sets", 0,
               std::to_string(killed) + " removed, " + std::to_string(survivors.size()) + " remain");
  }
  return survivors;
}

}  // namespace ontogen
