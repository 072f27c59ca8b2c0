// Reference management: decides how each object frame may be referred to
// (pronoun, proper name, definite or indefinite description).

#include <algorithm>
#include <memory>

#include "ontogen/pipeline.hpp"
#include "pipeline_internal.hpp"

namespace ontogen {

namespace {

struct Referent {
  const TmrFrame* frame = nullptr;
  std::string cname;
  bool speaker = false;
  bool hearer = false;
  bool plural = false;
  bool salient = false;
  bool human = false;
  bool modified = false;
  std::optional<std::string> gender;
  std::optional<std::string> name;
  std::optional<std::string> antecedent;  // coref target
  bool antecedentKnown = false;
};

std::optional<std::string> literalSlot(const TmrFrame& frame, std::string_view prop) {
  if (const Filler* f = frame.first(prop))
    if (const auto* l = std::get_if<Literal>(f)) return l->text;
  return std::nullopt;
}

std::optional<std::string> memorySlot(const KnowledgeBase& kb, const std::optional<std::string>& id,
                                      std::string_view prop) {
  if (!id) return std::nullopt;
  const InstanceFrame* inst = kb.memory().find(*id);
  return inst ? inst->first(prop) : std::nullopt;
}

Referent describe(const TmrFrame& frame, const Tmr& tmr, const KnowledgeBase& kb, const DiscourseContext& ctx) {
  Referent r;
  r.frame = &frame;
  r.cname = conceptOf(frame);
  const std::string& id = frame.instanceId;
  r.antecedent = frame.coref;
  auto is = [&](const std::optional<std::string>& who) {
    return who && (id == *who || (frame.coref && *frame.coref == *who));
  };
  r.speaker = is(tmr.speakerId);
  r.hearer = is(tmr.hearerId);
  r.plural = isPlural(frame);
  r.salient = ctx.isSalient(id) || (r.antecedent && ctx.isSalient(*r.antecedent));
  r.human = detail::conceptIsA(kb, r.cname, "HUMAN");
  r.modified = detail::isModified(frame);
  std::optional<std::string> self = id;
  r.gender = literalSlot(frame, "GENDER");
  if (!r.gender) r.gender = memorySlot(kb, self, "GENDER");
  if (!r.gender) r.gender = memorySlot(kb, r.antecedent, "GENDER");
  r.name = literalSlot(frame, "HAS-NAME");
  if (!r.name) r.name = memorySlot(kb, self, "HAS-NAME");
  if (!r.name) r.name = memorySlot(kb, r.antecedent, "HAS-NAME");
  if (r.antecedent) {
    r.antecedentKnown = kb.memory().find(*r.antecedent) || tmr.find(*r.antecedent) || ctx.isSalient(*r.antecedent);
  }
  return r;
}

bool pronounFits(const LexSense& p, const Referent& r, const KnowledgeBase& kb) {
  const int person = std::stoi(p.feature("person").value_or("3"));
  const bool plural = p.feature("number").value_or("singular") == "plural";
  const auto gender = p.feature("gender");
  if (r.speaker) return person == 1 && plural == r.plural;
  if (r.hearer) return person == 2;
  if (person != 3) return false;
  if (!kb.ontology().contains(p.sem.head) || !kb.isA(r.cname, p.sem.head)) return false;
  if (r.plural) return plural;
  if (plural) return !r.gender;  // singular they for unknown gender
  if (!gender) return true;
  return r.gender && *r.gender == *gender;
}

LexSensePtr nameSense(const std::string& name, const Referent& r, const KnowledgeBase& kb) {
  for (const auto& s : kb.lexicon().byHeadword(name))
    if (s->isProperName()) return s;
  auto s = std::make_shared<LexSense>();
  s->id = name + "-n1";
  s->headword = name;
  s->pos = "n";
  s->definition = "proper name";
  s->features["proper"] = "true";
  s->sem.head = r.cname;
  s->syn.push_back(SynNode{SynCategory::N, "$var0", {}, false, std::nullopt});
  return s;
}

std::vector<std::string> modifierProps(const std::string& frameId, const CandidateMap& map) {
  std::vector<std::string> props;
  const std::string prefix = frameId + "#";
  for (auto it = map.lower_bound(prefix); it != map.end() && it->first.compare(0, prefix.size(), prefix) == 0; ++it)
    props.push_back(it->first.substr(prefix.size()));
  return props;
}

}  // namespace

CandidateMap manageReference(CandidateMap candidates, const Tmr& tmr, const KnowledgeBase& kb,
                             const DiscourseContext& context, Trace* trace) {
  CandidateMap out;
  auto note = [&](const std::string& rule, const std::string& subject, const std::string& text) {
    if (trace) trace->add("reference", rule, subject, 0, text);
  };

  for (auto& [frameId, list] : candidates) {
    const TmrFrame* frame = tmr.find(frameId);
    if (!frame || detail::isEventFrame(kb, *frame)) {
      out[frameId] = std::move(list);
      continue;
    }
    const Referent r = describe(*frame, tmr, kb, context);
    const auto props = modifierProps(frameId, candidates);
    std::vector<CandidateSense> kept;

    auto pronoun = [&](const LexSensePtr& p, const std::string& rule) {
      ReferenceDecoration d;
      d.pronounForm = p->headword;
      kept.push_back(CandidateSense{p, frameId, p->headword, d, {}});
      note(rule, frameId, p->id);
    };

    if (r.speaker || r.hearer) {
      for (const auto& p : kb.pronounSenses())
        if (pronounFits(*p, r, kb)) pronoun(p, r.speaker ? "speaker-pronoun" : "hearer-pronoun");
      if (!kept.empty()) {
        out[frameId] = std::move(kept);
        continue;
      }
    }

    std::vector<LexSensePtr> pronouns;
    if (r.salient && r.human) {
      for (const auto& p : kb.pronounSenses())
        if (pronounFits(*p, r, kb)) pronouns.push_back(p);
    }

    bool dropCommon = false;
    if (r.human && r.name) {
      const auto s = nameSense(*r.name, r, kb);
      ReferenceDecoration d;
      kept.push_back(CandidateSense{s, frameId, s->headword, d, {}});
      note("proper-name", frameId, *r.name);
      dropCommon = true;
    } else if (r.human && r.salient && !r.modified && !pronouns.empty()) {
      dropCommon = true;
      note("salient-pronoun-only", frameId, "common descriptions dropped");
    }
    if (!r.modified) {
      for (const auto& p : pronouns) pronoun(p, "salient-pronoun");
    } else if (!pronouns.empty()) {
      note("modified-no-pronoun", frameId, "frame carries attributes");
    }

    if (!dropCommon) {
      for (auto& cs : list) {
        if (cs.sense->isPronoun() || cs.sense->isProperName()) continue;
        auto decorate = [&](Determiner det) {
          CandidateSense c = cs;
          ReferenceDecoration d;
          d.determiner = det;
          d.modifiers = props;
          c.ref = d;
          if (r.antecedent && !r.antecedentKnown) {
            c.ledger.push_back({"unresolved-coreference", 0, *r.antecedent + " not in memory or context"});
          }
          kept.push_back(std::move(c));
        };
        if (r.antecedent) {
          decorate(Determiner::Definite);
        } else if (r.plural) {
          decorate(Determiner::Some);
          decorate(Determiner::Bare);
        } else if (cs.sense->isMassNoun()) {
          decorate(Determiner::Bare);
        } else {
          decorate(Determiner::Indefinite);
        }
        if (r.salient && !r.human && !r.modified) {
          CandidateSense c = cs;
          ReferenceDecoration d;
          d.pronounForm = r.plural ? "they" : "it";
          c.ref = d;
          kept.push_back(std::move(c));
        }
      }
      if (r.antecedent && !r.antecedentKnown) {
        note("unresolved-coreference", frameId, *r.antecedent);
      }
    }
    if (kept.empty()) note("no-reference", frameId, "no way to refer to " + r.cname);
    out[frameId] = std::move(kept);
  }
  return out;
}

}  // namespace ontogen
