#include "ontogen/solution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ontogen/error.hpp"
#include "pipeline_internal.hpp"

namespace ontogen {

std::string_view toString(Function f) {
  switch (f) {
    case Function::Subject: return "subject";
    case Function::MainVerb: return "main-verb";
    case Function::Auxiliary: return "auxiliary";
    case Function::DirectObject: return "direct-object";
    case Function::PrepositionalPhrase: return "prepositional-phrase";
    case Function::Preposition: return "preposition";
    case Function::NounPhrase: return "noun-phrase";
    case Function::NounHead: return "noun-head";
    case Function::Determiner: return "determiner";
    case Function::Modifier: return "modifier";
    case Function::Adverb: return "adverb";
    case Function::FixedWord: return "fixed-word";
    case Function::VerbPhrase: return "verb-phrase";
    case Function::Punctuation: return "punctuation";
  }
  return "?";
}

Tense deriveTense(const TmrFrame& eventFrame, const Tmr& tmr) {
  switch (relativeTimeOf(eventFrame, tmr).value_or(RelativeTime::AtReference)) {
    case RelativeTime::BeforeReference: return Tense::Past;
    case RelativeTime::AfterReference: return Tense::Future;
    case RelativeTime::AtReference: break;
  }
  return Tense::Present;
}

namespace {

std::optional<std::string> varFor(const LexSense& s, std::string_view prop) {
  auto it = s.sem.slots.find(std::string(prop));
  if (it == s.sem.slots.end() || it->second.kind != SlotValue::Kind::Binding) return std::nullopt;
  return it->second.var;
}

std::optional<std::string> propFor(const LexSense& s, const std::string& var) {
  for (const auto& [prop, value] : s.sem.slots)
    if (value.kind == SlotValue::Kind::Binding && value.var == var) return prop;
  return std::nullopt;
}

bool isTransitiveUse(const LexSense& s, const TmrFrame& frame) {
  return varFor(s, "THEME") && frame.has("THEME");
}

const TmrFrame* mainFrame(const CandidateSet& set, const Tmr& tmr, const KnowledgeBase* kb) {
  const TmrFrame* fallback = nullptr;
  for (const auto& id : rootFrames(tmr)) {
    const TmrFrame* f = tmr.find(id);
    if (!f || !set.chosen(id)) continue;
    if (!fallback) fallback = f;
    const LexSense& s = *set.chosen(id)->sense;
    if (kb ? detail::isEventFrame(*kb, *f) : s.takesArguments()) return f;
  }
  if (fallback) return fallback;
  for (const auto& f : tmr.frames)
    if (set.chosen(f.instanceId)) return &f;
  return nullptr;
}

bool isVerbal(const Constituent& c) { return c.function == Function::MainVerb || c.function == Function::Auxiliary; }

constexpr std::string_view kModals[] = {"will", "would", "can", "could", "shall", "should", "may", "might", "must"};

bool isModal(std::string_view lemma) {
  return std::find(std::begin(kModals), std::end(kModals), lemma) != std::end(kModals);
}

struct Builder {
  const CandidateSet& set;
  const Tmr& tmr;
  const KnowledgeBase& kb;
  bool dropOptional = false;
  bool byPhrase = false;

  Constituent leaf(Function fn, std::string lemma, PartOfSpeech pos) const {
    Constituent c;
    c.function = fn;
    c.lemma = std::move(lemma);
    c.pos = pos;
    return c;
  }

  Constituent conceptPhrase(const std::string& cname, Function fn) const {
    Constituent np;
    np.function = fn;
    for (const auto& s : kb.sensesByHeadConcept(cname)) {
      if (s->isPronoun() || s->isProperName() || s->takesArguments()) continue;
      if (!s->isMassNoun()) {
        Constituent c = leaf(Function::NounHead, s->headword, PartOfSpeech::Noun);
        c.features.number = Number::Plural;  // generic reference
        np.children.push_back(std::move(c));
      } else {
        np.children.push_back(leaf(Function::NounHead, s->headword, PartOfSpeech::Noun));
      }
      return np;
    }
    throw NoRealizableSense(cname, cname);
  }

  Constituent nounPhrase(const std::string& frameId, Function fn, GrammaticalCase gcase,
                         const std::optional<std::string>& subjectFrame) const {
    const CandidateSense* cs = set.chosen(frameId);
    const TmrFrame* frame = tmr.find(frameId);
    if (!cs || !frame) throw UnboundVariable(frameId, "referent");
    Constituent np;
    np.function = fn;
    np.frameId = frameId;
    const bool plural = isPlural(*frame);
    if (cs->ref && cs->ref->pronounForm) {
      Constituent c = leaf(Function::NounHead, *cs->ref->pronounForm, PartOfSpeech::Pronoun);
      c.frameId = frameId;
      c.features.grammaticalCase = gcase;
      if (gcase == GrammaticalCase::Accusative && subjectFrame && *subjectFrame == frameId)
        c.features.grammaticalCase = GrammaticalCase::Reflexive;
      if (const PronounParadigm* p = MorphTables::builtin().pronoun(c.lemma)) {
        c.features.person = p->person;
        c.features.number = p->number;
      } else {
        c.features.number = plural ? Number::Plural : Number::Singular;
      }
      np.children.push_back(std::move(c));
      return np;
    }
    if (cs->sense->isProperName()) {
      Constituent c = leaf(Function::NounHead, cs->lemma, PartOfSpeech::Noun);
      c.frameId = frameId;
      c.proper = true;
      np.children.push_back(std::move(c));
      return np;
    }
    const Determiner det = cs->ref ? cs->ref->determiner : Determiner::None;
    const Definiteness definiteness = det == Determiner::Indefinite ? Definiteness::Indefinite
                                      : det == Determiner::Definite ? Definiteness::Definite
                                      : det == Determiner::Some     ? Definiteness::Some
                                      : det == Determiner::Bare     ? Definiteness::Bare
                                                                    : Definiteness::None;
    if (det == Determiner::Indefinite) np.children.push_back(leaf(Function::Determiner, "a", PartOfSpeech::Other));
    if (det == Determiner::Definite) np.children.push_back(leaf(Function::Determiner, "the", PartOfSpeech::Other));
    if (det == Determiner::Some) np.children.push_back(leaf(Function::Determiner, "some", PartOfSpeech::Other));
    for (const CandidateSense* m : set.modifiersOf(frameId)) {
      Constituent c = leaf(Function::Modifier, m->lemma, PartOfSpeech::Adjective);
      c.frameId = m->frameId;
      np.children.push_back(std::move(c));
    }
    Constituent head = leaf(Function::NounHead, cs->lemma, PartOfSpeech::Noun);
    head.frameId = frameId;
    head.features.number = plural ? Number::Plural : Number::Singular;
    head.features.definiteness = definiteness;
    np.children.push_back(std::move(head));
    return np;
  }

  std::string fixedWord(const LexSense& s, const SynNode& node) const {
    auto it = s.exampleBindings.find(node.var);
    if (it != s.exampleBindings.end() &&
        (node.roots.empty() || std::find(node.roots.begin(), node.roots.end(), it->second) != node.roots.end())) {
      return it->second;
    }
    if (!node.roots.empty()) return node.roots.front();
    throw UnboundVariable(s.id, node.var);
  }

  static Function fixedFunction(SynCategory c) {
    switch (c) {
      case SynCategory::Aux: return Function::Auxiliary;
      case SynCategory::V: return Function::Auxiliary;
      case SynCategory::Prep: return Function::Preposition;
      case SynCategory::Adv: return Function::Adverb;
      case SynCategory::Adj: return Function::Modifier;
      case SynCategory::Det: return Function::Determiner;
      case SynCategory::Punct: return Function::Punctuation;
      default: return Function::FixedWord;
    }
  }

  static PartOfSpeech fixedPos(SynCategory c) {
    switch (c) {
      case SynCategory::Aux:
      case SynCategory::V: return PartOfSpeech::Verb;
      case SynCategory::Adj: return PartOfSpeech::Adjective;
      default: return PartOfSpeech::Other;
    }
  }

  // Returns std::nullopt when the node is legitimately left out.
  std::optional<Constituent> argument(const LexSense& s, const TmrFrame& frame, const SynNode& node, Function fn,
                                      GrammaticalCase gcase, const std::optional<std::string>& subjectFrame,
                                      Voice voice) const {
    if (node.optional && dropOptional) return std::nullopt;
    const auto prop = propFor(s, node.var);
    if (!prop) {
      if (node.roots.empty() && node.optional) return std::nullopt;
      Constituent c = leaf(fixedFunction(node.category), fixedWord(s, node), fixedPos(node.category));
      if (c.pos == PartOfSpeech::Verb && node.form == "participle") c.features.verbForm = VerbForm::Participle;
      return c;
    }
    const Filler* filler = frame.first(*prop);
    if (!filler) {
      if (node.optional) return std::nullopt;
      throw UnboundVariable(s.id, node.var);
    }
    if (const auto* ref = std::get_if<InstanceRef>(filler)) {
      const TmrFrame* target = tmr.find(ref->id);
      if (target && detail::isEventFrame(kb, *target)) {
        const CandidateSense* inner = set.chosen(ref->id);
        if (!inner) throw UnboundVariable(s.id, node.var);
        Constituent vp;
        vp.function = Function::VerbPhrase;
        vp.frameId = ref->id;
        vp.children = clause(*target, *inner, true, Voice::Active, Tense::None);
        return vp;
      }
      if (!target) throw UnboundVariable(s.id, node.var);
      return nounPhrase(ref->id, fn, gcase, subjectFrame);
    }
    if (const auto* cname = std::get_if<ConceptRef>(filler)) return conceptPhrase(cname->name, fn);
    (void)voice;
    if (node.optional) return std::nullopt;
    throw UnboundVariable(s.id, node.var);
  }

  std::vector<Constituent> clause(const TmrFrame& frame, const CandidateSense& cs, bool embedded, Voice voice,
                                  Tense tense) const {
    const LexSense& s = *cs.sense;
    const auto agentVar = varFor(s, "AGENT");
    const auto themeVar = varFor(s, "THEME");
    const bool passive = voice == Voice::Passive && !embedded;

    std::optional<std::string> subjectVar;
    if (passive) {
      subjectVar = themeVar;
    } else if (agentVar && s.nodeFor(*agentVar) && frame.has("AGENT")) {
      subjectVar = agentVar;
    } else {
      for (const auto& n : s.syn)
        if (n.category == SynCategory::Subj) subjectVar = n.var;
    }
    std::optional<std::string> subjectFrame;
    if (subjectVar) {
      if (auto p = propFor(s, *subjectVar))
        if (const std::string* id = frame.instanceFiller(*p)) subjectFrame = *id;
    }

    auto nominalFunction = [&](const SynNode& n) {
      if (subjectVar && n.var == *subjectVar) return Function::Subject;
      if (n.category == SynCategory::Subj) return Function::Subject;
      return Function::DirectObject;
    };
    auto caseFor = [&](const SynNode& n) {
      return nominalFunction(n) == Function::Subject ? GrammaticalCase::Nominative : GrammaticalCase::Accusative;
    };

    std::vector<Constituent> out;
    std::optional<Constituent> agentPhrase;
    bool themePlaced = false;
    auto placeTheme = [&]() {
      if (themePlaced || !themeVar) return;
      const SynNode* tn = s.nodeFor(*themeVar);
      if (!tn) return;
      SynNode asSubject = *tn;
      asSubject.optional = false;
      if (auto c = argument(s, frame, asSubject, Function::Subject, GrammaticalCase::Nominative, subjectFrame, voice))
        out.push_back(std::move(*c));
      themePlaced = true;
    };
    if (passive && (!agentVar || !s.nodeFor(*agentVar))) placeTheme();

    for (std::size_t i = 0; i < s.syn.size(); ++i) {
      const SynNode& node = s.syn[i];
      if (node.category == SynCategory::Pp) {
        // prep + nominal grouped into one phrase
        std::optional<std::size_t> prepIdx;
        std::optional<std::size_t> nomIdx;
        std::size_t j = i + 1;
        for (; j < s.syn.size() && (!prepIdx || !nomIdx); ++j) {
          if (s.syn[j].category == SynCategory::Prep && !prepIdx) prepIdx = j;
          else if (!nomIdx) nomIdx = j;
        }
        i = j - 1;
        if (!prepIdx || !nomIdx || (node.optional && dropOptional)) continue;
        SynNode inner = s.syn[*nomIdx];
        inner.optional = inner.optional || node.optional;
        auto nominal = argument(s, frame, inner, Function::NounPhrase, GrammaticalCase::Accusative, subjectFrame, voice);
        if (!nominal) continue;
        auto prep = leaf(Function::Preposition, fixedWord(s, s.syn[*prepIdx]), PartOfSpeech::Other);
        Constituent pp;
        pp.function = Function::PrepositionalPhrase;
        pp.children.push_back(std::move(prep));
        pp.children.push_back(std::move(*nominal));
        out.push_back(std::move(pp));
        continue;
      }
      if (node.var == "$var0") {
        Constituent head;
        switch (node.category) {
          case SynCategory::V: head = leaf(Function::MainVerb, cs.lemma, PartOfSpeech::Verb); break;
          case SynCategory::N: head = leaf(Function::NounHead, cs.lemma, PartOfSpeech::Noun); break;
          case SynCategory::Adv: head = leaf(Function::Adverb, cs.lemma, PartOfSpeech::Other); break;
          case SynCategory::Adj: head = leaf(Function::Modifier, cs.lemma, PartOfSpeech::Adjective); break;
          default: head = leaf(Function::FixedWord, cs.lemma, PartOfSpeech::Other); break;
        }
        head.frameId = frame.instanceId;
        if (head.pos == PartOfSpeech::Verb && node.form == "participle") head.features.verbForm = VerbForm::Participle;
        out.push_back(std::move(head));
        continue;
      }
      const bool isAgent = agentVar && node.var == *agentVar;
      const bool isTheme = themeVar && node.var == *themeVar;
      if (embedded && (node.category == SynCategory::Subj || (isAgent && node.category != SynCategory::DirectObject)))
        continue;
      if (passive && isAgent) {
        placeTheme();
        if (byPhrase && frame.has("AGENT")) {
          SynNode inner = node;
          inner.optional = false;
          if (auto c = argument(s, frame, inner, Function::NounPhrase, GrammaticalCase::Accusative, subjectFrame, voice)) {
            Constituent pp;
            pp.function = Function::PrepositionalPhrase;
            pp.children.push_back(leaf(Function::Preposition, "by", PartOfSpeech::Other));
            pp.children.push_back(std::move(*c));
            agentPhrase = std::move(pp);
          }
        }
        continue;
      }
      if (passive && isTheme) continue;
      if (auto c = argument(s, frame, node, nominalFunction(node), caseFor(node), subjectFrame, voice))
        out.push_back(std::move(*c));
    }
    if (agentPhrase) out.push_back(std::move(*agentPhrase));

    assignVerbFeatures(out, s, embedded, passive, tense);
    return out;
  }

  static void assignVerbFeatures(std::vector<Constituent>& out, const LexSense& s, bool embedded, bool passive,
                                 Tense tense) {
    const bool imperative = s.clause.mood == "imperative";
    auto mainIt = std::find_if(out.begin(), out.end(), [](const Constituent& c) { return c.function == Function::MainVerb; });
    if (passive && mainIt != out.end()) {
      mainIt->features.verbForm = VerbForm::Participle;
      mainIt->features.voice = Voice::Passive;
      Constituent be;
      be.function = Function::Auxiliary;
      be.lemma = "be";
      be.pos = PartOfSpeech::Verb;
      out.insert(mainIt, std::move(be));
    }
    auto firstVerbal = std::find_if(out.begin(), out.end(), isVerbal);
    if (!embedded && !imperative && tense == Tense::Future && firstVerbal != out.end() && !isModal(firstVerbal->lemma)) {
      Constituent will;
      will.function = Function::Auxiliary;
      will.lemma = "will";
      will.pos = PartOfSpeech::Verb;
      firstVerbal = out.insert(firstVerbal, std::move(will));
    }

    // agreement source: the subject, else the first nominal before the verb
    FeatureBundle agreement;
    for (const auto& c : out) {
      if (isVerbal(c)) break;
      if (c.function != Function::Subject && c.function != Function::FixedWord) continue;
      if (c.function == Function::FixedWord) {
        if (const PronounParadigm* p = MorphTables::builtin().pronoun(c.lemma)) {
          agreement.person = p->person;
          agreement.number = p->number;
        }
        break;
      }
      for (const auto& leafC : c.children)
        if (leafC.function == Function::NounHead) {
          agreement.person = leafC.features.person;
          agreement.number = leafC.features.number;
        }
      break;
    }

    bool first = true;
    for (auto& c : out) {
      if (!isVerbal(c)) continue;
      if (c.features.verbForm == VerbForm::Participle) {
        first = false;
        continue;
      }
      if (embedded || imperative || !first) {
        c.features.verbForm = imperative && first && !embedded ? VerbForm::Imperative : VerbForm::Infinitive;
      } else {
        c.features.verbForm = VerbForm::Finite;
        c.features.tense = tense == Tense::Future ? Tense::Present : tense;
        c.features.person = agreement.person;
        c.features.number = agreement.number;
      }
      first = false;
    }
  }
};

}  // namespace

Voice chooseVoice(const CandidateSet& set, const Tmr& tmr) {
  const TmrFrame* main = mainFrame(set, tmr, nullptr);
  if (!main) return Voice::Active;
  const CandidateSense* cs = set.chosen(main->instanceId);
  if (!cs || main->has("AGENT") || !varFor(*cs->sense, "AGENT")) return Voice::Active;
  return isTransitiveUse(*cs->sense, *main) ? Voice::Passive : Voice::Active;
}

namespace {

CandidateSolution build(const CandidateSet& set, const Tmr& tmr, const KnowledgeBase& kb, Voice voice,
                        bool dropOptional, bool byPhrase) {
  CandidateSolution sol;
  sol.sourceSet = set;
  const TmrFrame* main = mainFrame(set, tmr, &kb);
  if (!main) throw EmptySolution();
  const CandidateSense& cs = *set.chosen(main->instanceId);
  Builder b{set, tmr, kb, dropOptional, byPhrase};
  sol.headSense = cs.sense->id;
  sol.headLemma = cs.lemma;
  sol.shape = cs.sense->clause;
  sol.voice = voice;
  Constituent root;
  root.function = Function::VerbPhrase;
  root.frameId = main->instanceId;
  if (detail::isEventFrame(kb, *main) || cs.sense->takesArguments()) {
    sol.tense = deriveTense(*main, tmr);
    root.children = b.clause(*main, cs, false, voice, sol.tense);
  } else {
    root.function = Function::NounPhrase;
    root.children.push_back(b.nounPhrase(main->instanceId, Function::Subject, GrammaticalCase::Nominative, std::nullopt));
  }
  sol.clauses.push_back(std::move(root));
  return sol;
}

bool hasOptionalNodes(const LexSense& s) {
  return std::any_of(s.syn.begin(), s.syn.end(), [](const SynNode& n) { return n.optional; });
}

}  // namespace

CandidateSolution buildSolution(const CandidateSet& set, const Tmr& tmr, const KnowledgeBase& kb) {
  return build(set, tmr, kb, chooseVoice(set, tmr), false, false);
}

std::vector<CandidateSolution> buildSolutions(const CandidateSet& set, const Tmr& tmr, const KnowledgeBase& kb,
                                              const SolutionOptions& options) {
  std::vector<CandidateSolution> out;
  std::set<std::vector<std::string>> seen;
  auto push = [&](CandidateSolution s) {
    if (seen.insert(solutionLemmas(s)).second) out.push_back(std::move(s));
  };
  const Voice voice = chooseVoice(set, tmr);
  push(build(set, tmr, kb, voice, false, false));

  const TmrFrame* main = mainFrame(set, tmr, &kb);
  const CandidateSense* cs = main ? set.chosen(main->instanceId) : nullptr;
  if (options.emitVoiceVariants && cs && voice == Voice::Active && main->has("AGENT") &&
      varFor(*cs->sense, "AGENT") && isTransitiveUse(*cs->sense, *main)) {
    push(build(set, tmr, kb, Voice::Passive, false, true));
  }
  if (options.emitOptionalVariants && cs && hasOptionalNodes(*cs->sense)) {
    push(build(set, tmr, kb, voice, true, false));
  }
  return out;
}

namespace {

void collectLemmas(const Constituent& c, std::vector<std::string>& out) {
  if (!c.isGroup()) {
    if (c.function != Function::Punctuation) out.push_back(c.lemma);
    return;
  }
  for (const auto& child : c.children) collectLemmas(child, out);
}

std::string featureText(const Constituent& c) {
  std::ostringstream o;
  if (c.pos == PartOfSpeech::Verb) {
    o << toString(c.features.verbForm);
    if (c.features.verbForm == VerbForm::Finite)
      o << " " << toString(c.features.tense) << " " << c.features.person << toString(c.features.number).substr(0, 2);
  } else if (c.pos == PartOfSpeech::Noun) {
    o << toString(c.features.number);
    if (c.features.definiteness != Definiteness::None) o << " " << toString(c.features.definiteness);
  } else if (c.pos == PartOfSpeech::Pronoun) {
    static constexpr std::string_view cases[] = {"nominative", "accusative", "genitive", "reflexive"};
    o << cases[static_cast<int>(c.features.grammaticalCase)];
  }
  return o.str();
}

void dump(const Constituent& c, int depth, std::ostringstream& o) {
  o << std::string(depth * 2, ' ') << toString(c.function);
  if (!c.lemma.empty()) o << " \"" << c.lemma << "\"";
  if (auto f = featureText(c); !f.empty()) o << " [" << f << "]";
  if (!c.frameId.empty()) o << " <" << c.frameId << ">";
  o << "\n";
  for (const auto& child : c.children) dump(child, depth + 1, o);
}

}  // namespace

std::vector<std::string> solutionLemmas(const CandidateSolution& solution) {
  std::vector<std::string> out;
  for (const auto& c : solution.clauses) collectLemmas(c, out);
  return out;
}

std::string dumpSolution(const CandidateSolution& solution) {
  std::ostringstream o;
  o << "solution " << solution.headSense << "[" << solution.headLemma << "] voice=" << toString(solution.voice)
    << " tense=" << toString(solution.tense) << " mood=" << solution.shape.mood << "\n";
  o << "  set " << solution.sourceSet.signature() << "\n";
  for (const auto& c : solution.clauses) dump(c, 1, o);
  return o.str();
}

}  // namespace ontogen
