#include "ontogen/morphology.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "json_util.hpp"
#include "ontogen/error.hpp"

namespace ontogen {

std::string_view toString(Tense t) {
  switch (t) {
    case Tense::None: return "none";
    case Tense::Past: return "past";
    case Tense::Present: return "present";
    case Tense::Future: return "future";
  }
  return "?";
}

std::string_view toString(VerbForm f) {
  switch (f) {
    case VerbForm::Finite: return "finite";
    case VerbForm::Infinitive: return "infinitive";
    case VerbForm::Imperative: return "imperative";
    case VerbForm::Participle: return "participle";
  }
  return "?";
}

std::string_view toString(Number n) { return n == Number::Plural ? "plural" : "singular"; }
std::string_view toString(Voice v) { return v == Voice::Passive ? "passive" : "active"; }

std::string_view toString(Definiteness d) {
  switch (d) {
    case Definiteness::None: return "none";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Definite: return "definite";
    case Definiteness::Some: return "some";
    case Definiteness::Bare: return "bare";
  }
  return "?";
}

namespace {

bool isVowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

bool endsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool startsWith(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

int syllables(std::string_view word) {
  int groups = 0;
  bool inVowel = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const bool v = isVowel(word[i]) || (word[i] == 'y' && i > 0);
    if (v && !inVowel) ++groups;
    inVowel = v;
  }
  // silent final e ("secure", "make")
  if (groups > 1 && endsWith(word, "e") && !endsWith(word, "le") && !endsWith(word, "ee")) --groups;
  return std::max(groups, 1);
}

bool consonantY(std::string_view w) { return w.size() >= 2 && w.back() == 'y' && !isVowel(w[w.size() - 2]); }

bool sibilant(std::string_view w) {
  return endsWith(w, "s") || endsWith(w, "x") || endsWith(w, "z") || endsWith(w, "ch") || endsWith(w, "sh");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

constexpr std::array kModals = {"will", "would", "can", "could", "shall", "should", "may", "might", "must"};

bool isModal(std::string_view lemma) {
  return std::find(kModals.begin(), kModals.end(), lemma) != kModals.end();
}

std::string inflectBe(const FeatureBundle& f) {
  switch (f.verbForm) {
    case VerbForm::Infinitive:
    case VerbForm::Imperative: return "be";
    case VerbForm::Participle: return "been";
    case VerbForm::Finite: break;
  }
  const bool plural = f.number == Number::Plural || f.person == 2;
  if (f.tense == Tense::Past) return plural ? "were" : (f.person == 1 || f.person == 3 ? "was" : "were");
  if (plural) return "are";
  return f.person == 1 ? "am" : "is";
}

std::string inflectVerb(std::string_view lemma, const FeatureBundle& f, const MorphTables& tables) {
  if (isModal(lemma)) return std::string(lemma);
  if (lemma == "be") return inflectBe(f);
  const VerbForms* irregular = tables.irregularVerb(lemma);
  switch (f.verbForm) {
    case VerbForm::Infinitive:
    case VerbForm::Imperative: return std::string(lemma);
    case VerbForm::Participle: return irregular ? irregular->participle : regularPast(lemma, tables);
    case VerbForm::Finite: break;
  }
  if (f.tense == Tense::Past) return irregular ? irregular->past : regularPast(lemma, tables);
  if (f.tense == Tense::Future) return std::string(lemma);
  if (f.person == 3 && f.number == Number::Singular) {
    if (lemma == "have") return "has";
    return regularThirdSingular(lemma);
  }
  return std::string(lemma);
}

std::string inflectNoun(std::string_view lemma, const FeatureBundle& f, const MorphTables& tables) {
  std::string form(lemma);
  if (f.number == Number::Plural) {
    const std::string* irregular = tables.irregularPlural(lemma);
    form = irregular ? *irregular : regularPlural(lemma);
  }
  if (f.possessive) form += (f.number == Number::Plural && endsWith(form, "s")) ? "'" : "'s";
  return form;
}

std::string inflectPronoun(std::string_view lemma, const FeatureBundle& f, const MorphTables& tables) {
  const PronounParadigm* p = tables.pronoun(lemma);
  if (!p) return std::string(lemma);
  if (f.possessive) return p->genitive;
  switch (f.grammaticalCase) {
    case GrammaticalCase::Nominative: return p->nominative;
    case GrammaticalCase::Accusative: return p->accusative;
    case GrammaticalCase::Genitive: return p->genitive;
    case GrammaticalCase::Reflexive: return p->reflexive;
  }
  return p->nominative;
}

}  // namespace

std::string regularPast(std::string_view lemma, const MorphTables& tables) {
  std::string w(lemma);
  if (w.empty()) return w;
  if (endsWith(w, "e")) return w + "d";
  if (consonantY(w)) return w.substr(0, w.size() - 1) + "ied";
  const std::size_t n = w.size();
  const bool cvc = n >= 3 && !isVowel(w[n - 1]) && isVowel(w[n - 2]) && !isVowel(w[n - 3]) &&
                   std::string_view("wxy").find(w[n - 1]) == std::string_view::npos;
  if (tables.doublesFinalConsonant(w) || (cvc && syllables(w) == 1)) return w + w.back() + "ed";
  return w + "ed";
}

std::string regularThirdSingular(std::string_view lemma) {
  std::string w(lemma);
  if (consonantY(w)) return w.substr(0, w.size() - 1) + "ies";
  if (sibilant(w) || endsWith(w, "o")) return w + "es";
  return w + "s";
}

std::string regularPlural(std::string_view lemma) {
  std::string w(lemma);
  if (consonantY(w)) return w.substr(0, w.size() - 1) + "ies";
  if (sibilant(w)) return w + "es";
  return w + "s";
}

std::string inflect(std::string_view lemma, PartOfSpeech pos, const FeatureBundle& features,
                    const MorphTables& tables) {
  switch (pos) {
    case PartOfSpeech::Verb: return inflectVerb(lemma, features, tables);
    case PartOfSpeech::Noun: return inflectNoun(lemma, features, tables);
    case PartOfSpeech::Pronoun: return inflectPronoun(lemma, features, tables);
    case PartOfSpeech::Adjective:
    case PartOfSpeech::Other: break;
  }
  return std::string(lemma);
}

std::string_view indefiniteArticle(std::string_view nextWord, const MorphTables& tables) {
  const std::string w = lower(nextWord);
  if (w.empty()) return "a";
  if (tables.takesAn(w)) return "an";
  if (tables.takesA(w)) return "a";
  // Prefix families with a consonant-initial pronunciation and vice versa.
  for (std::string_view p : {"hour", "honest", "honor", "honour", "heir"})
    if (startsWith(w, p)) return "an";
  if (startsWith(w, "eu") || startsWith(w, "ewe") || startsWith(w, "one") || startsWith(w, "use") ||
      startsWith(w, "usu") || startsWith(w, "uti") || startsWith(w, "ura")) {
    return "a";
  }
  if (startsWith(w, "uni") && w.size() > 3 && w[3] != 'n') return "a";
  return isVowel(w.front()) ? "an" : "a";
}

// ---------------------------------------------------------------------------
// Tables

const VerbForms* MorphTables::irregularVerb(std::string_view lemma) const {
  auto it = verbs_.find(lemma);
  return it == verbs_.end() ? nullptr : &it->second;
}

const std::string* MorphTables::irregularPlural(std::string_view lemma) const {
  auto it = plurals_.find(lemma);
  return it == plurals_.end() ? nullptr : &it->second;
}

const PronounParadigm* MorphTables::pronoun(std::string_view lemma) const {
  auto it = pronouns_.find(lemma);
  return it == pronouns_.end() ? nullptr : &it->second;
}

bool MorphTables::takesAn(std::string_view word) const { return anWords_.find(word) != anWords_.end(); }
bool MorphTables::takesA(std::string_view word) const { return aWords_.find(word) != aWords_.end(); }

MorphTables MorphTables::parse(std::string_view json, const std::string& source) {
  const auto doc = detail::parseJson(json, source);
  detail::requireSchema(doc, "ontogen-morph/1", source);
  MorphTables t;
  try {
    for (const auto& [lemma, forms] : doc.at("verbs").items()) {
      t.verbs_[lemma] = VerbForms{forms.at("past").get<std::string>(), forms.at("participle").get<std::string>()};
    }
    for (const auto& [lemma, plural] : doc.at("plurals").items()) t.plurals_[lemma] = plural.get<std::string>();
    for (const auto& [lemma, p] : doc.at("pronouns").items()) {
      PronounParadigm par;
      par.nominative = p.at("nominative").get<std::string>();
      par.accusative = p.at("accusative").get<std::string>();
      par.genitive = p.at("genitive").get<std::string>();
      par.reflexive = p.at("reflexive").get<std::string>();
      par.person = p.at("person").get<int>();
      par.number = p.at("number").get<std::string>() == "plural" ? Number::Plural : Number::Singular;
      t.pronouns_[lemma] = std::move(par);
    }
    for (const auto& w : doc.value("doubling", detail::Json::array())) t.doubling_.insert(w.get<std::string>());
    for (const auto& w : doc.value("an", detail::Json::array())) t.anWords_.insert(lower(w.get<std::string>()));
    for (const auto& w : doc.value("a", detail::Json::array())) t.aWords_.insert(lower(w.get<std::string>()));
  } catch (const detail::Json::exception& e) {
    throw ParseError(source, e.what());
  }
  return t;
}

const MorphTables& MorphTables::builtin() {
  static const MorphTables tables = parse(defaultMorphologyJson(), "data/morph.json");
  return tables;
}

}  // namespace ontogen
