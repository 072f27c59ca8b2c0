#pragma once

// English inflection and article choice, driven by "ontogen-morph/1" tables.

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ontogen/features.hpp"

namespace ontogen {

enum class PartOfSpeech { Verb, Noun, Pronoun, Adjective, Other };

struct VerbForms {
  std::string past;
  std::string participle;
};

struct PronounParadigm {
  std::string nominative;
  std::string accusative;
  std::string genitive;
  std::string reflexive;
  int person = 3;
  Number number = Number::Singular;
};

class MorphTables {
 public:
  /// Tables compiled from data/morph.json.
  static const MorphTables& builtin();
  static MorphTables parse(std::string_view json, const std::string& source = "<morph>");

  const VerbForms* irregularVerb(std::string_view lemma) const;
  const std::string* irregularPlural(std::string_view lemma) const;
  const PronounParadigm* pronoun(std::string_view lemma) const;
  bool doublesFinalConsonant(std::string_view lemma) const { return doubling_.count(std::string(lemma)) > 0; }
  bool takesAn(std::string_view word) const;
  bool takesA(std::string_view word) const;
  std::size_t irregularCount() const { return verbs_.size() + plurals_.size(); }

 private:
  std::map<std::string, VerbForms, std::less<>> verbs_;
  std::map<std::string, std::string, std::less<>> plurals_;
  std::map<std::string, PronounParadigm, std::less<>> pronouns_;
  std::set<std::string> doubling_;
  std::set<std::string, std::less<>> anWords_;
  std::set<std::string, std::less<>> aWords_;
};

/// Inflected form of `lemma`. Verbs use tense/verbForm/person/number, nouns
/// number and possessive, pronouns case/person/number. Unknown lemmas
/// follow the regular rules.
std::string inflect(std::string_view lemma, PartOfSpeech pos, const FeatureBundle& features,
                    const MorphTables& tables = MorphTables::builtin());

/// "a" or "an" for the word that follows the article.
std::string_view indefiniteArticle(std::string_view nextWord, const MorphTables& tables = MorphTables::builtin());

// Regular rules, exposed for tests and for the irregular-table fallback.
std::string regularPast(std::string_view lemma, const MorphTables& tables = MorphTables::builtin());
std::string regularThirdSingular(std::string_view lemma);
std::string regularPlural(std::string_view lemma);

std::string_view defaultMorphologyJson();

}  // namespace ontogen
