#pragma once

#include <string_view>

namespace ontogen {

enum class Tense { None, Past, Present, Future };
enum class VerbForm { Finite, Infinitive, Imperative, Participle };
enum class Number { Singular, Plural };
enum class Voice { Active, Passive };
enum class Definiteness { None, Indefinite, Definite, Some, Bare };
enum class Interrogative { None, YesNo, Wh };
enum class GrammaticalCase { Nominative, Accusative, Genitive, Reflexive };

/// Grammatical features carried by a constituent into realization.
struct FeatureBundle {
  Tense tense = Tense::None;
  VerbForm verbForm = VerbForm::Finite;
  Number number = Number::Singular;
  int person = 3;
  Voice voice = Voice::Active;
  Definiteness definiteness = Definiteness::None;
  bool possessive = false;
  Interrogative interrogative = Interrogative::None;
  GrammaticalCase grammaticalCase = GrammaticalCase::Nominative;

  friend bool operator==(const FeatureBundle&, const FeatureBundle&) = default;
};

std::string_view toString(Tense t);
std::string_view toString(VerbForm f);
std::string_view toString(Number n);
std::string_view toString(Voice v);
std::string_view toString(Definiteness d);

}  // namespace ontogen
