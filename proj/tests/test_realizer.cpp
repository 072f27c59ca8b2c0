#include <doctest.h>

#include <algorithm>

#include "ontogen/error.hpp"
#include "ontogen/pipeline.hpp"
#include "ontogen/realizer.hpp"
#include "ontogen/solution.hpp"
#include "support.hpp"

using namespace ontogen;

namespace {

Constituent leaf(Function fn, std::string lemma, PartOfSpeech pos, FeatureBundle f = {}) {
  Constituent c;
  c.function = fn;
  c.lemma = std::move(lemma);
  c.pos = pos;
  c.features = f;
  return c;
}

Constituent group(Function fn, std::vector<Constituent> children) {
  Constituent c;
  c.function = fn;
  c.children = std::move(children);
  return c;
}

CandidateSolution clause(std::vector<Constituent> children) {
  CandidateSolution s;
  s.clauses.push_back(group(Function::VerbPhrase, std::move(children)));
  return s;
}

FeatureBundle plural() {
  FeatureBundle f;
  f.number = Number::Plural;
  return f;
}

FeatureBundle finite(Tense t, Number n = Number::Singular, int person = 3) {
  FeatureBundle f;
  f.tense = t;
  f.number = n;
  f.person = person;
  return f;
}

std::vector<CandidateSolution> solutionsFor(const std::string& name) {
  const auto t = testing::fixture(name);
  const auto r = runLexicalSelection(t, testing::bundledKb(), t.context);
  std::vector<CandidateSolution> out;
  for (const auto& set : r.sets) out.push_back(buildSolution(set, t, testing::bundledKb()));
  return out;
}

}  // namespace

TEST_CASE("subject-verb agreement") {
  auto dogs = clause({group(Function::Subject, {leaf(Function::NounHead, "dog", PartOfSpeech::Noun, plural())}),
                      leaf(Function::MainVerb, "walk", PartOfSpeech::Verb, finite(Tense::Present, Number::Plural))});
  CHECK(realize(dogs) == "Dogs walk.");
  auto dog = clause({group(Function::Subject, {leaf(Function::Determiner, "the", PartOfSpeech::Other),
                                               leaf(Function::NounHead, "dog", PartOfSpeech::Noun)}),
                     leaf(Function::MainVerb, "walk", PartOfSpeech::Verb, finite(Tense::Present))});
  CHECK(realize(dog) == "The dog walks.");
  auto were = clause({group(Function::Subject, {leaf(Function::NounHead, "they", PartOfSpeech::Pronoun, plural())}),
                      leaf(Function::Auxiliary, "be", PartOfSpeech::Verb, finite(Tense::Past, Number::Plural)),
                      leaf(Function::MainVerb, "tire", PartOfSpeech::Verb, FeatureBundle{.verbForm = VerbForm::Participle})});
  CHECK(realize(were) == "They were tired.");
}

TEST_CASE("articles resolve against the following word") {
  auto s = clause({leaf(Function::Determiner, "a", PartOfSpeech::Other),
                   leaf(Function::Modifier, "ugly", PartOfSpeech::Adjective),
                   leaf(Function::NounHead, "wall", PartOfSpeech::Noun)});
  CHECK(realizeWords(s) == std::vector<std::string>{"an", "ugly", "wall"});
}

TEST_CASE("punctuation attaches and terminals follow the shape") {
  auto s = clause({leaf(Function::MainVerb, "make", PartOfSpeech::Verb, FeatureBundle{.verbForm = VerbForm::Imperative}),
                   leaf(Function::NounHead, "dinner", PartOfSpeech::Noun),
                   leaf(Function::Punctuation, ",", PartOfSpeech::Other),
                   leaf(Function::FixedWord, "dammit", PartOfSpeech::Other)});
  s.shape.terminal = "!";
  CHECK(realize(s) == "Make dinner, dammit!");
  CHECK(solutionLemmas(s).size() == 3);
  CHECK(realizeWords(s).size() == 3);
  s.shape.terminal.reset();
  s.shape.mood = "yes-no";
  CHECK(realize(s).back() == '?');
}

TEST_CASE("empty solution") {
  CandidateSolution s;
  CHECK_THROWS_AS(realize(s), EmptySolution);
  CHECK_THROWS_AS(realizeWords(clause({})), EmptySolution);
}

TEST_CASE("running example realization") {
  const auto solutions = solutionsFor("painting-nlg");
  std::vector<std::string> sentences;
  for (const auto& s : solutions) sentences.push_back(realize(s));
  CHECK(std::count(sentences.begin(), sentences.end(), "Tom secured a painting to the wall.") == 1);
  CHECK(std::count(sentences.begin(), sentences.end(), "Tom fixed a painting to the wall.") == 1);
  for (const auto& s : solutions) {
    CHECK((s.tense == Tense::Past));
    CHECK((s.voice == Voice::Active));
  }
}

TEST_CASE("synonym sentences differ in exactly one token") {
  const auto solutions = solutionsFor("painting-nlg");
  std::vector<std::vector<std::string>> fix;
  for (const auto& s : solutions)
    if (s.headSense == "fix-v2" && s.sourceSet.chosen("PICTURE-7")->sense->id == "painting-n1")
      fix.push_back(realizeWords(s));
  REQUIRE(fix.size() == 4);
  for (std::size_t i = 1; i < fix.size(); ++i) {
    REQUIRE(fix[i].size() == fix[0].size());
    int diff = 0;
    for (std::size_t k = 0; k < fix[0].size(); ++k) diff += fix[i][k] != fix[0][k];
    CHECK(diff == 1);
  }
}

TEST_CASE("passive when the agent is absent") {
  const auto t = testing::fixture("passive");
  const auto r = runLexicalSelection(t, testing::bundledKb(), t.context);
  REQUIRE_FALSE(r.sets.empty());
  CHECK((chooseVoice(r.sets.front(), t) == Voice::Passive));
  std::vector<std::string> sentences;
  for (const auto& set : r.sets) sentences.push_back(realize(buildSolution(set, t, testing::bundledKb())));
  CHECK(std::count(sentences.begin(), sentences.end(), "A painting was secured to the wall.") == 1);
}

TEST_CASE("tense from time slots") {
  const auto t = testing::fixture("walk-intransitive");
  CHECK((deriveTense(t.frames.front(), t) == Tense::Present));
  const auto f2 = testing::fixture("painting-nlg");
  CHECK((deriveTense(*f2.find("FASTEN-18"), f2) == Tense::Past));
}

TEST_CASE("construction realizations") {
  const auto solutions = solutionsFor("request-polite");
  std::vector<std::string> sentences;
  for (const auto& s : solutions) sentences.push_back(realize(s));
  CHECK(std::count(sentences.begin(), sentences.end(), "I would really appreciate it if you would make dinner.") == 1);
  CHECK(std::count(sentences.begin(), sentences.end(), "It would be much appreciated if you would make dinner.") == 1);
  CHECK(std::count(sentences.begin(), sentences.end(), "Could you please make dinner?") == 1);
}

TEST_CASE("token conservation over fixtures") {
  for (const char* name : {"painting-nlg", "moor", "request-polite", "request-rude", "pretty-painting", "johnny",
                           "plural-paintings", "passive", "funny-waiter"}) {
    CAPTURE(name);
    for (const auto& s : solutionsFor(name)) CHECK(realizeWords(s).size() == solutionLemmas(s).size());
  }
}

TEST_CASE("sentence words") {
  CHECK(sentenceWords("Make dinner, dammit!") == std::vector<std::string>{"make", "dinner", "dammit"});
  CHECK(sentenceWords("Johnny jumped onto his grandmother's couch.") ==
        std::vector<std::string>{"johnny", "jumped", "onto", "his", "grandmother's", "couch"});
}
