#include <doctest.h>

#include <algorithm>
#include <set>

#include "ontogen/engine.hpp"
#include "ontogen/realizer.hpp"
#include "support.hpp"

using namespace ontogen;

namespace {

std::vector<std::string> sentences(const std::string& name) {
  return generateSentences(testing::fixture(name), testing::bundledKb());
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::set<std::string> allWords(const std::vector<std::string>& v) {
  std::set<std::string> words;
  for (const auto& s : v)
    for (const auto& w : sentenceWords(s)) words.insert(w);
  return words;
}

}  // namespace

TEST_CASE("coreferent objects are definite, new singulars indefinite") {
  const auto s = sentences("painting-nlg");
  CHECK(contains(s, "Tom secured a painting to the wall."));
  for (const auto& x : s) {
    CHECK(x.find("to the wall") != std::string::npos);
    CHECK(x.find(" a p") != std::string::npos);
  }
}

TEST_CASE("a/an follows the next word") {
  const auto s = sentences("pretty-painting");
  CHECK(contains(s, "I like an attractive painting."));
  CHECK(contains(s, "I like a pretty painting."));
  CHECK_FALSE(contains(s, "I like a attractive painting."));
}

TEST_CASE("new plurals are bare or take some") {
  const auto s = sentences("plural-paintings");
  CHECK(contains(s, "I like paintings."));
  CHECK(contains(s, "I like some paintings."));
  CHECK_FALSE(allWords(s).count("a"));
  CHECK_FALSE(allWords(s).count("the"));
}

TEST_CASE("speaker and hearer are first and second person only") {
  const auto s = sentences("speaker-hearer");
  REQUIRE_FALSE(s.empty());
  for (const auto& x : s) {
    const auto w = sentenceWords(x);
    CHECK(w.front() == "i");
    CHECK(w.back() == "you");
  }
  const auto words = allWords(s);
  for (const char* forbidden : {"he", "she", "they", "person", "the", "a"}) CHECK_FALSE(words.count(forbidden));
}

TEST_CASE("modified objects never pronominalize") {
  const auto s = sentences("blue-painting");
  REQUIRE_FALSE(s.empty());
  const auto words = allWords(s);
  CHECK_FALSE(words.count("it"));
  CHECK(contains(s, "I like the blue painting."));
}

TEST_CASE("salient unmodified objects may pronominalize") {
  const auto s = sentences("salient-painting");
  CHECK(contains(s, "I like it."));
  CHECK(contains(s, "I like the painting."));
}

TEST_CASE("named humans use names; salient ones also pronouns") {
  const auto s = sentences("johnny");
  CHECK(contains(s, "He heard a noise."));
  CHECK(contains(s, "Johnny heard a noise."));
  CHECK_FALSE(allWords(s).count("human"));
}

TEST_CASE("mass nouns are bare") {
  const auto s = sentences("request-rude");
  REQUIRE(s.size() == 1);
  CHECK(s.front() == "Make dinner, dammit!");
}

TEST_CASE("unresolved coreference is reported") {
  const auto t = parseTmr(R"({"schema":"ontogen-tmr/1","speaker":"HUMAN-1","frames":[
    {"id":"LIKE-1","slots":{"EXPERIENCER":"HUMAN-1","THEME":"DOG-9"}},{"id":"HUMAN-1","slots":{}},
    {"id":"DOG-9","coref":"DOG-999","slots":{}}]})");
  const auto report = generate(t, testing::bundledKb());
  const bool warned = std::any_of(report.warnings.begin(), report.warnings.end(),
                                  [](const std::string& w) { return w.find("DOG-999") != std::string::npos; });
  CHECK(warned);
  REQUIRE_FALSE(report.ranked.empty());
  CHECK(report.ranked.front().sentence == "I like the dog.");
}

TEST_CASE("known antecedents raise no warning") {
  const auto report = generate(testing::fixture("painting-nlg"), testing::bundledKb());
  for (const auto& w : report.warnings) CHECK(w.find("WALL-39") == std::string::npos);
}
