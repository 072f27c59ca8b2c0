#include "random_world.hpp"

#include <json.hpp>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace ontogen;
using nlohmann::json;

namespace testing {

namespace {

const std::vector<std::string> kVerbs = {"fix", "attach", "fasten", "push", "pull", "lift", "paint", "clean",
                                         "wash", "open", "carry", "kick", "watch", "touch", "hunt"};
const std::vector<std::string> kNouns = {"box", "table", "lamp", "cup", "hat", "chair", "rope", "door",
                                         "stone", "bag", "key", "book", "ring", "bell", "coin"};

}  // namespace

RandomWorld makeWorld(unsigned seed) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int nEvents = pick(1, 2);
  const int nObjects = pick(2, 10 - 3 - nEvents);
  json concepts = json::array();
  concepts.push_back({{"name", "THING"}, {"parents", json::array()}});
  concepts.push_back({{"name", "OBJECT"}, {"parents", {"THING"}}});
  concepts.push_back({{"name", "EVENT"},
                      {"parents", {"THING"}},
                      {"slots", {{"AGENT", {{"sem", "OBJECT"}}}, {"THEME", {{"sem", "OBJECT"}}}}}});
  std::vector<std::string> objects;
  for (int i = 0; i < nObjects; ++i) {
    const std::string name = "O" + std::to_string(i);
    const std::string parent = i == 0 || pick(0, 1) == 0 ? "OBJECT" : objects[pick(0, i - 1)];
    concepts.push_back({{"name", name}, {"parents", {parent}}});
    objects.push_back(name);
  }
  std::vector<std::string> events;
  for (int i = 0; i < nEvents; ++i) {
    const std::string name = "E" + std::to_string(i);
    concepts.push_back({{"name", name}, {"parents", {"EVENT"}}});
    events.push_back(name);
  }

  json senses = json::array();
  std::set<std::string> usedVerbs, usedNouns;
  auto fresh = [&](const std::vector<std::string>& pool, std::set<std::string>& used) {
    std::string w;
    do w = pool[pick(0, static_cast<int>(pool.size()) - 1)];
    while (!used.insert(w).second);
    return w;
  };
  std::size_t nSenses = 0;
  for (const auto& e : events) {
    const int n = pick(1, 3);
    for (int k = 0; k < n && nSenses < 15; ++k, ++nSenses) {
      const std::string lemma = fresh(kVerbs, usedVerbs);
      json theme = {{"var", "$var2"}};
      if (pick(0, 2) == 0) theme["sem"] = objects[pick(0, nObjects - 1)];
      json synonyms = json::array();
      if (pick(0, 1) == 0 && usedVerbs.size() < kVerbs.size()) synonyms.push_back(fresh(kVerbs, usedVerbs));
      senses.push_back({{"id", lemma + "-v1"},
                        {"headword", lemma},
                        {"pos", "v"},
                        {"synonyms", synonyms},
                        {"syn",
                         {{{"cat", "subj"}, {"var", "$var1"}},
                          {{"cat", "v"}, {"var", "$var0"}},
                          {{"cat", "directobject"}, {"var", "$var2"}}}},
                        {"sem", {{"head", e}, {"slots", {{"AGENT", {{"var", "$var1"}}}, {"THEME", theme}}}}}});
    }
  }
  for (const auto& o : objects) {
    const int n = pick(1, 2);
    for (int k = 0; k < n && nSenses < 15; ++k, ++nSenses) {
      const std::string lemma = fresh(kNouns, usedNouns);
      json slots = json::object();
      if (k > 0 && pick(0, 1) == 0) slots["THEME-OF"] = {{"sem", "EVENT"}};
      senses.push_back({{"id", lemma + "-n1"},
                        {"headword", lemma},
                        {"pos", "n"},
                        {"syn", {{{"cat", "n"}, {"var", "$var0"}}}},
                        {"sem", {{"head", o}, {"slots", slots}}}});
    }
  }

  const json onto = {{"schema", "ontogen-kb/1"}, {"concepts", concepts}};
  const json lex = {{"schema", "ontogen-kb/1"}, {"senses", senses}};
  const json mem = {{"schema", "ontogen-kb/1"}, {"instances", json::array()}};
  KnowledgeBase kb(parseOntology(onto.dump()), parseLexicon(lex.dump()), parseMemory(mem.dump()));

  const std::string agent = objects[pick(0, nObjects - 1)] + "-1";
  const std::string theme = objects[pick(0, nObjects - 1)] + "-2";
  const json tmr = {{"schema", "ontogen-tmr/1"},
                    {"frames",
                     {{{"id", events[pick(0, nEvents - 1)] + "-1"}, {"slots", {{"AGENT", agent}, {"THEME", theme}}}},
                      {{"id", agent}, {"slots", json::object()}},
                      {{"id", theme}, {"slots", json::object()}}}}};
  return {std::move(kb), parseTmr(tmr.dump()), concepts.size(), nSenses};
}

}  // namespace testing
