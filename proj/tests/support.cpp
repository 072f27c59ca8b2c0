#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testing {

std::string dataPath(const std::string& relative) { return std::string(ONTOGEN_TEST_DATA) + "/" + relative; }

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const ontogen::KnowledgeBase& bundledKb() {
  static const ontogen::KnowledgeBase kb =
      ontogen::loadKnowledgeBase(dataPath("kb/ontology.json"), dataPath("kb/lexicon.json"), dataPath("kb/memory.json"));
  return kb;
}

ontogen::Tmr fixture(const std::string& name) {
  const std::string path = dataPath("tmr/" + name + ".json");
  return ontogen::parseTmr(readFile(path), path);
}

}  // namespace testing
