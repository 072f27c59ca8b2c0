#include "ontogen/realizer.hpp"

#include <cctype>
#include <sstream>

#include "ontogen/error.hpp"

namespace ontogen {

namespace {

struct Word {
  std::string text;
  bool indefiniteArticle = false;
  bool punctuation = false;
};

void linearize(const Constituent& c, const MorphTables& tables, std::vector<Word>& out) {
  if (!c.isGroup()) {
    Word w;
    w.punctuation = c.function == Function::Punctuation;
    w.indefiniteArticle = c.function == Function::Determiner && c.lemma == "a";
    w.text = w.punctuation || w.indefiniteArticle ? c.lemma : inflect(c.lemma, c.pos, c.features, tables);
    out.push_back(std::move(w));
    return;
  }
  for (const auto& child : c.children) linearize(child, tables, out);
}

}  // namespace

std::vector<std::string> realizeWords(const CandidateSolution& solution, const MorphTables& tables) {
  std::vector<Word> words;
  for (const auto& c : solution.clauses) linearize(c, tables, words);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!words[i].indefiniteArticle) continue;
    std::size_t j = i + 1;
    while (j < words.size() && words[j].punctuation) ++j;
    words[i].text = std::string(indefiniteArticle(j < words.size() ? words[j].text : "", tables));
  }
  std::vector<std::string> out;
  for (auto& w : words) {
    if (w.punctuation && !out.empty()) {
      out.back() += w.text;
    } else if (!w.punctuation) {
      out.push_back(std::move(w.text));
    }
  }
  if (out.empty()) throw EmptySolution();
  return out;
}

std::string realize(const CandidateSolution& solution, const MorphTables& tables) {
  const auto words = realizeWords(solution, tables);
  std::string sentence;
  for (const auto& w : words) {
    if (!sentence.empty()) sentence += ' ';
    sentence += w;
  }
  sentence[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence[0])));
  std::string terminal = ".";
  if (solution.shape.terminal) terminal = *solution.shape.terminal;
  else if (solution.shape.mood == "yes-no") terminal = "?";
  while (!sentence.empty() && std::ispunct(static_cast<unsigned char>(sentence.back())) && sentence.back() != '\'')
    sentence.pop_back();
  return sentence + terminal;
}

std::vector<std::string> sentenceWords(const std::string& sentence) {
  std::vector<std::string> out;
  std::istringstream in(sentence);
  std::string w;
  while (in >> w) {
    std::string clean;
    for (char ch : w)
      if (!std::ispunct(static_cast<unsigned char>(ch)) || ch == '\'' || ch == '-')
        clean += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (!clean.empty()) out.push_back(clean);
  }
  return out;
}

}  // namespace ontogen
