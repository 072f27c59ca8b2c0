// ontogen: command-line front end.
//
//   ontogen generate --ontology O --lexicon L --memory M --tmr T [--config C]
//                    [--freq F] [--top N] [--trace] [--dump-solutions]
//                    [--format human|structured] [--out FILE]
//   ontogen strip    --tmr T [--out FILE]
//   ontogen validate --ontology O --lexicon L --memory M
//   ontogen inspect  --ontology O --lexicon L --memory M --concept C
//
// Exit status: 0 success, 1 input or schema error, 2 inexpressible TMR.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ontogen/config.hpp"
#include "ontogen/engine.hpp"
#include "ontogen/error.hpp"
#include "ontogen/knowledge.hpp"
#include "ontogen/tmr.hpp"

namespace {

struct KbPaths {
  std::string ontology;
  std::string lexicon;
  std::string memory;
};

void addKbOptions(CLI::App* cmd, KbPaths& kb) {
  cmd->add_option("--ontology", kb.ontology, "ontology JSON")->required();
  cmd->add_option("--lexicon", kb.lexicon, "lexicon JSON")->required();
  cmd->add_option("--memory", kb.memory, "episodic memory JSON")->required();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ontogen::ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ontogen::ParseError(out, "cannot write file");
  f << text;
}

std::string describeSlot(const std::string& prop, const ontogen::FacetedConstraint& f) {
  return "  " + prop + " " + f.toString();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-based sentence generation from meaning representations"};
  app.require_subcommand(1);

  KbPaths kb;
  std::string tmrPath, configPath, freqPath, format = "human", outPath, conceptName;
  std::size_t top = 0;
  bool trace = false, dump = false;

  auto* gen = app.add_subcommand("generate", "rank sentences for a TMR");
  addKbOptions(gen, kb);
  gen->add_option("--tmr", tmrPath, "TMR JSON")->required();
  gen->add_option("--config", configPath, "configuration JSON");
  gen->add_option("--freq", freqPath, "construction frequency JSON");
  gen->add_option("--top", top, "number of sentences to print (default 5, 0 = all)");
  gen->add_flag("--trace", trace, "print stage counts, pruning trace and score ledgers");
  gen->add_flag("--dump-solutions", dump, "print solution plans");
  gen->add_option("--format", format, "human or structured")->check(CLI::IsMember({"human", "structured"}));
  gen->add_option("--out", outPath, "write the report to a file");

  auto* strip = app.add_subcommand("strip", "remove NLU metadata from a TMR");
  strip->add_option("--tmr", tmrPath, "TMR JSON")->required();
  strip->add_option("--out", outPath, "output file");

  auto* validate = app.add_subcommand("validate", "check knowledge-base invariants");
  addKbOptions(validate, kb);

  auto* inspect = app.add_subcommand("inspect", "show a concept and the senses it heads");
  addKbOptions(inspect, kb);
  inspect->add_option("--concept", conceptName, "concept name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (strip->parsed()) {
      auto tmr = ontogen::parseTmr(slurp(tmrPath), tmrPath);
      emit(ontogen::serializeTmr(ontogen::stripMetadata(tmr)), outPath);
      return 0;
    }

    const auto knowledge = ontogen::loadKnowledgeBase(kb.ontology, kb.lexicon, kb.memory);

    if (validate->parsed()) {
      for (const auto& w : knowledge.warnings()) std::cout << "warning: " << w << "\n";
      std::cout << "ok: " << knowledge.ontology().concepts().size() << " concepts, "
                << knowledge.lexicon().senses().size() << " senses, " << knowledge.memory().instances().size()
                << " instances\n";
      return 0;
    }

    if (inspect->parsed()) {
      const auto& onto = knowledge.ontology();
      const auto& c = onto.at(conceptName);
      std::cout << c.name << "\n";
      std::cout << "is-a:";
      for (const auto& a : onto.isAPath(c.name)) std::cout << " " << a;
      std::cout << "\nslots:\n";
      std::set<std::string> props;
      for (const auto& a : onto.isAPath(c.name))
        for (const auto& [p, f] : onto.at(a).slots) props.insert(p);
      for (const auto& p : props) std::cout << describeSlot(p, onto.constraintOn(c.name, p)) << "\n";
      std::cout << "senses:\n";
      for (const auto& s : knowledge.sensesByHeadConcept(c.name)) {
        std::cout << "  " << s->id << " (" << s->headword;
        for (const auto& syn : s->synonyms) std::cout << ", " << syn;
        std::cout << ")";
        for (const auto& [p, v] : s->sem.slots) {
          std::cout << " " << p << "=";
          if (v.kind == ontogen::SlotValue::Kind::Scalar) std::cout << v.scalar;
          else if (v.kind == ontogen::SlotValue::Kind::Binding)
            std::cout << v.var << (v.constraint ? "(" + v.constraint->toString() + ")" : "");
          else std::cout << (v.constraint ? v.constraint->toString() : "*");
        }
        std::cout << "\n";
      }
      return 0;
    }

    ontogen::EngineConfig config = configPath.empty() ? ontogen::EngineConfig{} : ontogen::loadConfig(configPath);
    const auto freq = freqPath.empty() ? ontogen::FrequencyTable{} : ontogen::FrequencyTable::load(freqPath);
    const auto tmr = ontogen::parseTmr(slurp(tmrPath), tmrPath);
    ontogen::ReportOptions options;
    options.top = gen->count("--top") ? top : config.top;
    options.trace = trace;
    options.dumpSolutions = dump;

    const auto start = std::chrono::steady_clock::now();
    try {
      const auto report = ontogen::generate(tmr, knowledge, config, freq);
      emit(format == "structured" ? ontogen::formatStructured(report, options) : ontogen::formatHuman(report, options),
           outPath);
    } catch (const ontogen::AllSetsPruned& e) {
      std::cerr << "ontogen: " << e.what() << "\n";
      for (const auto& line : e.explanation()) std::cerr << "  " << line << "\n";
      return 2;
    } catch (const ontogen::NoRealizableSense& e) {
      std::cerr << "ontogen: " << e.what() << "\n";
      return 2;
    }
    if (trace) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "# elapsed " << ms << " ms\n";
    }
    return 0;
  } catch (const ontogen::Error& e) {
    std::cerr << "ontogen: " << e.what() << "\n";
    return 1;
  }
}
