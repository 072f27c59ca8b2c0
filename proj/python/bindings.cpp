#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ontogen/config.hpp"
#include "ontogen/engine.hpp"
#include "ontogen/error.hpp"
#include "ontogen/knowledge.hpp"
#include "ontogen/morphology.hpp"
#include "ontogen/tmr.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ontogen;

namespace {

py::dict scored(const ScoredSentence& s) {
  py::list terms;
  for (const auto& t : s.explanation) terms.append(py::dict("name"_a = t.name, "value"_a = t.value, "note"_a = t.note));
  return py::dict("sentence"_a = s.sentence, "score"_a = s.score, "sense"_a = s.solution.headSense,
                  "explanation"_a = terms);
}

RunReport run(const Tmr& tmr, const KnowledgeBase& kb, const std::optional<std::string>& configPath,
              const std::optional<std::string>& freqPath) {
  const EngineConfig config = configPath ? loadConfig(*configPath) : EngineConfig{};
  const FrequencyTable freq = freqPath ? FrequencyTable::load(*freqPath) : FrequencyTable{};
  py::gil_scoped_release release;
  return generate(tmr, kb, config, freq);
}

}  // namespace

PYBIND11_MODULE(_ontogen, m) {
  m.doc() = "Knowledge-based sentence generation from text meaning representations";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<ValidationError>(m, "ValidationError", error);
  py::register_exception<UnknownConcept>(m, "UnknownConcept", error);
  py::register_exception<AllSetsPruned>(m, "AllSetsPruned", error);
  py::register_exception<NoRealizableSense>(m, "NoRealizableSense", error);

  py::class_<KnowledgeBase>(m, "KnowledgeBase")
      .def_property_readonly("warnings", &KnowledgeBase::warnings)
      .def("is_a", &KnowledgeBase::isA, "child"_a, "ancestor"_a)
      .def("senses_for", [](const KnowledgeBase& kb, const std::string& cname) {
        std::vector<std::string> ids;
        for (const auto& s : kb.sensesByHeadConcept(cname)) ids.push_back(s->id);
        return ids;
      }, "concept"_a)
      .def("__len__", [](const KnowledgeBase& kb) { return kb.ontology().concepts().size(); });

  py::class_<Tmr>(m, "Tmr")
      .def_property_readonly("frame_ids", [](const Tmr& t) {
        std::vector<std::string> ids;
        for (const auto& f : t.frames) ids.push_back(f.instanceId);
        return ids;
      })
      .def("to_json", &serializeTmr);

  m.def("load_kb", &loadKnowledgeBase, "ontology"_a, "lexicon"_a, "memory"_a);
  m.def("parse_tmr", [](const std::string& text) { return parseTmr(text); }, "text"_a);
  m.def("strip_metadata", &stripMetadata, "tmr"_a);
  m.def("isomorphic", [](const Tmr& a, const Tmr& b) { return tmrIsomorphic(a, b).isomorphic; }, "a"_a, "b"_a);

  m.def("generate", [](const Tmr& tmr, const KnowledgeBase& kb, std::optional<std::string> config,
                       std::optional<std::string> freq, std::size_t top) {
    const auto report = run(tmr, kb, config, freq);
    py::list out;
    for (std::size_t i = 0; i < report.ranked.size() && (top == 0 || i < top); ++i) out.append(scored(report.ranked[i]));
    return out;
  }, "tmr"_a, "kb"_a, "config"_a = py::none(), "freq"_a = py::none(), "top"_a = 0);

  m.def("report", [](const Tmr& tmr, const KnowledgeBase& kb, std::optional<std::string> config,
                     std::optional<std::string> freq, std::size_t top, bool trace) {
    return formatStructured(run(tmr, kb, config, freq), ReportOptions{top, trace, false});
  }, "tmr"_a, "kb"_a, "config"_a = py::none(), "freq"_a = py::none(), "top"_a = 0, "trace"_a = false);

  m.def("indefinite_article", [](const std::string& word) { return std::string(indefiniteArticle(word)); }, "word"_a);
  m.def("past_tense", [](const std::string& lemma) {
    FeatureBundle f;
    f.tense = Tense::Past;
    return inflect(lemma, PartOfSpeech::Verb, f);
  }, "lemma"_a);
}
