#include "ontogen/knowledge.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "ontogen/error.hpp"
#include "ontogen/tmr.hpp"

namespace ontogen {

using detail::Json;

// ---------------------------------------------------------------------------
// Constraint

Constraint Constraint::ofConcept(ConceptName name) {
  Constraint c;
  c.kind_ = Kind::Concept;
  c.concept_ = std::move(name);
  return c;
}

Constraint Constraint::literals(std::vector<std::string> values) {
  Constraint c;
  c.kind_ = Kind::Literals;
  c.literals_ = std::move(values);
  return c;
}

Constraint Constraint::range(double lo, double hi) {
  Constraint c;
  c.kind_ = Kind::Range;
  c.lo_ = lo;
  c.hi_ = hi;
  return c;
}

bool Constraint::coversScalar(double value) const {
  switch (kind_) {
    case Kind::Anything: return true;
    case Kind::Range: return value >= lo_ - 1e-9 && value <= hi_ + 1e-9;
    default: return false;
  }
}

bool Constraint::coversLiteral(std::string_view value) const {
  switch (kind_) {
    case Kind::Anything: return true;
    case Kind::Literals:
      return std::any_of(literals_.begin(), literals_.end(), [&](const std::string& l) {
        return std::equal(l.begin(), l.end(), value.begin(), value.end(),
                          [](char a, char b) { return std::tolower(a) == std::tolower(b); });
      });
    default: return false;
  }
}

std::string Constraint::toString() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Anything: out << "*"; break;
    case Kind::Concept: out << concept_; break;
    case Kind::Literals: {
      out << "{";
      for (std::size_t i = 0; i < literals_.size(); ++i) out << (i ? ", " : "") << literals_[i];
      out << "}";
      break;
    }
    case Kind::Range: out << "[" << lo_ << ", " << hi_ << "]"; break;
  }
  return out.str();
}

std::string FacetedConstraint::toString() const {
  if (isAnything()) return "*";
  std::string s;
  if (defaultFacet) s += "default " + defaultFacet->toString();
  if (sem) s += (s.empty() ? "" : " ") + std::string("sem ") + sem->toString();
  return s;
}

std::string_view toString(MatchDegree degree) {
  switch (degree) {
    case MatchDegree::None: return "none";
    case MatchDegree::Sem: return "sem";
    case MatchDegree::Default: return "default";
    case MatchDegree::Narrow: return "narrow";
    case MatchDegree::Exact: return "exact";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ontology

Ontology::Ontology(std::map<ConceptName, Concept> concepts) {
  for (auto& [name, c] : concepts) concepts_.emplace(name, std::move(c));
}

bool Ontology::contains(std::string_view name) const { return concepts_.find(name) != concepts_.end(); }

const Concept& Ontology::at(std::string_view name) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) throw UnknownConcept(std::string(name));
  return it->second;
}

bool Ontology::isA(std::string_view child, std::string_view ancestor) const {
  at(child);
  at(ancestor);
  if (child == ancestor) return true;
  std::set<std::string_view> seen;
  std::deque<std::string_view> queue{child};
  while (!queue.empty()) {
    auto current = queue.front();
    queue.pop_front();
    for (const auto& p : at(current).parents) {
      if (p == ancestor) return true;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return false;
}

std::vector<ConceptName> Ontology::ancestors(std::string_view cname) const {
  std::vector<ConceptName> out;
  std::set<std::string_view> seen{cname};
  std::deque<std::string_view> queue{cname};
  while (!queue.empty()) {
    auto current = queue.front();
    queue.pop_front();
    for (const auto& p : at(current).parents) {
      if (seen.insert(p).second) {
        out.push_back(p);
        queue.push_back(p);
      }
    }
  }
  return out;
}

std::vector<ConceptName> Ontology::isAPath(std::string_view cname) const {
  std::vector<ConceptName> path{std::string(cname)};
  const Concept* current = &at(cname);
  while (!current->parents.empty()) {
    path.push_back(current->parents.front());
    current = &at(current->parents.front());
  }
  return path;
}

FacetedConstraint Ontology::constraintOn(std::string_view cname, std::string_view property) const {
  const auto& c = at(cname);
  if (auto it = c.slots.find(std::string(property)); it != c.slots.end()) return it->second;
  for (const auto& ancestor : ancestors(cname)) {
    const auto& a = at(ancestor);
    if (auto it = a.slots.find(std::string(property)); it != a.slots.end()) return it->second;
  }
  return {};
}

bool Ontology::satisfies(std::string_view fillerConcept, const Constraint& constraint) const {
  switch (constraint.kind()) {
    case Constraint::Kind::Anything: return true;
    case Constraint::Kind::Concept: return isA(fillerConcept, constraint.conceptName());
    case Constraint::Kind::Literals: return constraint.coversLiteral(fillerConcept);
    case Constraint::Kind::Range: return false;
  }
  return false;
}

MatchDegree Ontology::matchDegree(std::string_view filler, const FacetedConstraint& needed,
                                  const std::optional<Constraint>& lexicalOverride) const {
  at(filler);
  const Constraint effective =
      lexicalOverride ? *lexicalOverride : needed.sem.value_or(Constraint::anything());
  if (!satisfies(filler, effective)) return MatchDegree::None;
  if (effective.kind() == Constraint::Kind::Concept && effective.conceptName() == filler) {
    return MatchDegree::Exact;
  }
  if (lexicalOverride) return MatchDegree::Narrow;
  if (needed.defaultFacet && satisfies(filler, *needed.defaultFacet)) return MatchDegree::Default;
  return MatchDegree::Sem;
}

// ---------------------------------------------------------------------------
// Syntax categories and senses

namespace {

constexpr std::pair<SynCategory, std::string_view> kCategoryNames[] = {
    {SynCategory::Subj, "subj"}, {SynCategory::V, "v"},       {SynCategory::DirectObject, "directobject"},
    {SynCategory::N, "n"},       {SynCategory::Pp, "pp"},     {SynCategory::Prep, "prep"},
    {SynCategory::Aux, "aux"},   {SynCategory::Adv, "adv"},   {SynCategory::Adj, "adj"},
    {SynCategory::Det, "det"},   {SynCategory::Punct, "punct"},
};

}  // namespace

std::string_view toString(SynCategory category) {
  for (const auto& [c, name] : kCategoryNames)
    if (c == category) return name;
  return "?";
}

std::optional<SynCategory> parseSynCategory(std::string_view text) {
  for (const auto& [c, name] : kCategoryNames)
    if (name == text) return c;
  return std::nullopt;
}

bool LexSense::isProperName() const { return feature("proper") == "true"; }
bool LexSense::isMassNoun() const { return feature("mass") == "true"; }

bool LexSense::takesArguments() const {
  return std::any_of(sem.slots.begin(), sem.slots.end(),
                     [](const auto& kv) { return kv.second.kind == SlotValue::Kind::Binding; });
}

const SynNode* LexSense::nodeFor(std::string_view var) const {
  for (const auto& node : syn)
    if (node.var == var) return &node;
  return nullptr;
}

std::optional<std::string> LexSense::feature(std::string_view key) const {
  auto it = features.find(std::string(key));
  if (it == features.end()) return std::nullopt;
  return it->second;
}

Lexicon::Lexicon(std::vector<LexSense> senses) {
  std::sort(senses.begin(), senses.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (auto& s : senses) {
    auto ptr = std::make_shared<const LexSense>(std::move(s));
    byHead_[ptr->sem.head].push_back(ptr);
    byHeadword_[ptr->headword].push_back(ptr);
    senses_.push_back(std::move(ptr));
  }
}

LexSensePtr Lexicon::find(std::string_view id) const {
  auto it = std::lower_bound(senses_.begin(), senses_.end(), id,
                             [](const LexSensePtr& s, std::string_view v) { return s->id < v; });
  if (it != senses_.end() && (*it)->id == id) return *it;
  return nullptr;
}

std::vector<LexSensePtr> Lexicon::byHeadConcept(std::string_view cname) const {
  auto it = byHead_.find(cname);
  return it == byHead_.end() ? std::vector<LexSensePtr>{} : it->second;
}

std::vector<LexSensePtr> Lexicon::byHeadword(std::string_view headword) const {
  auto it = byHeadword_.find(headword);
  return it == byHeadword_.end() ? std::vector<LexSensePtr>{} : it->second;
}

std::optional<std::string> InstanceFrame::first(std::string_view property) const {
  auto it = slots.find(std::string(property));
  if (it == slots.end() || it->second.empty()) return std::nullopt;
  return it->second.front();
}

EpisodicMemory::EpisodicMemory(std::map<std::string, InstanceFrame> instances) {
  for (auto& [id, f] : instances) instances_.emplace(id, std::move(f));
}

const InstanceFrame* EpisodicMemory::find(std::string_view id) const {
  auto it = instances_.find(id);
  return it == instances_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string location(std::string_view text, const std::string& source, std::string_view key) {
  const int line = detail::lineOf(text, key);
  return line > 0 ? source + ":" + std::to_string(line) : source;
}

Constraint parseConstraint(const Json& j) {
  if (j.is_string()) return Constraint::ofConcept(j.get<std::string>());
  if (!j.is_object()) throw std::invalid_argument("constraint must be a string or object");
  if (j.contains("concept")) return Constraint::ofConcept(j.at("concept").get<std::string>());
  if (j.contains("literals")) return Constraint::literals(j.at("literals").get<std::vector<std::string>>());
  if (j.contains("range")) {
    const auto& r = j.at("range");
    if (!r.is_array() || r.size() != 2) throw std::invalid_argument("range must be [lo, hi]");
    return Constraint::range(r[0].get<double>(), r[1].get<double>());
  }
  if (j.empty()) return Constraint::anything();
  throw std::invalid_argument("unrecognised constraint " + j.dump());
}

FacetedConstraint parseFaceted(const Json& j) {
  FacetedConstraint f;
  if (j.contains("sem")) f.sem = parseConstraint(j.at("sem"));
  if (j.contains("default")) f.defaultFacet = parseConstraint(j.at("default"));
  return f;
}

SlotValue parseSlotValue(const Json& j) {
  SlotValue v;
  if (j.is_number()) {
    v.kind = SlotValue::Kind::Scalar;
    v.scalar = j.get<double>();
  } else if (j.is_object() && j.contains("var")) {
    v.kind = SlotValue::Kind::Binding;
    v.var = j.at("var").get<std::string>();
    if (j.contains("sem")) v.constraint = parseConstraint(j.at("sem"));
  } else if (j.is_object() && j.contains("sem")) {
    v.constraint = parseConstraint(j.at("sem"));
  } else {
    v.constraint = parseConstraint(j);
  }
  return v;
}

template <typename Fn>
auto withRecordLocation(std::string_view text, const std::string& source, const std::string& key, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(location(text, source, key), e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(location(text, source, key), e.what());
  }
}

std::string recordKey(const Json& rec, const char* field) {
  if (rec.is_object() && rec.contains(field) && rec.at(field).is_string()) {
    return "\"" + rec.at(field).get<std::string>() + "\"";
  }
  return "";
}

void checkOntologyGraph(const std::map<ConceptName, Concept>& concepts) {
  if (concepts.empty()) throw ValidationError("ontology", "no concepts");
  auto checkRef = [&](const std::string& owner, const Constraint& c) {
    if (c.kind() == Constraint::Kind::Concept && !concepts.count(c.conceptName())) {
      throw ValidationError(owner, "dangling concept reference " + c.conceptName());
    }
    if (c.kind() == Constraint::Kind::Range && (c.lo() < 0.0 || c.hi() > 1.0 || c.lo() > c.hi())) {
      throw ValidationError(owner, "scalar range outside [0,1]");
    }
  };
  for (const auto& [name, c] : concepts) {
    for (const auto& p : c.parents)
      if (!concepts.count(p)) throw ValidationError(name, "dangling IS-A parent " + p);
    for (const auto& [prop, f] : c.slots) {
      if (f.sem) checkRef(name + "." + prop, *f.sem);
      if (f.defaultFacet) checkRef(name + "." + prop, *f.defaultFacet);
    }
  }
  // IS-A cycle detection (iterative DFS with colours).
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  for (const auto& [name, c] : concepts) mark[name] = Mark::White;
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    mark[n] = Mark::Grey;
    stack.push_back(n);
    for (const auto& p : concepts.at(n).parents) {
      if (mark[p] == Mark::Grey) {
        auto from = std::find(stack.begin(), stack.end(), p);
        std::string cycle;
        for (auto it = from; it != stack.end(); ++it) cycle += *it + " -> ";
        throw ValidationError(p, "IS-A cycle " + cycle + p);
      }
      if (mark[p] == Mark::White) visit(p);
    }
    stack.pop_back();
    mark[n] = Mark::Black;
  };
  for (const auto& [name, c] : concepts)
    if (mark[name] == Mark::White) visit(name);
}

void checkSenseShape(const LexSense& s) {
  std::set<std::string> synVars;
  int heads = 0;
  for (const auto& node : s.syn) {
    if (node.var == "$var0") ++heads;
    if (!node.var.empty() && !synVars.insert(node.var).second) {
      throw ValidationError(s.id + "/" + node.var, "variable appears twice in syn-struc");
    }
    if ((node.category == SynCategory::Prep || node.category == SynCategory::Aux) && node.roots.empty()) {
      throw ValidationError(s.id + "/" + node.var, "function word without root constraint");
    }
    if (node.var.empty() && node.category != SynCategory::Pp) {
      throw ValidationError(s.id, "syn-struc node without variable");
    }
  }
  if (heads != 1) throw ValidationError(s.id + "/$var0", "exactly one syn-struc node must carry $var0");
  std::set<std::string> bound;
  for (const auto& [prop, v] : s.sem.slots) {
    if (v.kind != SlotValue::Kind::Binding) continue;
    if (!synVars.count(v.var)) throw ValidationError(s.id + "/" + v.var, "sem-struc variable has no syn-struc node");
    bound.insert(v.var);
  }
  for (const auto& var : s.sem.nullSem) {
    if (!synVars.count(var)) throw ValidationError(s.id + "/" + var, "null-sem variable has no syn-struc node");
    if (bound.count(var)) throw ValidationError(s.id + "/" + var, "null-sem variable fills a case-role slot");
  }
}

}  // namespace

Ontology parseOntology(std::string_view text, const std::string& source) {
  const Json doc = detail::parseJson(text, source);
  detail::requireSchema(doc, "ontogen-kb/1", source);
  std::map<ConceptName, Concept> concepts;
  const Json& list = doc.contains("concepts") ? doc.at("concepts") : Json::array();
  if (!list.is_array()) throw ParseError(source, "\"concepts\" must be an array");
  for (const auto& rec : list) {
    Concept c = withRecordLocation(text, source, recordKey(rec, "name"), [&] {
      Concept out;
      out.name = rec.at("name").get<std::string>();
      if (rec.contains("parents")) out.parents = rec.at("parents").get<std::vector<std::string>>();
      if (rec.contains("slots")) {
        for (const auto& [prop, f] : rec.at("slots").items()) out.slots[prop] = parseFaceted(f);
      }
      return out;
    });
    if (concepts.count(c.name)) {
      throw ParseError(location(text, source, recordKey(rec, "name")), "duplicate concept " + c.name);
    }
    concepts.emplace(c.name, std::move(c));
  }
  checkOntologyGraph(concepts);
  return Ontology(std::move(concepts));
}

Lexicon parseLexicon(std::string_view text, const std::string& source) {
  const Json doc = detail::parseJson(text, source);
  detail::requireSchema(doc, "ontogen-kb/1", source);
  std::vector<LexSense> senses;
  std::set<std::string> ids;
  const Json& list = doc.contains("senses") ? doc.at("senses") : Json::array();
  if (!list.is_array()) throw ParseError(source, "\"senses\" must be an array");
  for (const auto& rec : list) {
    LexSense s = withRecordLocation(text, source, recordKey(rec, "id"), [&] {
      LexSense out;
      out.id = rec.at("id").get<std::string>();
      out.headword = rec.at("headword").get<std::string>();
      out.pos = rec.at("pos").get<std::string>();
      out.definition = rec.value("definition", "");
      out.example = rec.value("example", "");
      if (rec.contains("synonyms")) out.synonyms = rec.at("synonyms").get<std::vector<std::string>>();
      for (const auto& n : rec.at("syn")) {
        SynNode node;
        const auto cat = n.at("cat").get<std::string>();
        auto parsed = parseSynCategory(cat);
        if (!parsed) throw std::invalid_argument("unknown syn category '" + cat + "' in " + out.id);
        node.category = *parsed;
        if (n.contains("var") && !n.at("var").is_null()) node.var = n.at("var").get<std::string>();
        if (n.contains("root")) {
          const auto& r = n.at("root");
          node.roots = r.is_array() ? r.get<std::vector<std::string>>() : std::vector<std::string>{r.get<std::string>()};
        }
        node.optional = n.value("opt", false);
        if (n.contains("form")) node.form = n.at("form").get<std::string>();
        out.syn.push_back(std::move(node));
      }
      const auto& sem = rec.at("sem");
      out.sem.head = sem.at("head").get<std::string>();
      if (sem.contains("slots")) {
        for (const auto& [prop, v] : sem.at("slots").items()) out.sem.slots[prop] = parseSlotValue(v);
      }
      if (sem.contains("nullSem")) out.sem.nullSem = sem.at("nullSem").get<std::vector<std::string>>();
      if (rec.contains("exampleBindings")) {
        out.exampleBindings = rec.at("exampleBindings").get<std::map<std::string, std::string>>();
      }
      if (rec.contains("features")) {
        for (const auto& [k, v] : rec.at("features").items()) {
          out.features[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
      if (rec.contains("clause")) {
        const auto& c = rec.at("clause");
        out.clause.mood = c.value("mood", "declarative");
        if (c.contains("terminal")) out.clause.terminal = c.at("terminal").get<std::string>();
      }
      return out;
    });
    if (!ids.insert(s.id).second) {
      throw ParseError(location(text, source, recordKey(rec, "id")), "duplicate sense id " + s.id);
    }
    checkSenseShape(s);
    senses.push_back(std::move(s));
  }
  return Lexicon(std::move(senses));
}

EpisodicMemory parseMemory(std::string_view text, const std::string& source) {
  const Json doc = detail::parseJson(text, source);
  detail::requireSchema(doc, "ontogen-kb/1", source);
  std::map<std::string, InstanceFrame> instances;
  const Json& list = doc.contains("instances") ? doc.at("instances") : Json::array();
  if (!list.is_array()) throw ParseError(source, "\"instances\" must be an array");
  for (const auto& rec : list) {
    InstanceFrame f = withRecordLocation(text, source, recordKey(rec, "id"), [&] {
      InstanceFrame out;
      out.id = rec.at("id").get<std::string>();
      if (rec.contains("slots")) {
        for (const auto& [prop, v] : rec.at("slots").items()) {
          if (v.is_array()) {
            for (const auto& item : v) out.slots[prop].push_back(item.is_string() ? item.get<std::string>() : item.dump());
          } else {
            out.slots[prop].push_back(v.is_string() ? v.get<std::string>() : v.dump());
          }
        }
      }
      return out;
    });
    if (instances.count(f.id)) {
      throw ParseError(location(text, source, recordKey(rec, "id")), "duplicate instance " + f.id);
    }
    instances.emplace(f.id, std::move(f));
  }
  return EpisodicMemory(std::move(instances));
}

// ---------------------------------------------------------------------------
// KnowledgeBase

KnowledgeBase::KnowledgeBase(Ontology ontology, Lexicon lexicon, EpisodicMemory memory)
    : ontology_(std::move(ontology)), lexicon_(std::move(lexicon)), memory_(std::move(memory)) {
  validate();
}

void KnowledgeBase::validate() {
  auto checkConcept = [&](const std::string& owner, const Constraint& c) {
    if (c.kind() == Constraint::Kind::Concept && !ontology_.contains(c.conceptName())) {
      throw ValidationError(owner, "dangling concept reference " + c.conceptName());
    }
  };
  for (const auto& s : lexicon_.senses()) {
    if (!ontology_.contains(s->sem.head)) {
      throw ValidationError(s->id, "sem-struc head " + s->sem.head + " is not an ontology concept");
    }
    for (const auto& [prop, v] : s->sem.slots) {
      if (v.constraint) checkConcept(s->id + "." + prop, *v.constraint);
    }
  }
  for (const auto& [id, inst] : memory_.instances()) {
    std::string cname;
    try {
      cname = conceptOf(id);
    } catch (const MalformedId&) {
      throw ValidationError(id, "memory instance id is not of the form CONCEPT-n");
    }
    if (!ontology_.contains(cname)) throw ValidationError(id, "unknown concept " + cname);
  }
  // Defaults should narrow sems; reported, not rejected.
  for (const auto& [name, c] : ontology_.concepts()) {
    for (const auto& [prop, f] : c.slots) {
      if (f.sem && f.defaultFacet && f.sem->kind() == Constraint::Kind::Concept &&
          f.defaultFacet->kind() == Constraint::Kind::Concept &&
          !ontology_.isA(f.defaultFacet->conceptName(), f.sem->conceptName())) {
        warnings_.push_back(name + "." + prop + ": default " + f.defaultFacet->conceptName() +
                            " is not subsumed by sem " + f.sem->conceptName());
      }
    }
  }
}

std::vector<LexSensePtr> KnowledgeBase::sensesByHeadConcept(std::string_view cname) const {
  return lexicon_.byHeadConcept(cname);
}

std::vector<LexSensePtr> KnowledgeBase::sensesForProperty(std::string_view property,
                                                          const PropertyValue& value) const {
  std::vector<LexSensePtr> out;
  for (const auto& s : lexicon_.byHeadConcept(property)) {
    auto it = s->sem.slots.find("RANGE");
    if (it == s->sem.slots.end() || !it->second.constraint) continue;
    const Constraint& range = *it->second.constraint;
    bool covered = false;
    if (const double* d = std::get_if<double>(&value)) {
      covered = range.coversScalar(*d);
    } else {
      const auto& text = std::get<std::string>(value);
      if (range.kind() == Constraint::Kind::Concept) {
        covered = ontology_.contains(text) && ontology_.isA(text, range.conceptName());
      } else {
        covered = range.coversLiteral(text);
      }
    }
    if (covered) out.push_back(s);
  }
  return out;
}

std::vector<LexSensePtr> KnowledgeBase::pronounSenses() const {
  std::vector<LexSensePtr> out;
  for (const auto& s : lexicon_.senses())
    if (s->isPronoun()) out.push_back(s);
  return out;
}

KnowledgeBase loadKnowledgeBase(const std::string& ontologyPath, const std::string& lexiconPath,
                                const std::string& memoryPath) {
  auto ontology = parseOntology(detail::readFile(ontologyPath), ontologyPath);
  auto lexicon = parseLexicon(detail::readFile(lexiconPath), lexiconPath);
  auto memory = parseMemory(detail::readFile(memoryPath), memoryPath);
  return KnowledgeBase(std::move(ontology), std::move(lexicon), std::move(memory));
}

}  // namespace ontogen
