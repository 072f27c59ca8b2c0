#pragma once

// Static knowledge: ontology, lexicon and episodic memory.
//
// All three are loaded from "ontogen-kb/1" JSON documents (see
// docs/schemas.md) and are immutable afterwards, so a KnowledgeBase can be
// shared by concurrent generation runs.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontogen {

using ConceptName = std::string;
using PropertyName = std::string;
using SenseId = std::string;

/// A filler restriction: a concept (IS-A descendant-or-self), a set of
/// literal values, a scalar range inside [0,1], or no restriction at all.
class Constraint {
 public:
  enum class Kind { Anything, Concept, Literals, Range };

  static Constraint anything() { return Constraint{}; }
  static Constraint ofConcept(ConceptName name);
  static Constraint literals(std::vector<std::string> values);
  static Constraint range(double lo, double hi);

  Kind kind() const noexcept { return kind_; }
  const ConceptName& conceptName() const noexcept { return concept_; }
  const std::vector<std::string>& literalValues() const noexcept { return literals_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool coversScalar(double value) const;
  bool coversLiteral(std::string_view value) const;

  std::string toString() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  Kind kind_ = Kind::Anything;
  ConceptName concept_;
  std::vector<std::string> literals_;
  double lo_ = 0.0;
  double hi_ = 1.0;
};

struct FacetedConstraint {
  std::optional<Constraint> sem;
  std::optional<Constraint> defaultFacet;

  bool isAnything() const { return !sem && !defaultFacet; }
  std::string toString() const;
  friend bool operator==(const FacetedConstraint&, const FacetedConstraint&) = default;
};

struct Concept {
  ConceptName name;
  std::vector<ConceptName> parents;
  std::map<PropertyName, FacetedConstraint> slots;
};

/// Ordered so that a larger value is a better match.
enum class MatchDegree { None = 0, Sem = 1, Default = 2, Narrow = 3, Exact = 4 };

std::string_view toString(MatchDegree degree);

class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::map<ConceptName, Concept> concepts);

  bool contains(std::string_view name) const;
  const Concept& at(std::string_view name) const;  // throws UnknownConcept
  const std::map<ConceptName, Concept, std::less<>>& concepts() const noexcept { return concepts_; }

  /// Reflexive, transitive IS-A reachability.
  bool isA(std::string_view child, std::string_view ancestor) const;

  /// Nearest declaration of `property` walking up IS-A breadth-first; local
  /// declarations shadow inherited ones. Absent everywhere: anything.
  FacetedConstraint constraintOn(std::string_view cname, std::string_view property) const;

  /// Ancestors ordered by distance (self excluded), ties by declaration order.
  std::vector<ConceptName> ancestors(std::string_view cname) const;

  /// One IS-A path from `concept` up to a root, following first parents.
  std::vector<ConceptName> isAPath(std::string_view cname) const;

  bool satisfies(std::string_view fillerConcept, const Constraint& constraint) const;

  /// Degree to which `filler` fits the ontological facets `needed`, possibly
  /// tightened by a lexical override from the sense.
  MatchDegree matchDegree(std::string_view filler, const FacetedConstraint& needed,
                          const std::optional<Constraint>& lexicalOverride = std::nullopt) const;

 private:
  std::map<ConceptName, Concept, std::less<>> concepts_;
};

enum class SynCategory { Subj, V, DirectObject, N, Pp, Prep, Aux, Adv, Adj, Det, Punct };

std::string_view toString(SynCategory category);
std::optional<SynCategory> parseSynCategory(std::string_view text);

struct SynNode {
  SynCategory category = SynCategory::N;
  std::string var;                 // empty only for pp grouping nodes
  std::vector<std::string> roots;  // required word forms; first is preferred
  bool optional = false;
  std::optional<std::string> form;  // forced verb form, e.g. "participle"
};

/// Value of a sem-struc slot: a ^$varN binding (optionally narrowed by a
/// lexical constraint), a bare constraint, or a scalar feature value.
struct SlotValue {
  enum class Kind { Binding, Constraint, Scalar };
  Kind kind = Kind::Constraint;
  std::string var;
  std::optional<ontogen::Constraint> constraint;
  double scalar = 0.0;
};

struct SemFrame {
  ConceptName head;
  std::map<PropertyName, SlotValue> slots;
  std::vector<std::string> nullSem;
};

/// Clause-level properties a construction imposes on its realization.
struct ClauseShape {
  std::string mood = "declarative";  // declarative | yes-no | imperative
  std::optional<std::string> terminal;
};

struct LexSense {
  SenseId id;
  std::string headword;
  std::string pos;  // n, v, adj, adv, pron, ...
  std::string definition;
  std::string example;
  std::vector<std::string> synonyms;
  std::vector<SynNode> syn;
  SemFrame sem;
  std::map<std::string, std::string> exampleBindings;  // var -> word
  std::map<std::string, std::string> features;          // person, number, gender, mass, proper
  ClauseShape clause;

  bool isPronoun() const { return pos == "pron"; }
  bool isProperName() const;
  bool isMassNoun() const;
  /// True when some sem-struc slot binds a syntactic variable.
  bool takesArguments() const;
  const SynNode* nodeFor(std::string_view var) const;
  std::optional<std::string> feature(std::string_view key) const;
};

using LexSensePtr = std::shared_ptr<const LexSense>;

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexSense> senses);

  std::span<const LexSensePtr> senses() const noexcept { return senses_; }
  LexSensePtr find(std::string_view id) const;
  std::vector<LexSensePtr> byHeadConcept(std::string_view cname) const;
  std::vector<LexSensePtr> byHeadword(std::string_view headword) const;

 private:
  std::vector<LexSensePtr> senses_;  // sorted by id
  std::map<ConceptName, std::vector<LexSensePtr>, std::less<>> byHead_;
  std::map<std::string, std::vector<LexSensePtr>, std::less<>> byHeadword_;
};

struct InstanceFrame {
  std::string id;
  std::map<PropertyName, std::vector<std::string>> slots;

  std::optional<std::string> first(std::string_view property) const;
};

class EpisodicMemory {
 public:
  EpisodicMemory() = default;
  explicit EpisodicMemory(std::map<std::string, InstanceFrame> instances);

  const InstanceFrame* find(std::string_view id) const;
  const std::map<std::string, InstanceFrame, std::less<>>& instances() const noexcept { return instances_; }

 private:
  std::map<std::string, InstanceFrame, std::less<>> instances_;
};

/// Scalar or symbolic property value used for modifier lookup.
using PropertyValue = std::variant<double, std::string>;

class KnowledgeBase {
 public:
  KnowledgeBase(Ontology ontology, Lexicon lexicon, EpisodicMemory memory);

  const Ontology& ontology() const noexcept { return ontology_; }
  const Lexicon& lexicon() const noexcept { return lexicon_; }
  const EpisodicMemory& memory() const noexcept { return memory_; }
  /// Non-fatal findings from validation (e.g. default facet outside sem).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool isA(std::string_view child, std::string_view ancestor) const { return ontology_.isA(child, ancestor); }
  FacetedConstraint constraintOn(std::string_view cname, std::string_view property) const {
    return ontology_.constraintOn(cname, property);
  }
  MatchDegree matchDegree(std::string_view filler, const FacetedConstraint& needed,
                          const std::optional<Constraint>& lexicalOverride = std::nullopt) const {
    return ontology_.matchDegree(filler, needed, lexicalOverride);
  }

  /// Senses whose sem-struc head is exactly `concept`, ordered by id.
  std::vector<LexSensePtr> sensesByHeadConcept(std::string_view cname) const;

  /// Modifier senses headed by `property` whose RANGE covers `value`.
  std::vector<LexSensePtr> sensesForProperty(std::string_view property, const PropertyValue& value) const;

  /// Pronoun senses, ordered by id.
  std::vector<LexSensePtr> pronounSenses() const;

 private:
  void validate();

  Ontology ontology_;
  Lexicon lexicon_;
  EpisodicMemory memory_;
  std::vector<std::string> warnings_;
};

// Loaders. Each throws ParseError (with file:line) for malformed documents
// and ValidationError naming the offending entity for invariant violations.
Ontology parseOntology(std::string_view text, const std::string& source = "<ontology>");
Lexicon parseLexicon(std::string_view text, const std::string& source = "<lexicon>");
EpisodicMemory parseMemory(std::string_view text, const std::string& source = "<memory>");

KnowledgeBase loadKnowledgeBase(const std::string& ontologyPath, const std::string& lexiconPath,
                                const std::string& memoryPath);

}  // namespace ontogen
