#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ontogen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `location` is "file:line" when known.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Well-formed input that violates a load-time invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string entity, const std::string& what)
      : Error(entity + ": " + what), entity_(std::move(entity)) {}
  const std::string& entity() const noexcept { return entity_; }

 private:
  std::string entity_;
};

class UnknownConcept : public Error {
 public:
  explicit UnknownConcept(const std::string& name) : Error("unknown concept " + name) {}
};

class MalformedId : public Error {
 public:
  explicit MalformedId(const std::string& id)
      : Error("malformed instance id '" + id + "' (expected CONCEPT-n)") {}
};

class NoRealizableSense : public Error {
 public:
  NoRealizableSense(const std::string& frame, const std::string& cname)
      : Error("no lexical sense for " + frame + " (" + cname + ") or any ancestor"),
        frame_(frame) {}
  const std::string& frame() const noexcept { return frame_; }

 private:
  std::string frame_;
};

/// Every candidate set was eliminated: the TMR cannot be expressed with the
/// loaded lexicon. `explanation` carries the pruning trail as text lines.
class AllSetsPruned : public Error {
 public:
  AllSetsPruned(const std::string& stage, std::vector<std::string> explanation)
      : Error("all candidate sets pruned at " + stage), stage_(stage),
        explanation_(std::move(explanation)) {}
  const std::string& stage() const noexcept { return stage_; }
  const std::vector<std::string>& explanation() const noexcept { return explanation_; }

 private:
  std::string stage_;
  std::vector<std::string> explanation_;
};

class UnboundVariable : public Error {
 public:
  UnboundVariable(const std::string& sense, const std::string& var)
      : Error("unbound variable " + sense + "/" + var) {}
};

class EmptySolution : public Error {
 public:
  EmptySolution() : Error("solution has no constituents") {}
};

class NoCandidates : public Error {
 public:
  NoCandidates() : Error("no candidate sentences to rank") {}
};

}  // namespace ontogen
