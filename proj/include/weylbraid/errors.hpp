#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace weylbraid {

// Base class for all domain errors.  Each error carries a stable
// machine-readable code plus optional structured detail; the CLI turns
// these into {"error": {"code": ..., "message": ..., "detail": ...}}
// and exits with status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(message),
        code_(std::move(code)),
        detail_(std::move(detail)) {}

  const std::string& code() const { return code_; }
  const nlohmann::json& detail() const { return detail_; }

 private:
  std::string code_;
  nlohmann::json detail_;
};

#define WEYLBRAID_DEFINE_ERROR(Name, code_str)                        \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message,                         \
                  nlohmann::json detail = nlohmann::json::object())   \
        : Error(code_str, message, std::move(detail)) {}              \
  }

// A matrix or rank that does not match any type in the finite/affine
// classification handled here.
WEYLBRAID_DEFINE_ERROR(ClassificationError, "classification_error");

// Folding requested along a symmetry whose orbits touch (adjacent nodes
// in one orbit), so no Coxeter quotient exists.
WEYLBRAID_DEFINE_ERROR(FoldError, "fold_error");

// Monodromy action incompatible with a degenerate fibre (e.g. transitive
// on a cycle of components).
WEYLBRAID_DEFINE_ERROR(MonodromyError, "monodromy_error");

// Operation is meaningful but outside what this library implements.
WEYLBRAID_DEFINE_ERROR(UnsupportedError, "unsupported");

// Enumeration or search exceeded a configured size/step budget.
WEYLBRAID_DEFINE_ERROR(BudgetError, "budget_exceeded");

// Node/letter index outside the diagram.
WEYLBRAID_DEFINE_ERROR(NodeIndexError, "index_error");

// Two group elements (or words) living over different diagrams were mixed.
WEYLBRAID_DEFINE_ERROR(DiagramMismatchError, "diagram_mismatch");

// A lattice class fails the constraints of the requested operation
// (wrong self-intersection, odd component present, ...).
WEYLBRAID_DEFINE_ERROR(InvalidClassError, "invalid_class");

// No embedding found inside the configured coordinate box.
WEYLBRAID_DEFINE_ERROR(EmbeddingSearchError, "embedding_not_found");

// A map fails the structural contract it was required to satisfy
// (not an isometry, does not preserve the distinguished subspace, ...).
WEYLBRAID_DEFINE_ERROR(ContractError, "contract_violation");

// Malformed user input (words, fractions, cycles, JSON payloads).
WEYLBRAID_DEFINE_ERROR(InvalidArgumentError, "invalid_argument");

#undef WEYLBRAID_DEFINE_ERROR

}  // namespace weylbraid
