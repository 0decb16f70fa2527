#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mstar {

enum class ErrorKind {
  missing_identity,
  non_associative,
  dangling_composite,
  invalid_star,
  invalid_marking,
  not_a_groupoid,
  invalid_functor,
  bound_exceeded,
  ill_typed_assignment,
  parse_error,
  incompatible_structures,
  not_cofinal,
  not_marked_generated,
  invalid_group,
  invalid_action,
  inconsistent_linear,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure carries the tuple that witnesses it, so reports can be
/// reproduced from the inputs alone.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, nlohmann::json witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::missing_identity: return "MissingIdentity";
    case ErrorKind::non_associative: return "NonAssociative";
    case ErrorKind::dangling_composite: return "DanglingComposite";
    case ErrorKind::invalid_star: return "InvalidStar";
    case ErrorKind::invalid_marking: return "InvalidMarking";
    case ErrorKind::not_a_groupoid: return "NotAGroupoid";
    case ErrorKind::invalid_functor: return "InvalidFunctor";
    case ErrorKind::bound_exceeded: return "BoundExceeded";
    case ErrorKind::ill_typed_assignment: return "IllTypedAssignment";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::incompatible_structures: return "IncompatibleStructures";
    case ErrorKind::not_cofinal: return "NotCofinal";
    case ErrorKind::not_marked_generated: return "NotMarkedGenerated";
    case ErrorKind::invalid_group: return "InvalidGroup";
    case ErrorKind::invalid_action: return "InvalidAction";
    case ErrorKind::inconsistent_linear: return "InconsistentLinear";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mstar
