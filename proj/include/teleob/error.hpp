#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace teleob {

enum class ErrorKind {
  InvalidConfiguration,
  ClusteringFailure,
  IdentificationFailure,
  IllConditionedModel,
  SimulationDiverged,
  EstimatorDegenerate,
  SingularityDetected,
  ExcitationFailure,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable failure category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace teleob
