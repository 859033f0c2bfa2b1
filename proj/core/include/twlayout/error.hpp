#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twlayout {

enum class ErrorKind {
  BadParams,
  DisconnectedGraph,
  NotChordal,
  NotKTree,
  NotPEO,
  NotForest,
  NotAClique,
  NotAcyclic,
  NotSameCover,
  InconsistentOrder,
  InvalidDecomposition,
  InvalidTreePartition,
  InvalidDrawing,
  NoSuchLayout,
  ResourceLimit,
  TooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Thrown by every construction whose precondition does not hold. Verifiers
/// never throw; they return reports.
class LayoutError : public std::runtime_error {
 public:
  LayoutError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twlayout
