#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lattice_waves {

enum class ErrorCode {
  ModulusOutOfRange,
  ShapeMismatch,
  ContainsIdentity,
  NotSymmetric,
  DoesNotGenerate,
  DuplicateGenerator,
  InfiniteSubgroup,
  GroupMismatch,
  NotSolvable,
  TorsionUnsupported,
  SInsideH,
  CosetInconstant,
  IndexOutOfRange,
  InvalidVertex,
  InvalidInput,
};

// Stable machine-readable name, e.g. "NOT_SOLVABLE".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Raised by the wave solvers when the initial velocity violates the
// zero-mean compatibility condition. `sum` is the offending value as an exact
// rational string; `where` names the evaluation vertex for the tree solver
// (empty for the abelian solvers).
class NotSolvableError : public Error {
public:
  NotSolvableError(std::string sum, std::string where = {})
      : Error(ErrorCode::NotSolvable, make_message(sum, where)),
        sum_(std::move(sum)), where_(std::move(where)) {}

  const std::string& sum() const noexcept { return sum_; }
  const std::string& where() const noexcept { return where_; }

private:
  static std::string make_message(const std::string& sum, const std::string& where) {
    std::string msg = "initial velocity has nonzero trivial-character sum " + sum;
    if (!where.empty()) msg += " at vertex " + where;
    return msg;
  }

  std::string sum_;
  std::string where_;
};

} // namespace lattice_waves
