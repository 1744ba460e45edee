#pragma once

#include <stdexcept>
#include <string>

namespace boxdot {

enum class Errc {
  DuplicatePoint,
  NonInjectiveWeights,
  Disconnected,
  TooSmall,
  IsolatedVertex,
  BadBudget,
  InvalidArc,
  TargetEqualsOrigin,
  DegenerateApex,
  OnLattice,
  GeneralPositionViolation,
  NoSuchWeight,
  TooLarge,
  GenerationExhausted,
  BadInput,
};

const char* errc_name(Errc c);

/// Library-wide exception; `code()` carries the machine-readable error kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace boxdot
