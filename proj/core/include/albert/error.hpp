#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace albert {

// Failure kinds raised by the library. Every precondition or verification
// failure maps to exactly one code so that callers (and the CLI) can react
// without parsing messages.
enum class Errc {
  DivisionByZero,
  MixedParents,
  NotIrreducible,
  InvalidAutomorphism,
  NotGalois,
  NormNotOne,
  ExhaustedCandidates,
  NotSubalgebra,
  NotInCenter,
  NotInvertible,
  NotSymmetric,
  WrongBackend,
  WrongConstruction,
  InvariantViolation,
  NormMismatch,
  NotSpecialUnitary,
  NotSimilarity,
  NotIsomorphism,
  NotAutomorphism,
  NotInvertibleGenerator,
  CyclicElement,
  NotCubicSubfield,
  RetriesExhausted,
  NoDecomposition,
  NotStabilizing,
  RecoveryFailed,
  SingularImageOfOne,
  DimensionMismatch,
  ParseError,
  UnknownSuite,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace albert
