#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bluher {

enum class Errc {
  NotPrime,
  NotIrreducible,
  InvalidArgument,
  DivisionByZero,
  CtxMismatch,
  DegreeMismatch,
  IncompatibleDegrees,
  NoRootFound,
  NonResidue,
  OddCharOnly,
  FieldTooLarge,
  AZero,
  CasePd1,
  NotPd1Case,
  PreconditionFmNonzero,
  InternalCheckFailed,
  PipelineExhausted,
  UInSmallField,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bluher
