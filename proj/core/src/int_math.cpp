#include "bluher/int_math.hpp"

#include <numeric>

#include "bluher/error.hpp"

namespace bluher {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::IncompatibleDegrees: return "IncompatibleDegrees";
    case Errc::NoRootFound: return "NoRootFound";
    case Errc::NonResidue: return "NonResidue";
    case Errc::OddCharOnly: return "OddCharOnly";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::AZero: return "AZero";
    case Errc::CasePd1: return "CasePd1";
    case Errc::NotPd1Case: return "NotPd1Case";
    case Errc::PreconditionFmNonzero: return "PreconditionFmNonzero";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
    case Errc::PipelineExhausted: return "PipelineExhausted";
    case Errc::UInSmallField: return "UInSmallField";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t f = 3; f <= v / f; f += 2) {
    if (v % f == 0) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp) {
  auto r = checked_pow(base, exp);
  if (!r) {
    throw Error(Errc::FieldTooLarge,
                std::to_string(base) + "^" + std::to_string(exp) + " exceeds 64 bits");
  }
  return *r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f <= v / f; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace bluher
