#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Small integer helpers for field orders and exponents.
namespace bluher {

bool is_prime(std::uint64_t v);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// base^exp, throwing FieldTooLarge on overflow.
std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp);

/// Distinct prime divisors, ascending, by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t v);

}  // namespace bluher
