#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bluher/field.hpp"
#include "bluher/linpoly.hpp"

namespace bluher {

/// One equation X^{q+1} + X + a = 0 over GF(Q), q = p^k, Q = p^n.
struct Instance {
  unsigned p = 0;
  unsigned n = 0;
  unsigned k = 0;
  unsigned d = 0;        // gcd(n, k)
  unsigned m = 0;        // n / d
  std::uint64_t q = 0;   // p^k
  std::uint64_t Q = 0;   // p^n
  std::uint64_t N = 0;   // m (p^d - 1)
  std::uint64_t s = 0;   // (q^m - 1)(p^d - 1) / ((Q - 1)(q - 1))
  Field field;           // GF(Q)
  Elt a;
};

/// Throws AZero for a = 0, DegreeMismatch if `field` is not GF(p^n).
Instance make_instance(unsigned k, const Field& field, const Elt& a);
Instance make_instance(unsigned p, unsigned n, unsigned k, std::uint64_t a_encoding,
                       std::optional<PrimePoly> modulus = std::nullopt);

/// Extension degree k*N of the field hosting GF(q^N), GF(Q) and GF(q).
unsigned ambient_degree(const Instance& inst);
Field ambient_field(const Instance& inst);

/// A_1..A_{r_max} at a, via A_{r+2} = -A_{r+1}^q - a^q A_r^{q^2}.
/// Index 0 is unused (zero).
std::vector<Elt> a_values(const Field& field, unsigned k, const Elt& a, unsigned r_max);
/// Same values via A_{r+2} = -A_{r+1} - a^{q^r} A_r.
std::vector<Elt> a_values_alt(const Field& field, unsigned k, const Elt& a, unsigned r_max);

Elt eval_A(const Instance& inst, unsigned r);
/// B_1 = 0, B_{r+1} = -a A_r^q.
Elt eval_B(const Instance& inst, unsigned r);
/// F(a) = A_m(a).
Elt eval_F(const Instance& inst);
/// G(a) = -A_{m+1}(a) - a A_{m-1}(a)^q.
Elt eval_G(const Instance& inst);

/// {(u - u^q)^{q^2+1} / (u - u^{q^2})^{q+1} : u in field, u^{q^2} != u}.
/// `field` must be GF(q^r); used as a test oracle only.
std::vector<Elt> zero_set_A(const Field& field, unsigned k, unsigned r);

/// L_a = X^{q^2} + X^q + aX over GF(Q).
LinPoly build_La(const Instance& inst);
/// F_1 = X^{q^m} - B_m(a) X. Requires A_m(a) = 0.
LinPoly build_F1(const Instance& inst);
/// G_1 = sum_{i=0}^{m-2} A_{m-1-i}(a)^{q^{i+1}} X^{q^i}. Requires A_m(a) = 0.
LinPoly build_G1(const Instance& inst);
/// G_2 = sum_{i=0}^{p^d-2} B_m(a)^{p^d-2-i} X^{q^{mi}}. Requires A_m(a) = 0.
LinPoly build_G2(const Instance& inst);

}  // namespace bluher
