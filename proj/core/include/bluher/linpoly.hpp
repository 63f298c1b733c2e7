#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bluher/field.hpp"
#include "bluher/gfp_matrix.hpp"

namespace bluher {

/// Linearized polynomial sum_i c_i X^{p^{base*i}} with coefficients in one Field.
///
/// base = k gives a q-polynomial (q = p^k); base = k*m gives a q^m-polynomial.
class LinPoly {
 public:
  LinPoly(unsigned base_power, std::vector<Elt> coeffs);

  /// The polynomial X.
  static LinPoly identity(const Field& field, unsigned base_power = 1);

  unsigned base_power() const { return base_; }
  const std::vector<Elt>& coeffs() const { return coeffs_; }
  std::uint64_t ctx_id() const;

  /// Same polynomial written in powers of p^{new_base}; new_base must divide base.
  LinPoly rebased(const Field& field, unsigned new_base) const;
  /// Drops trailing zero coefficients (keeps at least one).
  LinPoly trimmed() const;

  /// Applies an embedding to every coefficient.
  LinPoly mapped(const Embedding& emb) const;

 private:
  unsigned base_;
  std::vector<Elt> coeffs_;
};

/// Polynomial identity (not just equality as functions on one field).
bool same_polynomial(const LinPoly& a, const LinPoly& b);

Elt lp_eval(const Field& field, const LinPoly& poly, const Elt& x);

/// Symbolic composition outer(inner(X)).
LinPoly lp_compose(const Field& field, const LinPoly& outer, const LinPoly& inner);

/// Matrix over GF(p) of x -> poly(x) on the coefficient space of `field`.
GfpMatrix lp_matrix(const Field& field, const LinPoly& poly);

struct Kernel {
  std::vector<Elt> basis;
  /// Every kernel element, increasing encoding; present when |ker| <= 2^16.
  std::optional<std::vector<Elt>> elements;

  std::size_t dimension() const { return basis.size(); }
};

Kernel lp_kernel(const Field& field, const LinPoly& poly);

/// All x in `field` with poly(x) = y, increasing encoding. Empty or |ker| long.
std::vector<Elt> lp_preimage(const Field& field, const LinPoly& poly, const Elt& y);

/// All w in `field` with w^{p^k} - w + c = 0, increasing encoding.
std::vector<Elt> artin_schreier_solve(const Field& field, const Elt& c, unsigned k);

}  // namespace bluher
