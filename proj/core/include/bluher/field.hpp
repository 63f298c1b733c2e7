#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bluher/error.hpp"
#include "bluher/gfp_matrix.hpp"

namespace bluher {

/// Polynomial over GF(p), ascending coefficients.
using PrimePoly = std::vector<Digit>;

class Field;

/// Element of a Field: coefficients of 1, t, ..., t^{e-1} where t = X mod f.
class Elt {
 public:
  Elt() = default;

  std::uint64_t ctx_id() const { return ctx_id_; }
  std::span<const Digit> coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const Elt&, const Elt&) = default;

 private:
  friend class Field;
  Elt(std::uint64_t id, std::vector<Digit> c) : ctx_id_(id), coeffs_(std::move(c)) {}

  std::uint64_t ctx_id_ = 0;
  std::vector<Digit> coeffs_;
};

/// Orders elements by their base-p integer encoding (c_0 least significant).
bool encoding_less(const Elt& x, const Elt& y);
void sort_by_encoding(std::vector<Elt>& v);

/// GF(p^e) = GF(p)[X]/(f). Immutable after construction.
///
/// The ctx id is a hash of (p, f); two Field objects built from the same
/// modulus are interchangeable. Arithmetic between elements of different
/// fields throws CtxMismatch.
class Field {
 public:
  /// Builds GF(p^e). Without `modulus`, the monic irreducible of degree e with
  /// the smallest base-p encoding of its lower coefficients is used.
  static Field make(std::uint64_t p, unsigned e, std::optional<PrimePoly> modulus = std::nullopt);

  Digit characteristic() const;
  unsigned degree() const;
  const PrimePoly& modulus() const;
  std::uint64_t id() const;

  /// p^e, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;
  /// p^e, throwing FieldTooLarge.
  std::uint64_t order_or_throw() const;

  Elt zero() const;
  Elt one() const;
  /// Residue class of X.
  Elt gen() const;
  /// Element of the prime subfield, v reduced mod p.
  Elt from_int(std::int64_t v) const;
  Elt from_coeffs(std::span<const Digit> c) const;

  /// Little-endian base-p encoding. Throws FieldTooLarge past 64 bits.
  std::uint64_t encode(const Elt& x) const;
  Elt decode(std::uint64_t v) const;

  Elt random(std::mt19937_64& rng) const;

  /// Visits every element in increasing encoding order.
  void for_each(const std::function<void(const Elt&)>& fn) const;

  Elt add(const Elt& x, const Elt& y) const;
  Elt sub(const Elt& x, const Elt& y) const;
  Elt neg(const Elt& x) const;
  Elt mul(const Elt& x, const Elt& y) const;
  Elt scale(const Elt& x, Digit lambda) const;
  Elt inv(const Elt& x) const;
  Elt div(const Elt& x, const Elt& y) const;
  Elt pow(const Elt& x, std::uint64_t t) const;

  /// x^{p^j}; j is taken mod e.
  Elt frobenius(const Elt& x, std::uint64_t j) const;
  /// Matrix of x -> x^{p^j} on coefficient vectors.
  const GfpMatrix& frobenius_matrix(std::uint64_t j) const;

  /// Sum of x^{p^{L i}} for i < l. Requires L*l | e.
  Elt trace_rel(const Elt& x, unsigned L, unsigned l) const;
  /// Product of x^{p^{L i}} for i < l. Requires L*l | e.
  Elt norm_rel(const Elt& x, unsigned L, unsigned l) const;

  /// x^{p^sub_e} == x. Requires sub_e | e.
  bool in_subfield(const Elt& x, unsigned sub_e) const;

  /// Square root lying in GF(p^sub_e). For odd p returns the smaller-encoded
  /// of the two roots; for p = 2 returns the unique root.
  Elt sqrt_in_subfield(const Elt& x, unsigned sub_e) const;

  /// GF(p)-basis of GF(p^sub_e) inside this field.
  std::vector<Elt> subfield_basis(unsigned sub_e) const;
  /// All elements of GF(p^sub_e) inside this field, in increasing encoding.
  std::vector<Elt> subfield_elements(unsigned sub_e) const;

  std::string format_modulus() const;

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : d_(std::move(data)) {}
  void check(const Elt& x) const;
  Elt make_elt(std::vector<Digit> c) const;

  std::shared_ptr<const Data> d_;
};

/// All elements of the GF(p)-span of `basis`. Throws FieldTooLarge past `limit`.
std::vector<Elt> span_elements(const Field& field, std::span<const Elt> basis,
                               std::uint64_t limit = std::uint64_t{1} << 24);

/// Irreducibility over GF(p): gcd(f, X^{p^i} - X) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const PrimePoly& f, Digit p);

/// Fixed embedding src -> dst (src.e | dst.e). The generator of src maps to
/// the smallest-encoded root of src.f in dst.
class Embedding {
 public:
  Embedding(const Field& src, const Field& dst);

  Elt apply(const Elt& x) const;
  /// Inverse image in src, or nullopt if y is outside the image.
  std::optional<Elt> pull_back(const Elt& y) const;

  const Elt& image_of_gen() const { return gen_image_; }
  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }

 private:
  Field src_;
  Field dst_;
  Elt gen_image_;
  GfpMatrix matrix_;  // dst.e x src.e
};

/// One-shot embedding of x.
Elt embed(const Field& src, const Field& dst, const Elt& x);

}  // namespace bluher
