#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bluher {

using Digit = std::uint32_t;

/// Dense matrix over the prime field GF(p), row-major.
class GfpMatrix {
 public:
  GfpMatrix(Digit p, std::size_t rows, std::size_t cols);

  static GfpMatrix identity(Digit p, std::size_t n);

  Digit modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Digit& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Digit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void set_column(std::size_t c, std::span<const Digit> values);

  std::vector<Digit> apply(std::span<const Digit> v) const;
  GfpMatrix operator*(const GfpMatrix& rhs) const;

  std::size_t rank() const;

  /// Basis of {v : M v = 0}, one vector per free column of the echelon form.
  std::vector<std::vector<Digit>> kernel_basis() const;

  /// Some v with M v = rhs, or nullopt when rhs is outside the column space.
  std::optional<std::vector<Digit>> solve(std::span<const Digit> rhs) const;

  friend bool operator==(const GfpMatrix&, const GfpMatrix&) = default;

 private:
  struct Echelon {
    std::vector<std::size_t> pivot_cols;
    std::vector<Digit> rhs;
  };
  // Reduces a copy to RREF; rhs (if nonempty) is carried along.
  Echelon reduce(GfpMatrix& work, std::vector<Digit> rhs) const;

  Digit p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Digit> data_;
};

Digit inv_mod(Digit x, Digit p);

}  // namespace bluher
