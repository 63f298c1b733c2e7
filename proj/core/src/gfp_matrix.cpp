#include "bluher/gfp_matrix.hpp"

#include <utility>

#include "bluher/error.hpp"

namespace bluher {

Digit inv_mod(Digit x, Digit p) {
  if (x % p == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod p");
  // Fermat: x^(p-2).
  std::uint64_t base = x % p, result = 1, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Digit>(result);
}

GfpMatrix::GfpMatrix(Digit p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GfpMatrix GfpMatrix::identity(Digit p, std::size_t n) {
  GfpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void GfpMatrix::set_column(std::size_t c, std::span<const Digit> values) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = values[r];
}

std::vector<Digit> GfpMatrix::apply(std::span<const Digit> v) const {
  std::vector<Digit> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Digit* row = &data_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>(row[c]) * v[c];
      // Keep headroom for large p.
      if ((c & 63) == 63) acc %= p_;
    }
    out[r] = static_cast<Digit>(acc % p_);
  }
  return out;
}

GfpMatrix GfpMatrix::operator*(const GfpMatrix& rhs) const {
  GfpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc += static_cast<std::uint64_t>(at(r, k)) * rhs.at(k, c);
        if ((k & 63) == 63) acc %= p_;
      }
      out.at(r, c) = static_cast<Digit>(acc % p_);
    }
  }
  return out;
}

GfpMatrix::Echelon GfpMatrix::reduce(GfpMatrix& w, std::vector<Digit> rhs) const {
  Echelon ech;
  const bool carry = !rhs.empty();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && w.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(w.at(pivot, c), w.at(row, c));
      if (carry) std::swap(rhs[pivot], rhs[row]);
    }
    const std::uint64_t inv = inv_mod(w.at(row, col), p_);
    for (std::size_t c = 0; c < cols_; ++c) w.at(row, c) = static_cast<Digit>(w.at(row, c) * inv % p_);
    if (carry) rhs[row] = static_cast<Digit>(rhs[row] * inv % p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || w.at(r, col) == 0) continue;
      const std::uint64_t factor = p_ - w.at(r, col);
      for (std::size_t c = 0; c < cols_; ++c) {
        w.at(r, c) = static_cast<Digit>((w.at(r, c) + factor * w.at(row, c)) % p_);
      }
      if (carry) rhs[r] = static_cast<Digit>((rhs[r] + factor * rhs[row]) % p_);
    }
    ech.pivot_cols.push_back(col);
    ++row;
  }
  ech.rhs = std::move(rhs);
  return ech;
}

std::size_t GfpMatrix::rank() const {
  GfpMatrix w = *this;
  return reduce(w, {}).pivot_cols.size();
}

std::vector<std::vector<Digit>> GfpMatrix::kernel_basis() const {
  GfpMatrix w = *this;
  const auto ech = reduce(w, {});
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Digit>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Digit> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v[ech.pivot_cols[r]] = static_cast<Digit>((p_ - w.at(r, free)) % p_);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Digit>> GfpMatrix::solve(std::span<const Digit> rhs) const {
  GfpMatrix w = *this;
  std::vector<Digit> b(rhs.begin(), rhs.end());
  if (b.empty()) return std::vector<Digit>(cols_, 0);
  const auto ech = reduce(w, std::move(b));
  const std::size_t rank = ech.pivot_cols.size();
  for (std::size_t r = rank; r < rows_; ++r) {
    if (ech.rhs[r] != 0) return std::nullopt;
  }
  std::vector<Digit> x(cols_, 0);
  for (std::size_t r = 0; r < rank; ++r) x[ech.pivot_cols[r]] = ech.rhs[r];
  return x;
}

}  // namespace bluher
