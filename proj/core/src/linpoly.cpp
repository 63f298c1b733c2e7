#include "bluher/linpoly.hpp"

#include <numeric>

#include "bluher/error.hpp"
#include "bluher/int_math.hpp"

namespace bluher {

namespace {

constexpr std::uint64_t kEnumerateKernelLimit = std::uint64_t{1} << 16;

void require_ctx(std::uint64_t have, std::uint64_t want) {
  if (have != want) throw Error(Errc::CtxMismatch, "linearized polynomial coefficients live in another field");
}

// Coefficient of X^{p^exponent}, or nullptr when that slot is absent.
const Elt* coeff_at(const LinPoly& poly, std::uint64_t exponent) {
  if (exponent % poly.base_power() != 0) return nullptr;
  const std::uint64_t idx = exponent / poly.base_power();
  if (idx >= poly.coeffs().size()) return nullptr;
  return &poly.coeffs()[idx];
}

}  // namespace

LinPoly::LinPoly(unsigned base_power, std::vector<Elt> coeffs) : base_(base_power), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "linearized polynomial needs at least one coefficient");
  if (base_ == 0) throw Error(Errc::InvalidArgument, "base power must be positive");
  for (const auto& c : coeffs_) require_ctx(c.ctx_id(), coeffs_.front().ctx_id());
}

LinPoly LinPoly::identity(const Field& field, unsigned base_power) { return LinPoly(base_power, {field.one()}); }

std::uint64_t LinPoly::ctx_id() const { return coeffs_.front().ctx_id(); }

LinPoly LinPoly::rebased(const Field& field, unsigned new_base) const {
  require_ctx(ctx_id(), field.id());
  if (new_base == 0 || base_ % new_base != 0) {
    throw Error(Errc::InvalidArgument, "new base power must divide the current one");
  }
  const unsigned stride = base_ / new_base;
  if (stride == 1) return *this;
  std::vector<Elt> out((coeffs_.size() - 1) * stride + 1, field.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * stride] = coeffs_[i];
  return LinPoly(new_base, std::move(out));
}

LinPoly LinPoly::trimmed() const {
  std::size_t len = coeffs_.size();
  while (len > 1 && coeffs_[len - 1].is_zero()) --len;
  return LinPoly(base_, std::vector<Elt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
}

LinPoly LinPoly::mapped(const Embedding& emb) const {
  std::vector<Elt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(emb.apply(c));
  return LinPoly(base_, std::move(out));
}

bool same_polynomial(const LinPoly& a, const LinPoly& b) {
  if (a.ctx_id() != b.ctx_id()) return false;
  const std::uint64_t g = std::gcd(a.base_power(), b.base_power());
  const std::uint64_t top = std::max(std::uint64_t{a.base_power()} * (a.coeffs().size() - 1),
                                     std::uint64_t{b.base_power()} * (b.coeffs().size() - 1));
  for (std::uint64_t exp = 0; exp <= top; exp += g) {
    const Elt* ca = coeff_at(a, exp);
    const Elt* cb = coeff_at(b, exp);
    const bool za = ca == nullptr || ca->is_zero();
    const bool zb = cb == nullptr || cb->is_zero();
    if (za != zb) return false;
    if (!za && *ca != *cb) return false;
  }
  return true;
}

Elt lp_eval(const Field& field, const LinPoly& poly, const Elt& x) {
  require_ctx(poly.ctx_id(), field.id());
  require_ctx(x.ctx_id(), field.id());
  Elt acc = field.zero();
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    const Elt& c = poly.coeffs()[i];
    if (c.is_zero()) continue;
    acc = field.add(acc, field.mul(c, field.frobenius(x, std::uint64_t{poly.base_power()} * i)));
  }
  return acc;
}

LinPoly lp_compose(const Field& field, const LinPoly& outer, const LinPoly& inner) {
  const unsigned g = std::gcd(outer.base_power(), inner.base_power());
  const LinPoly a = outer.rebased(field, g);
  const LinPoly b = inner.rebased(field, g);
  require_ctx(b.ctx_id(), field.id());
  // (sum_i a_i X^{p^{gi}}) o (sum_j b_j X^{p^{gj}}) = sum_{i,j} a_i b_j^{p^{gi}} X^{p^{g(i+j)}}.
  std::vector<Elt> out(a.coeffs().size() + b.coeffs().size() - 1, field.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      const Elt twisted = field.frobenius(b.coeffs()[j], std::uint64_t{g} * i);
      out[i + j] = field.add(out[i + j], field.mul(a.coeffs()[i], twisted));
    }
  }
  return LinPoly(g, std::move(out)).trimmed();
}

GfpMatrix lp_matrix(const Field& field, const LinPoly& poly) {
  const unsigned e = field.degree();
  GfpMatrix m(field.characteristic(), e, e);
  std::vector<Digit> unit(e, 0);
  for (unsigned j = 0; j < e; ++j) {
    unit.assign(e, 0);
    unit[j] = 1;
    m.set_column(j, lp_eval(field, poly, field.from_coeffs(unit)).coeffs());
  }
  return m;
}

Kernel lp_kernel(const Field& field, const LinPoly& poly) {
  Kernel ker;
  for (auto& v : lp_matrix(field, poly).kernel_basis()) ker.basis.push_back(field.from_coeffs(v));
  const auto size = checked_pow(field.characteristic(), ker.basis.size());
  if (size && *size <= kEnumerateKernelLimit) {
    auto all = span_elements(field, ker.basis);
    sort_by_encoding(all);
    ker.elements = std::move(all);
  }
  return ker;
}

std::vector<Elt> lp_preimage(const Field& field, const LinPoly& poly, const Elt& y) {
  require_ctx(y.ctx_id(), field.id());
  const GfpMatrix m = lp_matrix(field, poly);
  const auto particular = m.solve(y.coeffs());
  if (!particular) return {};
  const Elt x0 = field.from_coeffs(*particular);
  std::vector<Elt> basis;
  for (auto& v : m.kernel_basis()) basis.push_back(field.from_coeffs(v));
  std::vector<Elt> out;
  for (const Elt& z : span_elements(field, basis)) out.push_back(field.add(x0, z));
  sort_by_encoding(out);
  return out;
}

std::vector<Elt> artin_schreier_solve(const Field& field, const Elt& c, unsigned k) {
  const LinPoly frob_minus_id(k, {field.from_int(-1), field.one()});
  return lp_preimage(field, frob_minus_id, field.neg(c));
}

}  // namespace bluher
