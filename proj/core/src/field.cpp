#include "bluher/field.hpp"

#include <algorithm>
#include <sstream>

#include "bluher/int_math.hpp"

namespace bluher {

namespace {

constexpr unsigned kMaxDegree = 256;
constexpr std::uint64_t kMaxCharacteristic = 1u << 16;

// ---- polynomials over GF(p) -------------------------------------------------

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic-or-not (leading coefficient is inverted).
PrimePoly poly_mod(PrimePoly a, const PrimePoly& f, Digit p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<Digit>((a[shift + i] + (p - factor) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, Digit p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  PrimePoly out(acc.begin(), acc.end());
  return poly_mod(std::move(out), f, p);
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t exp, const PrimePoly& f, Digit p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return poly_mod(std::move(result), f, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, Digit p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t hash_modulus(Digit p, const PrimePoly& f) {
  // FNV-1a.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(p);
  mix(f.size());
  for (Digit c : f) mix(c);
  return h == 0 ? 1 : h;
}

}  // namespace

bool is_irreducible(const PrimePoly& poly, Digit p) {
  PrimePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  PrimePoly h{0, 1};  // X
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    PrimePoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<Digit>((diff[1] + p - 1) % p);
    trim(diff);
    if (diff.empty()) return false;  // X^{p^i} == X mod f
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

// ---- Elt ----------------------------------------------------------------------

bool Elt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Digit c) { return c == 0; });
}

bool encoding_less(const Elt& x, const Elt& y) {
  auto a = x.coeffs();
  auto b = y.coeffs();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

void sort_by_encoding(std::vector<Elt>& v) { std::sort(v.begin(), v.end(), encoding_less); }

// ---- Field --------------------------------------------------------------------

struct Field::Data {
  Digit p = 0;
  unsigned e = 0;
  PrimePoly f;
  std::uint64_t id = 0;
  // X^{e+j} mod f for j in [0, e-1).
  std::vector<std::vector<Digit>> reduction;
  // frob[j]: x -> x^{p^j}.
  std::vector<GfpMatrix> frob;

  std::vector<Digit> mul(std::span<const Digit> x, std::span<const Digit> y) const {
    std::vector<std::uint64_t> acc(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < e; ++j) acc[i + j] += std::uint64_t{x[i]} * y[j];
      if ((i & 31) == 31) {
        for (auto& a : acc) a %= p;
      }
    }
    for (auto& a : acc) a %= p;
    for (unsigned j = 0; j + 1 < e; ++j) {
      const std::uint64_t hi = acc[e + j];
      if (hi == 0) continue;
      const auto& red = reduction[j];
      for (unsigned i = 0; i < e; ++i) acc[i] += hi * red[i];
      if ((j & 31) == 31) {
        for (unsigned i = 0; i < e; ++i) acc[i] %= p;
      }
    }
    std::vector<Digit> out(e);
    for (unsigned i = 0; i < e; ++i) out[i] = static_cast<Digit>(acc[i] % p);
    return out;
  }
};

Field Field::make(std::uint64_t p, unsigned e, std::optional<PrimePoly> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw Error(Errc::FieldTooLarge, "characteristic must be below 2^16");
  if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  if (e > kMaxDegree) throw Error(Errc::FieldTooLarge, "extension degree above " + std::to_string(kMaxDegree));
  const auto pd = static_cast<Digit>(p);

  PrimePoly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != e + 1 || f.back() != 1) {
      throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(e));
    }
    for (Digit c : f) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(f, pd)) throw Error(Errc::NotIrreducible, "given modulus is reducible");
  } else {
    // Odometer over the lower coefficients, c_0 least significant.
    f.assign(e + 1, 0);
    f[e] = 1;
    while (!is_irreducible(f, pd)) {
      unsigned i = 0;
      while (i < e && ++f[i] == pd) f[i++] = 0;
      if (i == e) throw Error(Errc::NoRootFound, "no irreducible polynomial found");
    }
  }

  auto d = std::make_shared<Data>();
  d->p = pd;
  d->e = e;
  d->f = f;
  d->id = hash_modulus(pd, f);

  // X^e = -(f_0 + ... + f_{e-1} X^{e-1}); later powers by shifting.
  std::vector<Digit> cur(e);
  for (unsigned i = 0; i < e; ++i) cur[i] = static_cast<Digit>((pd - f[i]) % pd);
  for (unsigned j = 0; j + 1 < e; ++j) {
    d->reduction.push_back(cur);
    const Digit top = cur[e - 1];
    std::vector<Digit> next(e, 0);
    for (unsigned i = e - 1; i > 0; --i) next[i] = cur[i - 1];
    for (unsigned i = 0; i < e; ++i) {
      next[i] = static_cast<Digit>((next[i] + std::uint64_t{top} * ((pd - f[i]) % pd)) % pd);
    }
    cur = std::move(next);
  }

  // Column i of the p-Frobenius matrix is t^{ip} = (t^p)^i.
  GfpMatrix frob1(pd, e, e);
  {
    std::vector<Digit> t(e, 0);
    if (e > 1) {
      t[1] = 1;
    } else {
      t[0] = static_cast<Digit>((pd - f[0]) % pd);
    }
    std::vector<Digit> tp(e, 0);
    tp[0] = 1;
    for (std::uint64_t i = 0; i < p; ++i) tp = d->mul(tp, t);
    std::vector<Digit> col(e, 0);
    col[0] = 1;
    for (unsigned i = 0; i < e; ++i) {
      frob1.set_column(i, col);
      col = d->mul(col, tp);
    }
  }
  d->frob.push_back(GfpMatrix::identity(pd, e));
  for (unsigned j = 1; j < e; ++j) d->frob.push_back(frob1 * d->frob.back());

  return Field(std::move(d));
}

Digit Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->e; }
const PrimePoly& Field::modulus() const { return d_->f; }
std::uint64_t Field::id() const { return d_->id; }

std::optional<std::uint64_t> Field::order() const { return checked_pow(d_->p, d_->e); }

std::uint64_t Field::order_or_throw() const { return pow_or_throw(d_->p, d_->e); }

void Field::check(const Elt& x) const {
  if (x.ctx_id() != d_->id) throw Error(Errc::CtxMismatch, "element belongs to a different field");
}

Elt Field::make_elt(std::vector<Digit> c) const { return Elt(d_->id, std::move(c)); }

Elt Field::zero() const { return make_elt(std::vector<Digit>(d_->e, 0)); }

Elt Field::one() const { return from_int(1); }

Elt Field::gen() const {
  std::vector<Digit> c(d_->e, 0);
  if (d_->e > 1) {
    c[1] = 1;
  } else {
    c[0] = static_cast<Digit>((d_->p - d_->f[0]) % d_->p);
  }
  return make_elt(std::move(c));
}

Elt Field::from_int(std::int64_t v) const {
  std::vector<Digit> c(d_->e, 0);
  const auto p = static_cast<std::int64_t>(d_->p);
  c[0] = static_cast<Digit>(((v % p) + p) % p);
  return make_elt(std::move(c));
}

Elt Field::from_coeffs(std::span<const Digit> c) const {
  if (c.size() > d_->e) throw Error(Errc::InvalidArgument, "too many coefficients");
  std::vector<Digit> out(d_->e, 0);
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] % d_->p;
  return make_elt(std::move(out));
}

std::uint64_t Field::encode(const Elt& x) const {
  check(x);
  order_or_throw();
  std::uint64_t v = 0;
  for (unsigned i = d_->e; i-- > 0;) v = v * d_->p + x.coeffs()[i];
  return v;
}

Elt Field::decode(std::uint64_t v) const {
  const auto ord = order();
  if (ord && v >= *ord) throw Error(Errc::InvalidArgument, "encoding out of range for field");
  std::vector<Digit> c(d_->e, 0);
  for (unsigned i = 0; i < d_->e; ++i) {
    c[i] = static_cast<Digit>(v % d_->p);
    v /= d_->p;
  }
  return make_elt(std::move(c));
}

Elt Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Digit> dist(0, d_->p - 1);
  std::vector<Digit> c(d_->e);
  for (auto& v : c) v = dist(rng);
  return make_elt(std::move(c));
}

void Field::for_each(const std::function<void(const Elt&)>& fn) const {
  order_or_throw();
  Elt x = zero();
  while (true) {
    fn(x);
    unsigned i = 0;
    while (i < d_->e && ++x.coeffs_[i] == d_->p) x.coeffs_[i++] = 0;
    if (i == d_->e) return;
  }
}

Elt Field::add(const Elt& x, const Elt& y) const {
  check(x);
  check(y);
  std::vector<Digit> c(d_->e);
  for (unsigned i = 0; i < d_->e; ++i) {
    const Digit s = x.coeffs()[i] + y.coeffs()[i];
    c[i] = s >= d_->p ? s - d_->p : s;
  }
  return make_elt(std::move(c));
}

Elt Field::sub(const Elt& x, const Elt& y) const {
  check(x);
  check(y);
  std::vector<Digit> c(d_->e);
  for (unsigned i = 0; i < d_->e; ++i) {
    const Digit a = x.coeffs()[i], b = y.coeffs()[i];
    c[i] = a >= b ? a - b : a + d_->p - b;
  }
  return make_elt(std::move(c));
}

Elt Field::neg(const Elt& x) const { return sub(zero(), x); }

Elt Field::mul(const Elt& x, const Elt& y) const {
  check(x);
  check(y);
  return make_elt(d_->mul(x.coeffs(), y.coeffs()));
}

Elt Field::scale(const Elt& x, Digit lambda) const {
  check(x);
  std::vector<Digit> c(d_->e);
  for (unsigned i = 0; i < d_->e; ++i) {
    c[i] = static_cast<Digit>(std::uint64_t{x.coeffs()[i]} * (lambda % d_->p) % d_->p);
  }
  return make_elt(std::move(c));
}

Elt Field::inv(const Elt& x) const {
  check(x);
  if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  // x^{-1} = Norm(x)^{-1} * prod_{i>=1} x^{p^i}, with Norm(x) in GF(p)*.
  Elt others = one();
  for (unsigned i = 1; i < d_->e; ++i) others = mul(others, frobenius(x, i));
  const Elt norm = mul(others, x);
  return scale(others, inv_mod(norm.coeffs()[0], d_->p));
}

Elt Field::div(const Elt& x, const Elt& y) const { return mul(x, inv(y)); }

Elt Field::pow(const Elt& x, std::uint64_t t) const {
  check(x);
  Elt result = one();
  Elt base = x;
  while (t > 0) {
    if (t & 1) result = mul(result, base);
    t >>= 1;
    if (t > 0) base = mul(base, base);
  }
  return result;
}

const GfpMatrix& Field::frobenius_matrix(std::uint64_t j) const { return d_->frob[j % d_->e]; }

Elt Field::frobenius(const Elt& x, std::uint64_t j) const {
  check(x);
  const std::uint64_t r = j % d_->e;
  if (r == 0) return x;
  return make_elt(d_->frob[r].apply(x.coeffs()));
}

namespace {
void require_divides(unsigned L, unsigned l, unsigned e) {
  if (L == 0 || l == 0 || e % (L * l) != 0) {
    throw Error(Errc::DegreeMismatch, std::to_string(L) + "*" + std::to_string(l) +
                                          " does not divide extension degree " + std::to_string(e));
  }
}
}  // namespace

Elt Field::trace_rel(const Elt& x, unsigned L, unsigned l) const {
  require_divides(L, l, d_->e);
  Elt acc = zero();
  for (unsigned i = 0; i < l; ++i) acc = add(acc, frobenius(x, std::uint64_t{L} * i));
  return acc;
}

Elt Field::norm_rel(const Elt& x, unsigned L, unsigned l) const {
  require_divides(L, l, d_->e);
  Elt acc = one();
  for (unsigned i = 0; i < l; ++i) acc = mul(acc, frobenius(x, std::uint64_t{L} * i));
  return acc;
}

bool Field::in_subfield(const Elt& x, unsigned sub_e) const {
  require_divides(sub_e, 1, d_->e);
  return frobenius(x, sub_e) == x;
}

Elt Field::sqrt_in_subfield(const Elt& x, unsigned sub_e) const {
  require_divides(sub_e, 1, d_->e);
  check(x);
  if (!in_subfield(x, sub_e)) throw Error(Errc::InvalidArgument, "element is not in the requested subfield");
  if (d_->p == 2) return frobenius(x, d_->e - 1);
  if (x.is_zero()) return x;

  const std::uint64_t sub_order = pow_or_throw(d_->p, sub_e);
  const Elt legendre = pow(x, (sub_order - 1) / 2);
  if (legendre != one()) throw Error(Errc::NonResidue, "element is not a square in the subfield");

  // Tonelli-Shanks in the full field; both roots already lie in the subfield.
  const std::uint64_t group = order_or_throw() - 1;
  std::uint64_t odd = group;
  unsigned two_adic = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++two_adic;
  }
  const Elt minus_one = from_int(-1);
  Elt z;
  for (std::uint64_t v = 2;; ++v) {
    z = decode(v);
    if (pow(z, group / 2) == minus_one) break;
  }
  Elt c = pow(z, odd);
  Elt t = pow(x, odd);
  Elt r = pow(x, (odd + 1) / 2);
  unsigned m = two_adic;
  while (t != one()) {
    unsigned i = 0;
    Elt t2 = t;
    while (t2 != one()) {
      t2 = mul(t2, t2);
      ++i;
    }
    Elt b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  if (mul(r, r) != x || !in_subfield(r, sub_e)) {
    throw Error(Errc::InternalCheckFailed, "square root failed verification");
  }
  const Elt other = neg(r);
  return encoding_less(other, r) ? other : r;
}

std::vector<Elt> Field::subfield_basis(unsigned sub_e) const {
  require_divides(sub_e, 1, d_->e);
  GfpMatrix m = frobenius_matrix(sub_e);
  for (unsigned i = 0; i < d_->e; ++i) m.at(i, i) = (m.at(i, i) + d_->p - 1) % d_->p;
  std::vector<Elt> basis;
  for (auto& v : m.kernel_basis()) basis.push_back(make_elt(std::move(v)));
  return basis;
}

std::vector<Elt> Field::subfield_elements(unsigned sub_e) const {
  const auto basis = subfield_basis(sub_e);
  auto out = span_elements(*this, basis);
  sort_by_encoding(out);
  return out;
}

std::string Field::format_modulus() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = d_->e + 1; i-- > 0;) {
    const Digit c = d_->f[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0 && c != 1) os << "*";
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<Elt> span_elements(const Field& field, std::span<const Elt> basis, std::uint64_t limit) {
  const auto count = checked_pow(field.characteristic(), basis.size());
  if (!count || *count > limit) throw Error(Errc::FieldTooLarge, "span too large to enumerate");
  std::vector<Elt> out;
  out.reserve(*count);
  std::vector<Digit> lambda(basis.size(), 0);
  Elt cur = field.zero();
  const Digit p = field.characteristic();
  while (true) {
    out.push_back(cur);
    // Odometer: bump lambda[i]; each wrap subtracts (p-1)*b_i, i.e. adds b_i.
    std::size_t i = 0;
    while (i < basis.size()) {
      cur = field.add(cur, basis[i]);
      if (++lambda[i] < p) break;
      lambda[i] = 0;
      ++i;
    }
    if (i == basis.size()) break;
  }
  return out;
}

// ---- Embedding ----------------------------------------------------------------

Embedding::Embedding(const Field& src, const Field& dst)
    : src_(src), dst_(dst), matrix_(dst.characteristic(), dst.degree(), src.degree()) {
  if (src.characteristic() != dst.characteristic() || dst.degree() % src.degree() != 0) {
    throw Error(Errc::IncompatibleDegrees, "GF(" + std::to_string(src.characteristic()) + "^" +
                                               std::to_string(src.degree()) + ") does not embed in GF(" +
                                               std::to_string(dst.characteristic()) + "^" +
                                               std::to_string(dst.degree()) + ")");
  }
  // Roots of src.f all lie in the copy of GF(p^{src.e}) inside dst.
  const auto candidates = dst.subfield_elements(src.degree());
  const auto& f = src.modulus();
  for (const Elt& r : candidates) {
    Elt acc = dst.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = dst.add(dst.mul(acc, r), dst.from_int(f[i]));
    if (acc.is_zero()) {
      gen_image_ = r;
      break;
    }
  }
  if (gen_image_.ctx_id() == 0) throw Error(Errc::NoRootFound, "defining polynomial has no root in target");
  Elt power = dst.one();
  for (unsigned i = 0; i < src.degree(); ++i) {
    matrix_.set_column(i, power.coeffs());
    power = dst.mul(power, gen_image_);
  }
}

Elt Embedding::apply(const Elt& x) const {
  if (x.ctx_id() != src_.id()) throw Error(Errc::CtxMismatch, "element is not in the embedding source");
  return dst_.from_coeffs(matrix_.apply(x.coeffs()));
}

std::optional<Elt> Embedding::pull_back(const Elt& y) const {
  if (y.ctx_id() != dst_.id()) throw Error(Errc::CtxMismatch, "element is not in the embedding target");
  auto sol = matrix_.solve(y.coeffs());
  if (!sol) return std::nullopt;
  return src_.from_coeffs(*sol);
}

Elt embed(const Field& src, const Field& dst, const Elt& x) { return Embedding(src, dst).apply(x); }

}  // namespace bluher
