#include "bluher/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "bluher/error.hpp"
#include "bluher/int_math.hpp"

namespace bluher {

namespace {

constexpr std::uint64_t kZeroSetLimit = std::uint64_t{1} << 20;

using u128 = unsigned __int128;

u128 pow128(std::uint64_t base, std::uint64_t exp) {
  u128 r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > (~u128{0}) / base) throw Error(Errc::FieldTooLarge, "exponent arithmetic overflow");
    r *= base;
  }
  return r;
}

void require_pd1(const Instance& inst) {
  if (!eval_F(inst).is_zero()) {
    throw Error(Errc::PreconditionFmNonzero, "A_m(a) != 0; the p^d+1 builders do not apply");
  }
}

}  // namespace

Instance make_instance(unsigned k, const Field& field, const Elt& a) {
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  if (a.ctx_id() != field.id()) throw Error(Errc::CtxMismatch, "a is not an element of the given field");
  if (a.is_zero()) throw Error(Errc::AZero, "a must be nonzero");
  const unsigned p = field.characteristic();
  const unsigned n = field.degree();
  const unsigned d = std::gcd(n, k);
  const unsigned m = n / d;
  const std::uint64_t q = pow_or_throw(p, k);
  const std::uint64_t Q = field.order_or_throw();
  const std::uint64_t pd = pow_or_throw(p, d);

  const u128 num = (pow128(p, std::uint64_t{k} * m) - 1) * (pd - 1);
  const u128 den = u128{Q - 1} * (q - 1);
  if (num % den != 0) throw Error(Errc::InternalCheckFailed, "s is not an integer");
  const u128 s = num / den;
  if (s > UINT64_MAX) throw Error(Errc::FieldTooLarge, "s exceeds 64 bits");

  return Instance{.p = p,
                  .n = n,
                  .k = k,
                  .d = d,
                  .m = m,
                  .q = q,
                  .Q = Q,
                  .N = std::uint64_t{m} * (pd - 1),
                  .s = static_cast<std::uint64_t>(s),
                  .field = field,
                  .a = a};
}

Instance make_instance(unsigned p, unsigned n, unsigned k, std::uint64_t a_encoding,
                       std::optional<PrimePoly> modulus) {
  const Field field = Field::make(p, n, std::move(modulus));
  return make_instance(k, field, field.decode(a_encoding));
}

unsigned ambient_degree(const Instance& inst) {
  const std::uint64_t e = std::uint64_t{inst.k} * inst.N;
  if (e > 256) throw Error(Errc::FieldTooLarge, "ambient field GF(p^" + std::to_string(e) + ") is too large");
  return static_cast<unsigned>(e);
}

Field ambient_field(const Instance& inst) { return Field::make(inst.p, ambient_degree(inst)); }

std::vector<Elt> a_values(const Field& field, unsigned k, const Elt& a, unsigned r_max) {
  std::vector<Elt> A(std::max(r_max, 2u) + 1, field.zero());
  A[1] = field.one();
  A[2] = field.from_int(-1);
  const Elt aq = field.frobenius(a, k);
  for (unsigned r = 1; r + 2 <= r_max; ++r) {
    const Elt t1 = field.frobenius(A[r + 1], k);
    const Elt t2 = field.mul(aq, field.frobenius(A[r], 2ull * k));
    A[r + 2] = field.neg(field.add(t1, t2));
  }
  A.resize(r_max + 1);
  return A;
}

std::vector<Elt> a_values_alt(const Field& field, unsigned k, const Elt& a, unsigned r_max) {
  std::vector<Elt> A(std::max(r_max, 2u) + 1, field.zero());
  A[1] = field.one();
  A[2] = field.from_int(-1);
  for (unsigned r = 1; r + 2 <= r_max; ++r) {
    const Elt a_qr = field.frobenius(a, std::uint64_t{k} * r);
    A[r + 2] = field.neg(field.add(A[r + 1], field.mul(a_qr, A[r])));
  }
  A.resize(r_max + 1);
  return A;
}

Elt eval_A(const Instance& inst, unsigned r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "A_r is defined for r >= 1");
  return a_values(inst.field, inst.k, inst.a, r)[r];
}

Elt eval_B(const Instance& inst, unsigned r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "B_r is defined for r >= 1");
  if (r == 1) return inst.field.zero();
  const Elt prev = eval_A(inst, r - 1);
  return inst.field.neg(inst.field.mul(inst.a, inst.field.frobenius(prev, inst.k)));
}

Elt eval_F(const Instance& inst) { return eval_A(inst, inst.m); }

Elt eval_G(const Instance& inst) {
  const Field& f = inst.field;
  const auto A = a_values(f, inst.k, inst.a, inst.m + 1);
  // A_0 = 0 extends the recurrence backwards (m = 1).
  const Elt prev = inst.m >= 2 ? A[inst.m - 1] : f.zero();
  return f.neg(f.add(A[inst.m + 1], f.mul(inst.a, f.frobenius(prev, inst.k))));
}

std::vector<Elt> zero_set_A(const Field& field, unsigned k, unsigned r) {
  if (r < 3) throw Error(Errc::InvalidArgument, "zero set parametrization needs r >= 3");
  if (field.degree() != k * r) throw Error(Errc::DegreeMismatch, "field must be GF(q^r)");
  const auto order = field.order();
  if (!order || *order > kZeroSetLimit) throw Error(Errc::FieldTooLarge, "GF(q^r) too large to enumerate");
  const std::uint64_t q = pow_or_throw(field.characteristic(), k);
  std::vector<Elt> out;
  field.for_each([&](const Elt& u) {
    const Elt u_q = field.frobenius(u, k);
    const Elt u_q2 = field.frobenius(u, 2ull * k);
    if (u_q2 == u) return;
    const Elt num = field.pow(field.sub(u, u_q), q * q + 1);
    const Elt den = field.pow(field.sub(u, u_q2), q + 1);
    out.push_back(field.div(num, den));
  });
  sort_by_encoding(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LinPoly build_La(const Instance& inst) {
  const Field& f = inst.field;
  return LinPoly(inst.k, {inst.a, f.one(), f.one()});
}

LinPoly build_F1(const Instance& inst) {
  require_pd1(inst);
  const Field& f = inst.field;
  std::vector<Elt> c(inst.m + 1, f.zero());
  c[0] = f.neg(eval_B(inst, inst.m));
  c[inst.m] = f.one();
  return LinPoly(inst.k, std::move(c));
}

LinPoly build_G1(const Instance& inst) {
  require_pd1(inst);
  const Field& f = inst.field;
  const auto A = a_values(f, inst.k, inst.a, inst.m);
  std::vector<Elt> c;
  for (unsigned i = 0; i + 2 <= inst.m; ++i) {
    c.push_back(f.frobenius(A[inst.m - 1 - i], std::uint64_t{inst.k} * (i + 1)));
  }
  return LinPoly(inst.k, std::move(c));
}

LinPoly build_G2(const Instance& inst) {
  require_pd1(inst);
  const Field& f = inst.field;
  const Elt b = eval_B(inst, inst.m);
  const std::uint64_t pd = pow_or_throw(inst.p, inst.d);
  std::vector<Elt> c;
  for (std::uint64_t i = 0; i + 2 <= pd; ++i) c.push_back(f.pow(b, pd - 2 - i));
  return LinPoly(inst.k * inst.m, std::move(c));
}

}  // namespace bluher
