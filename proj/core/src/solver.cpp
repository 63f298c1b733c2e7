#include "bluher/solver.hpp"

#include <algorithm>
#include <numeric>

#include "bluher/error.hpp"
#include "bluher/int_math.hpp"

namespace bluher {

namespace {

constexpr std::uint64_t kMaxCandidateScan = std::uint64_t{1} << 20;

// x^{q-1} without forming q: x^q / x, and 0 for x = 0.
Elt pow_q_minus_1(const Field& f, const Elt& x, std::uint64_t k) {
  if (x.is_zero()) return x;
  return f.div(f.frobenius(x, k), x);
}

bool is_primitive(const Field& f, const Elt& g, std::uint64_t group, const std::vector<std::uint64_t>& primes) {
  if (g.is_zero()) return false;
  const Elt one = f.one();
  return std::all_of(primes.begin(), primes.end(), [&](std::uint64_t r) { return f.pow(g, group / r) != one; });
}

void verify_roots(const Instance& inst, const std::vector<Elt>& roots, const char* path) {
  for (const auto& x : roots) {
    if (!eval_Pa(inst, x).is_zero()) {
      throw Error(Errc::InternalCheckFailed, std::string(path) + ": computed value is not a root");
    }
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (roots[i] == roots[i - 1]) throw Error(Errc::InternalCheckFailed, std::string(path) + ": repeated root");
  }
}

Solution finish(const Instance& inst, std::vector<Elt> roots, Diagnostics diag, const char* path) {
  sort_by_encoding(roots);
  verify_roots(inst, roots, path);
  Solution sol;
  sol.count = roots.size();
  sol.roots = std::move(roots);
  sol.diagnostics = std::move(diag);
  return sol;
}

struct Analysis {
  std::uint64_t count = 0;
  Diagnostics diag;
};

// Shared by classify and the N_a <= 2 solvers.
Analysis analyze(const Instance& inst) {
  const Field& f = inst.field;
  if (inst.a.is_zero()) throw Error(Errc::AZero, "a must be nonzero");
  Analysis out;
  const Elt F = eval_F(inst);
  const Elt G = eval_G(inst);
  out.diag.F = F;
  out.diag.G = G;
  const std::uint64_t pd = pow_or_throw(inst.p, inst.d);

  if (F.is_zero()) {
    out.count = pd + 1;
    out.diag.case_name = "pd1";
    out.diag.B = eval_B(inst, inst.m);
    return out;
  }

  const Elt Fq1 = f.mul(f.frobenius(F, inst.k), F);  // F^{q+1}
  if (inst.p != 2) {
    const Elt E = f.sub(f.mul(G, G), f.mul(f.from_int(4), f.mul(inst.a, Fq1)));
    out.diag.E = E;
    if (!f.in_subfield(E, inst.d)) {
      throw Error(Errc::InternalCheckFailed, "discriminant is not in GF(p^d)");
    }
    if (E.is_zero()) {
      out.count = 1;
      out.diag.case_name = "oddp_one";
    } else if (f.pow(E, (pd - 1) / 2) == f.one()) {
      out.count = 2;
      out.diag.case_name = "oddp_two";
    } else {
      out.count = 0;
      out.diag.case_name = "oddp_none";
    }
    return out;
  }

  if (G.is_zero()) {
    out.count = 1;
    out.diag.case_name = "char2_one";
    return out;
  }
  const Elt G2 = f.mul(G, G);
  out.diag.E = f.div(f.mul(inst.a, Fq1), G2);
  const Elt ratio = f.div(f.norm_rel(inst.a, inst.d, inst.m), G2);
  if (!f.in_subfield(ratio, inst.d)) {
    throw Error(Errc::InternalCheckFailed, "Nr(a)/G(a)^2 is not in GF(2^d)");
  }
  const Elt H = f.trace_rel(ratio, 1, inst.d);
  out.diag.H = H;
  out.count = H.is_zero() ? 2 : 0;
  out.diag.case_name = H.is_zero() ? "char2_two" : "char2_none";
  return out;
}

}  // namespace

Elt eval_Pa(const Instance& inst, const Elt& x) {
  const Field& f = inst.field;
  return f.add(f.add(f.mul(f.frobenius(x, inst.k), x), x), inst.a);
}

Elt quadratic_residual(const Instance& inst, const Elt& x) {
  const Field& f = inst.field;
  const Elt F = eval_F(inst);
  const Elt G = eval_G(inst);
  const Elt lead = f.mul(F, f.mul(x, x));
  const Elt mid = f.mul(G, x);
  const Elt tail = f.mul(inst.a, f.frobenius(F, inst.k));
  return f.add(f.add(lead, mid), tail);
}

SolverWorkspace::SolverWorkspace(const Field& field, unsigned k) : field_(field), k_(k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  const unsigned p = field.characteristic();
  const unsigned n = field.degree();
  const unsigned d = std::gcd(n, k);
  const unsigned m = n / d;

  if (p == 2) {
    Field ext = Field::make(2, 2 * n);
    Embedding from_q(field, ext);
    const std::uint64_t Q = field.order_or_throw();
    const std::uint64_t group = ext.order_or_throw() - 1;
    auto primes = prime_divisors(Q - 1);
    for (auto r : prime_divisors(Q + 1)) primes.push_back(r);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    Elt g;
    for (std::uint64_t v = 1;; ++v) {
      g = ext.decode(v);
      if (is_primitive(ext, g, group, primes)) break;
    }
    Elt zeta = ext.pow(g, Q - 1);
    quad_.emplace(QuadraticExt{std::move(ext), std::move(from_q), std::move(zeta)});
  }

  if (m >= 3) {
    // A_m = 1 and A_2 = -1 never vanish, so the p^d+1 case needs m >= 3.
    const std::uint64_t pd = pow_or_throw(p, d);
    const std::uint64_t kN = std::uint64_t{k} * m * (pd - 1);
    if (kN > 256) throw Error(Errc::FieldTooLarge, "ambient field GF(p^" + std::to_string(kN) + ") is too large");
    Field amb = Field::make(p, static_cast<unsigned>(kN));
    Embedding from_q(field, amb);
    ambient_.emplace(Ambient{std::move(amb), std::move(from_q)});
  }
}

std::uint64_t classify(const Instance& inst) { return analyze(inst).count; }

Solution solve_le2_oddp(const Instance& inst) {
  if (inst.p == 2) throw Error(Errc::OddCharOnly, "solve_le2_oddp needs odd characteristic");
  Analysis an = analyze(inst);
  if (an.diag.case_name == "pd1") throw Error(Errc::CasePd1, "F(a) = 0; use the p^d+1 solver");
  const Field& f = inst.field;
  const Elt two_F = f.mul(f.from_int(2), *an.diag.F);
  const Elt& G = *an.diag.G;
  std::vector<Elt> roots;
  if (an.count == 1) {
    roots.push_back(f.div(f.neg(G), two_F));
  } else if (an.count == 2) {
    const Elt r = f.sqrt_in_subfield(*an.diag.E, inst.d);
    roots.push_back(f.div(f.sub(r, G), two_F));
    roots.push_back(f.div(f.sub(f.neg(r), G), two_F));
  }
  return finish(inst, std::move(roots), std::move(an.diag), "solve_le2_oddp");
}

Solution solve_le2_p2(const Instance& inst) { return solve_le2_p2(inst, SolverWorkspace(inst.field, inst.k)); }

Solution solve_le2_p2(const Instance& inst, const SolverWorkspace& ws) {
  if (inst.p != 2) throw Error(Errc::InvalidArgument, "solve_le2_p2 needs characteristic 2");
  Analysis an = analyze(inst);
  if (an.diag.case_name == "pd1") throw Error(Errc::CasePd1, "F(a) = 0; use the p^d+1 solver");
  const Field& f = inst.field;
  const Elt& F = *an.diag.F;
  const Elt& G = *an.diag.G;
  std::vector<Elt> roots;
  if (an.count == 1) {
    // (a F^{q-1})^{1/2}; squaring is a bijection, its inverse is x -> x^{2^{n-1}}.
    const Elt base = f.mul(inst.a, pow_q_minus_1(f, F, inst.k));
    roots.push_back(f.frobenius(base, inst.n - 1));
  } else if (an.count == 2) {
    const auto& quad = *ws.quadratic_ext();
    const Field& ext = quad.field;
    const Elt z = ext.div(quad.from_q.apply(*an.diag.E), ext.add(quad.zeta, ext.one()));
    // T_n(z) = z + z^2 + ... + z^{2^{n-1}}, evaluated in GF(Q^2).
    Elt T = ext.zero();
    for (unsigned i = 0; i < inst.n; ++i) T = ext.add(T, ext.frobenius(z, i));
    const Elt G_over_F = f.div(G, F);
    const auto x1 = quad.from_q.pull_back(ext.mul(quad.from_q.apply(G_over_F), T));
    if (!x1) throw Error(Errc::InternalCheckFailed, "x_1 is not in GF(Q)");
    roots.push_back(*x1);
    roots.push_back(f.add(*x1, G_over_F));
  }
  return finish(inst, std::move(roots), std::move(an.diag), "solve_le2_p2");
}

Pd1Context make_pd1_context(const Instance& inst, const SolverWorkspace& ws) {
  if (!eval_F(inst).is_zero()) throw Error(Errc::NotPd1Case, "F(a) != 0");
  if (!ws.ambient()) throw Error(Errc::InternalCheckFailed, "workspace has no ambient field");
  const auto& amb = *ws.ambient();
  return Pd1Context{.ambient = amb.field,
                    .from_q = amb.from_q,
                    .B = eval_B(inst, inst.m),
                    .La = build_La(inst).mapped(amb.from_q),
                    .F1 = build_F1(inst).mapped(amb.from_q),
                    .G1 = build_G1(inst).mapped(amb.from_q),
                    .G2 = build_G2(inst).mapped(amb.from_q)};
}

Solution solve_pd1(const Instance& inst) { return solve_pd1(inst, SolverWorkspace(inst.field, inst.k)); }

Solution solve_pd1(const Instance& inst, const SolverWorkspace& ws) {
  const Field& f = inst.field;
  if (!eval_F(inst).is_zero()) throw Error(Errc::NotPd1Case, "F(a) != 0; N_a <= 2");
  const Pd1Context ctx = make_pd1_context(inst, ws);
  const Field& amb = ctx.ambient;

  Diagnostics diag;
  diag.case_name = "pd1";
  diag.F = f.zero();
  diag.G = eval_G(inst);
  diag.B = ctx.B;

  // Find y = G1(G2(x')^s * delta) != 0, x' in GF(q^N)* and delta in GF(Q)*.
  // G1 is GF(q)-linear, so a GF(q)* factor cannot turn zero into nonzero.
  std::optional<Elt> y;
  const std::uint64_t q_order = inst.Q;
  for (std::uint64_t v = 1; v <= kMaxCandidateScan && !y; ++v) {
    const Elt z = lp_eval(amb, ctx.G2, amb.decode(v));
    if (z.is_zero()) continue;
    const Elt zs = amb.pow(z, inst.s);
    for (std::uint64_t dv = 1; dv < q_order; ++dv) {
      const Elt delta = f.decode(dv);
      const Elt cand = lp_eval(amb, ctx.G1, amb.mul(zs, ctx.from_q.apply(delta)));
      if (!cand.is_zero()) {
        y = cand;
        diag.scanned_candidates = v;
        diag.delta = delta;
        break;
      }
    }
  }
  if (!y) throw Error(Errc::PipelineExhausted, "no x' gave a nonzero G_1 value");

  const auto x0 = ctx.from_q.pull_back(pow_q_minus_1(amb, *y, inst.k));
  if (!x0) throw Error(Errc::InternalCheckFailed, "x_0 = y^{q-1} is not in GF(Q)");
  diag.x0 = *x0;

  const Elt ratio = f.div(f.mul(*x0, *x0), inst.a);
  std::optional<Elt> beta;
  for (std::uint64_t bv = 1; bv < q_order && !beta; ++bv) {
    const Elt b = f.decode(bv);
    if (pow_q_minus_1(f, b, inst.k) == ratio) beta = b;
  }
  if (!beta) throw Error(Errc::InternalCheckFailed, "x_0^2/a is not a (q-1)-th power in GF(Q)");
  diag.beta = *beta;

  const auto ws_solutions = artin_schreier_solve(f, f.inv(f.mul(*beta, *x0)), inst.k);
  const std::uint64_t pd = pow_or_throw(inst.p, inst.d);
  if (ws_solutions.size() != pd) {
    throw Error(Errc::InternalCheckFailed, "Artin-Schreier equation has " + std::to_string(ws_solutions.size()) +
                                               " solutions, expected " + std::to_string(pd));
  }
  const Elt& w0 = ws_solutions.front();
  diag.w0 = w0;

  std::vector<Elt> roots{*x0};
  for (const Elt& alpha : f.subfield_elements(inst.d)) {
    roots.push_back(f.mul(pow_q_minus_1(f, f.add(w0, alpha), inst.k), *x0));
  }
  Solution sol = finish(inst, std::move(roots), std::move(diag), "solve_pd1");
  if (sol.count != pd + 1) throw Error(Errc::InternalCheckFailed, "p^d+1 root set has collisions");
  return sol;
}

Solution solve(const Instance& inst) { return solve(inst, SolverWorkspace(inst.field, inst.k)); }

Solution solve(const Instance& inst, const SolverWorkspace& ws) {
  if (inst.a.is_zero()) throw Error(Errc::AZero, "a must be nonzero");
  if (eval_F(inst).is_zero()) return solve_pd1(inst, ws);
  return inst.p == 2 ? solve_le2_p2(inst, ws) : solve_le2_oddp(inst);
}

Parametrization parametrize_a(const Field& f, unsigned k, const Elt& u) {
  const unsigned d = std::gcd(f.degree(), k);
  const Elt u_q = f.frobenius(u, k);
  const Elt u_q2 = f.frobenius(u, 2ull * k);
  if (u_q2 == u) throw Error(Errc::UInSmallField, "u lies in GF(p^{2d}) (intersected with GF(Q))");
  const Elt diff = f.sub(u, u_q);
  // (u - u^q)^{q^2+1} and (u - u^{q^2})^{q+1} through Frobenius.
  const Elt num = f.mul(f.frobenius(diff, 2ull * k), diff);
  const Elt den_base = f.sub(u, u_q2);
  const Elt den = f.mul(f.frobenius(den_base, k), den_base);
  const Elt a = f.div(num, den);

  const Elt denom = f.add(f.one(), pow_q_minus_1(f, diff, k));
  if (denom.is_zero()) throw Error(Errc::UInSmallField, "1 + (u - u^q)^{q-1} vanishes");
  const Elt minus_inv = f.neg(f.inv(denom));

  Parametrization out{.a = a, .x0 = minus_inv, .roots = {minus_inv}};
  for (const Elt& alpha : f.subfield_elements(d)) {
    const Elt w = f.add(u, alpha);
    // (u+alpha)^{q^2-q} = w^{q^2} / w^q; w != 0 since u is outside GF(p^d).
    const Elt pw = f.div(f.frobenius(w, 2ull * k), f.frobenius(w, k));
    out.roots.push_back(f.mul(pw, minus_inv));
  }

  if (a.is_zero()) throw Error(Errc::UInSmallField, "a(u) vanishes");
  const Instance inst = make_instance(k, f, a);
  for (const auto& x : out.roots) {
    if (!eval_Pa(inst, x).is_zero()) throw Error(Errc::InternalCheckFailed, "parametrized value is not a root");
  }
  return out;
}

}  // namespace bluher
