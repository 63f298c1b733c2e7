#include "bluher/solver.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bluher/int_math.hpp"
#include "bluher/oracle.hpp"
#include "test_support.hpp"

namespace bluher {
namespace {

using testing::all_elements;
using testing::desk_suite;
using testing::encode_set;
using testing::nonzero_elements;

std::vector<std::uint64_t> encodings(const Field& f, const std::vector<Elt>& xs) {
  std::vector<std::uint64_t> out;
  for (const auto& x : xs) out.push_back(f.encode(x));
  return out;
}

TEST(Solve, SmallestPd1Example) {
  const Instance inst = make_instance(2, 3, 1, 1);
  EXPECT_EQ(classify(inst), 3u);
  const Solution sol = solve(inst);
  EXPECT_EQ(sol.diagnostics.case_name, "pd1");
  EXPECT_EQ(encodings(inst.field, sol.roots), (std::vector<std::uint64_t>{2, 4, 6}));
  ASSERT_TRUE(sol.diagnostics.x0 && sol.diagnostics.beta && sol.diagnostics.w0 && sol.diagnostics.B);
}

TEST(Solve, MEqualsTwoNeverHasManyRoots) {
  const Field f = Field::make(3, 2);
  for (const auto& a : nonzero_elements(f)) {
    const std::uint64_t c = classify(make_instance(1, f, a));
    EXPECT_LE(c, 2u);
  }
}

TEST(Solve, AgreesWithOracleOnSmallFields) {
  for (auto [p, k, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {2, 1, 3}, {2, 1, 4}, {2, 2, 4}, {3, 1, 2}, {3, 1, 3}, {5, 1, 2}, {7, 1, 2}, {2, 1, 5}, {3, 2, 3}}) {
    const Field f = Field::make(p, n);
    const SolverWorkspace ws(f, k);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(k, f, a);
      const auto expect = brute_roots(inst);
      EXPECT_EQ(classify(inst), expect.size());
      const Solution sol = solve(inst, ws);
      EXPECT_EQ(sol.roots, expect) << "p=" << p << " k=" << k << " n=" << n << " a=" << f.encode(a);
      EXPECT_EQ(sol.count, sol.roots.size());
    }
  }
}

TEST(Solve, CaseNamesMatchCounts) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    const SolverWorkspace ws(f, t.k);
    const std::uint64_t pd = pow_or_throw(t.p, std::gcd(t.n, t.k));
    for (const auto& a : nonzero_elements(f)) {
      const Solution sol = solve(make_instance(t.k, f, a), ws);
      const std::string& name = sol.diagnostics.case_name;
      if (sol.count == pd + 1) {
        EXPECT_EQ(name, "pd1");
      } else {
        const std::string prefix = t.p == 2 ? "char2_" : "oddp_";
        const char* suffix[] = {"none", "one", "two"};
        EXPECT_EQ(name, prefix + suffix[sol.count]);
      }
    }
  }
}

TEST(Solve, OddDiscriminantLiesInSmallSubfield) {
  for (auto t : desk_suite()) {
    if (t.p == 2) continue;
    const Field f = Field::make(t.p, t.n);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(t.k, f, a);
      if (eval_F(inst).is_zero()) continue;
      const Solution sol = solve_le2_oddp(inst);
      ASSERT_TRUE(sol.diagnostics.E.has_value());
      EXPECT_TRUE(f.in_subfield(*sol.diagnostics.E, inst.d));
    }
  }
}

TEST(Solve, SingleRootFormulas) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(t.k, f, a);
      const Elt F = eval_F(inst);
      if (F.is_zero() || classify(inst) != 1) continue;
      const Solution sol = solve(inst);
      ASSERT_EQ(sol.roots.size(), 1u);
      const Elt& x = sol.roots.front();
      if (t.p == 2) {
        // x^2 = a F^{q-1}.
        EXPECT_EQ(f.mul(x, x), f.mul(a, f.div(f.pow(F, inst.q), F)));
      } else {
        EXPECT_EQ(x, f.div(f.neg(eval_G(inst)), f.mul(f.from_int(2), F)));
      }
    }
  }
}

TEST(Solve, WrongPathsAreRejected) {
  const Instance pd1 = make_instance(3, 3, 1, 1);
  ASSERT_TRUE(eval_F(pd1).is_zero());
  try {
    solve_le2_oddp(pd1);
    FAIL() << "expected CasePd1";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CasePd1);
  }
  const Instance other = make_instance(3, 3, 1, 2);
  try {
    solve_pd1(other);
    FAIL() << "expected NotPd1Case";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPd1Case);
  }
  EXPECT_THROW(solve_le2_oddp(make_instance(2, 4, 1, 3)), Error);
  EXPECT_THROW(solve_le2_p2(other), Error);
}

TEST(QuadraticResidual, VanishesOnRootsAndNotIdentically) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(t.k, f, a);
      const auto roots = brute_roots(inst);
      for (const auto& x : roots) EXPECT_TRUE(quadratic_residual(inst, x).is_zero());
      if (roots.size() == 2 && !eval_F(inst).is_zero()) {
        std::size_t zeros = 0;
        for (const auto& x : all_elements(f)) zeros += quadratic_residual(inst, x).is_zero();
        EXPECT_EQ(zeros, 2u);
      }
    }
  }
}

TEST(QuadraticResidual, DegeneratesWhenFVanishes) {
  const Instance inst = make_instance(2, 3, 1, 1);
  const Field& f = inst.field;
  const Elt G = eval_G(inst);
  for (const auto& x : all_elements(f)) EXPECT_EQ(quadratic_residual(inst, x), f.mul(G, x));
}

TEST(Pd1, PowerClosureUnderLinearMaps) {
  // For x with x^{q-1} in GF(Q) and L q-linearized over GF(Q): L(x)^{q-1} in GF(Q).
  std::mt19937_64 rng(12);
  const Instance inst = make_instance(2, 6, 2, 1);
  const SolverWorkspace ws(inst.field, inst.k);
  const auto& amb = *ws.ambient();
  const Field& A = amb.field;
  const unsigned n = inst.n;
  // Elements of order dividing (q-1)(Q-1) = 189 in GF(2^18)*.
  const std::uint64_t cofactor = (A.order_or_throw() - 1) / ((inst.q - 1) * (inst.Q - 1));
  ASSERT_EQ(cofactor * (inst.q - 1) * (inst.Q - 1), A.order_or_throw() - 1);
  for (int i = 0; i < 200; ++i) {
    const Elt x = A.pow(A.random(rng), cofactor);
    if (x.is_zero()) continue;
    ASSERT_TRUE(A.in_subfield(A.div(A.frobenius(x, inst.k), x), n));
    std::vector<Elt> c;
    for (int j = 0; j < 3; ++j) c.push_back(amb.from_q.apply(inst.field.random(rng)));
    const Elt y = lp_eval(A, LinPoly(inst.k, c), x);
    if (!y.is_zero()) {
      EXPECT_TRUE(A.in_subfield(A.div(A.frobenius(y, inst.k), y), n));
    }
  }
}

TEST(Pd1, KernelPowersStayInKernel) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    const SolverWorkspace ws(f, t.k);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(t.k, f, a);
      if (!eval_F(inst).is_zero()) continue;
      const Pd1Context ctx = make_pd1_context(inst, ws);
      const Field& A = ctx.ambient;
      const Kernel ker = lp_kernel(A, ctx.F1);
      ASSERT_TRUE(ker.elements.has_value());
      for (const auto& x0 : *ker.elements) {
        if (x0.is_zero()) continue;
        const Elt xs = A.pow(x0, inst.s);
        EXPECT_TRUE(lp_eval(A, ctx.F1, xs).is_zero());
        EXPECT_TRUE(A.in_subfield(A.div(A.frobenius(xs, inst.k), xs), inst.n));
      }
    }
  }
}

TEST(Pd1, BIsOneIffLaHasNonzeroRoot) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(t.k, f, a);
      if (!eval_F(inst).is_zero()) continue;
      const Kernel ker = lp_kernel(f, build_La(inst));
      EXPECT_EQ(eval_B(inst, inst.m) == f.one(), ker.dimension() > 0);
    }
  }
}

TEST(Pd1, RootSetStructure) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    const SolverWorkspace ws(f, t.k);
    for (const auto& a : nonzero_elements(f)) {
      const Instance inst = make_instance(t.k, f, a);
      if (!eval_F(inst).is_zero()) continue;
      const Solution sol = solve_pd1(inst, ws);
      const Elt& x0 = *sol.diagnostics.x0;
      const Elt& w0 = *sol.diagnostics.w0;
      std::set<std::uint64_t> expect{f.encode(x0)};
      for (const auto& alpha : f.subfield_elements(inst.d)) {
        const Elt w = f.add(w0, alpha);
        expect.insert(f.encode(f.mul(f.div(f.frobenius(w, t.k), w), x0)));
      }
      EXPECT_EQ(encode_set(f, sol.roots), expect);
      EXPECT_EQ(sol.count, pow_or_throw(t.p, inst.d) + 1);
    }
  }
}

TEST(Pd1, DeterministicAcrossWorkspaces) {
  const Instance inst = make_instance(2, 6, 2, 1);
  const Solution a = solve(inst);
  const Solution b = solve(inst, SolverWorkspace(inst.field, inst.k));
  EXPECT_EQ(a.roots, b.roots);
  EXPECT_EQ(a.diagnostics.x0, b.diagnostics.x0);
  EXPECT_EQ(a.diagnostics.w0, b.diagnostics.w0);
  EXPECT_EQ(a.diagnostics.scanned_candidates, b.diagnostics.scanned_candidates);
}

TEST(Parametrize, RootsAndImage) {
  for (auto [p, k, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 3}, {3, 1, 3}, {2, 1, 6},
                                                                                {2, 2, 6}, {2, 3, 6}}) {
    const Field f = Field::make(p, n);
    std::set<std::uint64_t> image;
    for (const auto& u : all_elements(f)) {
      try {
        const Parametrization par = parametrize_a(f, k, u);
        const Instance inst = make_instance(k, f, par.a);
        EXPECT_EQ(par.roots.size(), pow_or_throw(p, inst.d) + 1);
        for (const auto& x : par.roots) EXPECT_TRUE(eval_Pa(inst, x).is_zero());
        EXPECT_EQ(encode_set(f, par.roots).size(), par.roots.size());
        image.insert(f.encode(par.a));
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UInSmallField);
        EXPECT_TRUE(f.in_subfield(u, std::gcd(2 * std::gcd(n, k), n)));
      }
    }
    std::set<std::uint64_t> zeros;
    for (const auto& a : nonzero_elements(f)) {
      if (eval_F(make_instance(k, f, a)).is_zero()) zeros.insert(f.encode(a));
    }
    EXPECT_EQ(image, zeros) << "p=" << p << " k=" << k << " n=" << n;
  }
}

TEST(Parametrize, AlphaZeroInstance) {
  const Field f = Field::make(3, 3);
  const Elt u = f.gen();
  const Parametrization par = parametrize_a(f, 1, u);
  const Elt diff = f.sub(u, f.frobenius(u, 1));
  const Elt denom = f.add(f.one(), f.pow(diff, 2));
  // x_0 for alpha = 0 is -u^{q^2-q} / (1 + (u - u^q)^{q-1}).
  const Elt expect = f.neg(f.div(f.pow(u, 6), denom));
  EXPECT_EQ(par.roots[1], expect);
}

TEST(Parametrize, PrimeSubfieldIsExcluded) {
  const Field f = Field::make(2, 6);
  for (const auto& u : f.subfield_elements(1)) {
    try {
      parametrize_a(f, 1, u);
      ADD_FAILURE() << "expected UInSmallField";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::UInSmallField);
    }
  }
}

}  // namespace
}  // namespace bluher
