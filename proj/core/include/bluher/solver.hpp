#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bluher/field.hpp"
#include "bluher/linpoly.hpp"
#include "bluher/sequence.hpp"

namespace bluher {

/// Intermediate values of a solve. Elements live in GF(Q) unless noted.
struct Diagnostics {
  std::string case_name;
  std::optional<Elt> F;
  std::optional<Elt> G;
  /// Odd p: G^2 - 4aF^{q+1}. p = 2: aF^{q+1}/G^2.
  std::optional<Elt> E;
  /// p = 2 only: tr_d(Nr(a)/G^2), an element of GF(2).
  std::optional<Elt> H;
  std::optional<Elt> B;
  std::optional<Elt> x0;
  std::optional<Elt> beta;
  std::optional<Elt> w0;
  /// p^d+1 path: how many ambient candidates x' were scanned and the
  /// GF(Q) multiplier delta that produced a nonzero G_1 value.
  std::optional<std::uint64_t> scanned_candidates;
  std::optional<Elt> delta;
};

struct Solution {
  std::uint64_t count = 0;
  std::vector<Elt> roots;  // increasing encoding
  Diagnostics diagnostics;
};

/// x^{q+1} + x + a.
Elt eval_Pa(const Instance& inst, const Elt& x);

/// F(a) x^2 + G(a) x + a F(a)^q.
Elt quadratic_residual(const Instance& inst, const Elt& x);

/// Fields and embeddings shared by every a of one (p, n, k) triple. Immutable
/// after construction; build once per triple to amortize setup across a census.
class SolverWorkspace {
 public:
  SolverWorkspace(const Field& field, unsigned k);

  const Field& field() const { return field_; }
  unsigned k() const { return k_; }

  /// GF(Q^2) with the embedding of GF(Q) and the fixed zeta of order Q+1 (p = 2 only).
  struct QuadraticExt {
    Field field;
    Embedding from_q;
    Elt zeta;
  };
  const std::optional<QuadraticExt>& quadratic_ext() const { return quad_; }

  /// GF(p^{kN}) hosting GF(q^N), GF(Q) and GF(q) (only when m >= 3).
  struct Ambient {
    Field field;
    Embedding from_q;
  };
  const std::optional<Ambient>& ambient() const { return ambient_; }

 private:
  Field field_;
  unsigned k_;
  std::optional<QuadraticExt> quad_;
  std::optional<Ambient> ambient_;
};

/// N_a by the case analysis. Throws AZero for a = 0.
std::uint64_t classify(const Instance& inst);

Solution solve_le2_oddp(const Instance& inst);
Solution solve_le2_p2(const Instance& inst);
Solution solve_le2_p2(const Instance& inst, const SolverWorkspace& ws);
Solution solve_pd1(const Instance& inst);
Solution solve_pd1(const Instance& inst, const SolverWorkspace& ws);

/// Dispatches on the case analysis.
Solution solve(const Instance& inst);
Solution solve(const Instance& inst, const SolverWorkspace& ws);

/// Linearized data of the p^d+1 case, carried into the ambient field.
struct Pd1Context {
  Field ambient;
  Embedding from_q;
  Elt B;  // B_m(a) in GF(Q)
  LinPoly La;
  LinPoly F1;
  LinPoly G1;
  LinPoly G2;
};
Pd1Context make_pd1_context(const Instance& inst, const SolverWorkspace& ws);

struct Parametrization {
  Elt a;
  Elt x0;
  /// x0 followed by x_alpha for alpha in GF(p^d) in increasing encoding.
  std::vector<Elt> roots;
};

/// a(u) = (u - u^q)^{q^2+1} / (u - u^{q^2})^{q+1} and its p^d+1 roots.
/// Throws UInSmallField when u^{q^2} = u or the root denominator vanishes.
Parametrization parametrize_a(const Field& field, unsigned k, const Elt& u);

}  // namespace bluher
