#include "bluher/oracle.hpp"

#include <map>

#include "bluher/error.hpp"
#include "bluher/int_math.hpp"

namespace bluher {

namespace {

constexpr std::uint64_t kBruteLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kCensusLimit = std::uint64_t{1} << 14;

std::uint64_t checked_order(const Field& f, std::uint64_t limit, const char* what) {
  const auto order = f.order();
  if (!order || *order > limit) throw Error(Errc::FieldTooLarge, std::string(what) + ": field too large");
  return *order;
}

}  // namespace

std::vector<Elt> brute_roots(const Instance& inst) {
  const Field& f = inst.field;
  checked_order(f, kBruteLimit, "brute_roots");
  std::vector<Elt> out;
  // Plain square-and-multiply for x^{q+1}; no Frobenius tables.
  f.for_each([&](const Elt& x) {
    if (f.add(f.add(f.pow(x, inst.q + 1), x), inst.a).is_zero()) out.push_back(x);
  });
  return out;
}

Census census(const Field& field, unsigned k, bool verify_each) {
  const std::uint64_t order = checked_order(field, kCensusLimit, "census");
  Census c;
  c.p = field.characteristic();
  c.k = k;
  c.n = field.degree();
  c.verified = verify_each;

  std::optional<SolverWorkspace> ws;
  if (verify_each) ws.emplace(field, k);

  std::map<std::uint64_t, std::uint64_t> rows;
  for (std::uint64_t v = 1; v < order; ++v) {
    const Instance inst = make_instance(k, field, field.decode(v));
    const auto roots = brute_roots(inst);
    ++rows[roots.size()];
    if (verify_each) {
      const auto report = compare_with_oracle(inst, roots, *ws);
      ++(report.match ? c.agreements : c.mismatches);
    }
  }
  for (const auto& [i, count] : rows) {
    c.rows.push_back({i, count});
    c.total += count;
    c.root_incidences += i * count;
  }

  const std::uint64_t q = pow_or_throw(c.p, k);
  field.for_each([&](const Elt& x) {
    if (!field.add(field.pow(x, q + 1), x).is_zero()) ++c.nonvanishing;
  });
  return c;
}

VerifyReport compare_with_oracle(const Instance& inst, const std::vector<Elt>& oracle_roots,
                                 const SolverWorkspace& ws) {
  VerifyReport r;
  r.oracle_roots = oracle_roots;
  r.oracle_count = oracle_roots.size();
  try {
    r.classified_count = classify(inst);
    Solution sol = solve(inst, ws);
    r.solver_count = sol.count;
    r.solver_roots = std::move(sol.roots);
    r.diagnostics = std::move(sol.diagnostics);
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.match = r.error.empty() && r.classified_count == r.oracle_count && r.solver_count == r.oracle_count &&
            r.solver_roots == r.oracle_roots;
  return r;
}

VerifyReport verify(const Instance& inst) {
  // Oracle first: it rejects oversized fields before the workspace is built.
  auto roots = brute_roots(inst);
  return compare_with_oracle(inst, roots, SolverWorkspace(inst.field, inst.k));
}

VerifyReport verify(const Instance& inst, const SolverWorkspace& ws) {
  return compare_with_oracle(inst, brute_roots(inst), ws);
}

}  // namespace bluher
