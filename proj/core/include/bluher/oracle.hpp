#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bluher/field.hpp"
#include "bluher/sequence.hpp"
#include "bluher/solver.hpp"

namespace bluher {

/// Every x in GF(Q) with x^{q+1} + x + a = 0, by exhaustive evaluation.
/// Shares no code with the solver. Throws FieldTooLarge past 2^16 elements.
std::vector<Elt> brute_roots(const Instance& inst);

struct CensusRow {
  std::uint64_t roots = 0;  // i
  std::uint64_t count = 0;  // M_i
};

struct Census {
  unsigned p = 0;
  unsigned k = 0;
  unsigned n = 0;
  std::vector<CensusRow> rows;  // ascending i
  std::uint64_t total = 0;          // sum M_i
  std::uint64_t root_incidences = 0;  // sum i * M_i
  std::uint64_t nonvanishing = 0;   // #{x : x^{q+1} + x != 0}
  bool verified = false;
  std::uint64_t agreements = 0;
  std::uint64_t mismatches = 0;
};

/// M_i over all a in GF(Q)*. Throws FieldTooLarge past 2^14 elements.
/// With `verify`, also compares classify() and solve() against the oracle per a.
Census census(const Field& field, unsigned k, bool verify = false);

struct VerifyReport {
  bool match = false;
  std::uint64_t oracle_count = 0;
  std::optional<std::uint64_t> classified_count;
  std::optional<std::uint64_t> solver_count;
  std::vector<Elt> oracle_roots;
  std::vector<Elt> solver_roots;
  std::optional<Diagnostics> diagnostics;
  std::string error;  // set when the solver threw
};

/// Solver output against `oracle_roots` (normally brute_roots of the same instance).
VerifyReport compare_with_oracle(const Instance& inst, const std::vector<Elt>& oracle_roots,
                                 const SolverWorkspace& ws);
VerifyReport verify(const Instance& inst);
VerifyReport verify(const Instance& inst, const SolverWorkspace& ws);

}  // namespace bluher
