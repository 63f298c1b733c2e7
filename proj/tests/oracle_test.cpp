#include "bluher/oracle.hpp"

#include <gtest/gtest.h>

#include "bluher/int_math.hpp"
#include "test_support.hpp"

namespace bluher {
namespace {

using testing::desk_suite;

TEST(BruteRoots, DefiningPolynomialConjugates) {
  const Instance inst = make_instance(2, 3, 1, 1);
  const Field& f = inst.field;
  const Elt t = f.gen();
  std::vector<Elt> expect{t, f.mul(t, t), f.add(f.mul(t, t), t)};
  sort_by_encoding(expect);
  EXPECT_EQ(brute_roots(inst), expect);
}

TEST(BruteRoots, EmptyWhenNoRoots) {
  const Field f = Field::make(2, 3);
  bool saw_empty = false;
  for (std::uint64_t v = 1; v < 8; ++v) saw_empty |= brute_roots(make_instance(1, f, f.decode(v))).empty();
  EXPECT_TRUE(saw_empty);
}

TEST(BruteRoots, RejectsLargeFields) {
  try {
    brute_roots(make_instance(2, 17, 1, 1));
    FAIL() << "expected FieldTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldTooLarge);
  }
}

TEST(Census, SmallestTriple) {
  const Census c = census(Field::make(2, 3), 1);
  ASSERT_EQ(c.rows.size(), 3u);
  EXPECT_EQ(c.rows[0].roots, 0u);
  EXPECT_EQ(c.rows[2].roots, 3u);
  EXPECT_EQ(c.rows[2].count, 1u);
  EXPECT_EQ(c.root_incidences, 6u);
  EXPECT_FALSE(c.verified);
}

TEST(Census, TotalsPartitionTheField) {
  for (auto t : desk_suite()) {
    const Field f = Field::make(t.p, t.n);
    const Census c = census(f, t.k, true);
    const std::uint64_t pd = pow_or_throw(t.p, std::gcd(t.n, t.k));
    EXPECT_EQ(c.total, f.order_or_throw() - 1);
    EXPECT_EQ(c.root_incidences, c.nonvanishing);
    for (const auto& row : c.rows) {
      EXPECT_TRUE(row.roots <= 2 || row.roots == pd + 1) << row.roots;
    }
    EXPECT_EQ(c.agreements, f.order_or_throw() - 1);
    EXPECT_EQ(c.mismatches, 0u);
  }
}

TEST(Census, RejectsLargeFields) {
  EXPECT_THROW(census(Field::make(2, 15), 1), Error);
}

TEST(Verify, MatchesOnDeskInstances) {
  const Instance inst = make_instance(2, 6, 2, 1);
  const VerifyReport r = verify(inst);
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.oracle_count, 5u);
  ASSERT_TRUE(r.diagnostics.has_value());
  EXPECT_TRUE(r.diagnostics->x0 && r.diagnostics->beta && r.diagnostics->w0);
  EXPECT_TRUE(r.error.empty());
}

TEST(Verify, CorruptedParameterIsReportedAsMismatch) {
  // Oracle roots for a = 1 compared against the solver at a = t.
  const Field f = Field::make(2, 3);
  const Instance good = make_instance(1, f, f.one());
  const Instance bad = make_instance(1, f, f.gen());
  const VerifyReport r = compare_with_oracle(bad, brute_roots(good), SolverWorkspace(f, 1));
  EXPECT_FALSE(r.match);
  EXPECT_EQ(r.oracle_count, 3u);
  ASSERT_TRUE(r.solver_count.has_value());
  EXPECT_NE(*r.solver_count, r.oracle_count);
  EXPECT_NE(r.solver_roots, r.oracle_roots);
}

}  // namespace
}  // namespace bluher
