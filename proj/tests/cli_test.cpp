#include "cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

namespace bluher::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliSolve, SmallestExample) {
  const Result r = invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["case"], "pd1");
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["roots"], Json::parse("[2, 4, 6]"));
  EXPECT_EQ(j["params"]["modulus_text"], "X^3 + X + 1");
  EXPECT_EQ(j["version"], kVersion);
  for (const char* key : {"params", "case", "count", "roots", "diagnostics", "version"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(CliSolve, MEqualsTwoCounts) {
  for (int a = 1; a < 9; ++a) {
    const Result r = invoke({"solve", "--p", "3", "--k", "1", "--n", "2", "--a", std::to_string(a)});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_LE(Json::parse(r.out)["count"].get<int>(), 2);
  }
}

TEST(CliSolve, FiveRootsAtOneOverGF64) {
  const Result r = invoke({"solve", "--p", "2", "--k", "2", "--n", "6", "--a", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["count"], 5);
}

TEST(CliSolve, CustomModulus) {
  const Result r = invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--poly", "1,0,1,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["params"]["modulus_text"], "X^3 + X^2 + 1");
  EXPECT_EQ(j["count"], 3);
}

TEST(CliSolve, TextFormat) {
  const Result r = invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("X^3 + X + 1"), std::string::npos);
  EXPECT_NE(r.out.find("roots: 2 4 6"), std::string::npos);
}

TEST(CliSolve, Deterministic) {
  const std::vector<std::string> args{"solve", "--p", "5", "--k", "1", "--n", "3", "--a", "1"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliErrors, InvalidParameters) {
  EXPECT_EQ(invoke({"solve", "--p", "4", "--k", "1", "--n", "3", "--a", "1"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "0"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "9"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--poly", "1,1,1,1"}).code,
            kExitInvalid);
  EXPECT_EQ(invoke({"solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--poly", "x"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"solve", "--p", "2", "--k", "1"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalid);
  EXPECT_EQ(invoke({}).code, kExitInvalid);
}

TEST(CliErrors, TooLarge) {
  EXPECT_EQ(invoke({"census", "--p", "2", "--k", "1", "--n", "20"}).code, kExitTooLarge);
  EXPECT_EQ(invoke({"verify", "--p", "2", "--k", "1", "--n", "20", "--a", "1"}).code, kExitTooLarge);
}

TEST(CliCensus, RowsAndVerification) {
  const Result r = invoke({"census", "--p", "2", "--k", "1", "--n", "3", "--verify"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["rows"].back()["i"], 3);
  EXPECT_EQ(j["rows"].back()["M"], 1);
  EXPECT_EQ(j["totals"]["sum_M"], 7);
  EXPECT_EQ(j["totals"]["sum_iM"], 6);
  EXPECT_EQ(j["verify"]["agreements"], 7);
  EXPECT_EQ(j["verify"]["mismatches"], 0);
}

TEST(CliCensus, TextSummary) {
  const Result r = invoke({"census", "--p", "3", "--k", "1", "--n", "3", "--verify", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("agreements: 26, mismatches: 0"), std::string::npos);
}

TEST(CliParam, ValidAndExcluded) {
  const Result ok = invoke({"param", "--p", "2", "--k", "1", "--n", "3", "--u", "2"});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  const Json j = Json::parse(ok.out);
  EXPECT_EQ(j["F_of_a"], 0);
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(invoke({"param", "--p", "2", "--k", "1", "--n", "3", "--u", "1"}).code, kExitInvalid);
}

TEST(CliVerify, MatchStatus) {
  const Result r = invoke({"verify", "--p", "3", "--k", "2", "--n", "4", "--a", "5"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["status"], "match");
}

TEST(CliMisc, Version) {
  const Result r = invoke({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(kVersion), std::string::npos);
}

}  // namespace
}  // namespace bluher::cli
