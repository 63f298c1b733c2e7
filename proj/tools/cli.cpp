#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "bluher/error.hpp"
#include "bluher/field.hpp"
#include "bluher/oracle.hpp"
#include "bluher/sequence.hpp"
#include "bluher/solver.hpp"

namespace bluher::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  unsigned p = 0;
  unsigned k = 0;
  unsigned n = 0;
  std::string poly;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "Characteristic (prime)")->required();
  cmd->add_option("--k", c.k, "q = p^k")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--n", c.n, "Q = p^n")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--poly", c.poly,
                  "Defining polynomial of GF(p^n): comma-separated coefficients, constant term first, "
                  "leading 1 included");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

std::optional<PrimePoly> parse_poly(const std::string& text) {
  if (text.empty()) return std::nullopt;
  PrimePoly out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<Digit>(v));
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "bad --poly coefficient '" + item + "'");
    }
  }
  return out;
}

Field make_field(const Common& c) { return Field::make(c.p, c.n, parse_poly(c.poly)); }

Json encodings(const Field& f, const std::vector<Elt>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(f.encode(x));
  return arr;
}

Json params_json(const Field& f, unsigned k) {
  const unsigned n = f.degree();
  const unsigned d = std::gcd(n, k);
  Json j;
  j["p"] = f.characteristic();
  j["n"] = n;
  j["k"] = k;
  j["d"] = d;
  j["m"] = n / d;
  j["modulus"] = f.modulus();
  j["modulus_text"] = f.format_modulus();
  return j;
}

Json diagnostics_json(const Field& f, const Diagnostics& d) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::optional<Elt>& v) {
    if (v) j[key] = f.encode(*v);
  };
  put("F", d.F);
  put("G", d.G);
  put("E", d.E);
  put("H", d.H);
  put("B", d.B);
  put("x0", d.x0);
  put("beta", d.beta);
  put("w0", d.w0);
  if (d.scanned_candidates) j["scanned_candidates"] = *d.scanned_candidates;
  put("delta", d.delta);
  return j;
}

std::string join(const Json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ' ';
    s += v.dump();
  }
  return s;
}

void print_text(std::ostream& out, const Json& j) {
  const auto& params = j["params"];
  out << "GF(" << params["p"].get<unsigned>() << "^" << params["n"].get<unsigned>() << ") mod "
      << params["modulus_text"].get<std::string>() << ", k=" << params["k"].get<unsigned>()
      << ", d=" << params["d"].get<unsigned>() << ", m=" << params["m"].get<unsigned>() << "\n";
  for (const auto& [key, value] : j.items()) {
    if (key == "params" || key == "version") continue;
    if (value.is_array()) {
      out << key << ": " << join(value) << "\n";
    } else if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) {
        out << key << "." << sub << ": " << (v.is_array() ? join(v) : v.dump()) << "\n";
      }
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(std::ostream& out, const Common& c, const Json& j) {
  if (c.format == "text") {
    print_text(out, j);
  } else {
    out << j.dump(2) << "\n";
  }
}

Json solution_json(const Field& f, unsigned k, std::uint64_t a, const Solution& sol) {
  Json j;
  j["version"] = kVersion;
  j["params"] = params_json(f, k);
  j["params"]["a"] = a;
  j["case"] = sol.diagnostics.case_name;
  j["count"] = sol.count;
  j["roots"] = encodings(f, sol.roots);
  j["diagnostics"] = diagnostics_json(f, sol.diagnostics);
  return j;
}

int cmd_solve(const Common& c, std::uint64_t a, std::ostream& out) {
  const Field f = make_field(c);
  const Instance inst = make_instance(c.k, f, f.decode(a));
  emit(out, c, solution_json(f, c.k, a, solve(inst)));
  return kExitOk;
}

int cmd_census(const Common& c, bool verify_each, std::ostream& out) {
  const Field f = make_field(c);
  const Census cen = census(f, c.k, verify_each);
  Json j;
  j["version"] = kVersion;
  j["params"] = params_json(f, c.k);
  Json rows = Json::array();
  for (const auto& r : cen.rows) rows.push_back({{"i", r.roots}, {"M", r.count}});
  j["rows"] = rows;
  j["totals"] = {{"sum_M", cen.total},
                 {"Q_minus_1", f.order_or_throw() - 1},
                 {"sum_iM", cen.root_incidences},
                 {"nonvanishing_x", cen.nonvanishing}};
  if (verify_each) j["verify"] = {{"agreements", cen.agreements}, {"mismatches", cen.mismatches}};

  if (c.format == "text") {
    const auto& params = j["params"];
    out << "GF(" << c.p << "^" << c.n << ") mod " << params["modulus_text"].get<std::string>() << ", k=" << c.k
        << "\n";
    for (const auto& r : cen.rows) out << "M_" << r.roots << " = " << r.count << "\n";
    out << "sum M_i = " << cen.total << " (Q-1 = " << f.order_or_throw() - 1 << ")\n";
    out << "sum i*M_i = " << cen.root_incidences << "\n";
    if (verify_each) out << "agreements: " << cen.agreements << ", mismatches: " << cen.mismatches << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return verify_each && cen.mismatches > 0 ? kExitFailure : kExitOk;
}

int cmd_param(const Common& c, std::uint64_t u, std::ostream& out) {
  const Field f = make_field(c);
  const Parametrization par = parametrize_a(f, c.k, f.decode(u));
  const Instance inst = make_instance(c.k, f, par.a);
  Json j;
  j["version"] = kVersion;
  j["params"] = params_json(f, c.k);
  j["params"]["u"] = u;
  j["a"] = f.encode(par.a);
  j["F_of_a"] = f.encode(eval_F(inst));
  j["x0"] = f.encode(par.x0);
  std::vector<Elt> roots = par.roots;
  sort_by_encoding(roots);
  j["count"] = roots.size();
  j["roots"] = encodings(f, roots);
  emit(out, c, j);
  return kExitOk;
}

int cmd_verify(const Common& c, std::uint64_t a, std::ostream& out) {
  const Field f = make_field(c);
  const Instance inst = make_instance(c.k, f, f.decode(a));
  const VerifyReport r = verify(inst);
  Json j;
  j["version"] = kVersion;
  j["params"] = params_json(f, c.k);
  j["params"]["a"] = a;
  j["status"] = r.match ? "match" : "mismatch";
  j["oracle_count"] = r.oracle_count;
  if (r.classified_count) j["classified_count"] = *r.classified_count;
  if (r.solver_count) j["solver_count"] = *r.solver_count;
  j["oracle_roots"] = encodings(f, r.oracle_roots);
  j["solver_roots"] = encodings(f, r.solver_roots);
  if (r.diagnostics) {
    j["case"] = r.diagnostics->case_name;
    j["diagnostics"] = diagnostics_json(f, *r.diagnostics);
  }
  if (!r.error.empty()) j["error"] = r.error;
  emit(out, c, j);
  return r.match ? kExitOk : kExitFailure;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::FieldTooLarge: return kExitTooLarge;
    case Errc::NotPrime:
    case Errc::NotIrreducible:
    case Errc::InvalidArgument:
    case Errc::AZero:
    case Errc::UInSmallField:
    case Errc::DegreeMismatch:
    case Errc::IncompatibleDegrees: return kExitInvalid;
    default: return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roots of X^{p^k+1} + X + a over GF(p^n)", "bluher"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  std::uint64_t a = 0;
  std::uint64_t u = 0;
  bool verify_flag = false;

  auto* solve_cmd = app.add_subcommand("solve", "Classify and list all GF(Q) roots for one a");
  add_common(solve_cmd, common);
  solve_cmd->add_option("--a", a, "a as a base-p integer encoding")->required();

  auto* census_cmd = app.add_subcommand("census", "Count M_i over every a in GF(Q)*");
  add_common(census_cmd, common);
  census_cmd->add_flag("--verify", verify_flag, "Also check the solver against the oracle for each a");

  auto* param_cmd = app.add_subcommand("param", "Build a(u) and its p^d+1 roots from a parameter u");
  add_common(param_cmd, common);
  param_cmd->add_option("--u", u, "u as a base-p integer encoding")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver with brute force for one a");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--a", a, "a as a base-p integer encoding")->required();

  std::vector<std::string> argv_store{"bluher"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve_cmd) return cmd_solve(common, a, out);
    if (*census_cmd) return cmd_census(common, verify_flag, out);
    if (*param_cmd) return cmd_param(common, u, out);
    if (*verify_cmd) return cmd_verify(common, a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitInvalid;
}

}  // namespace bluher::cli
