#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "bluher/field.hpp"

namespace bluher::testing {

struct Triple {
  unsigned p;
  unsigned k;
  unsigned n;
};

/// The desk suite of (p, k, n) triples.
inline const std::vector<Triple>& desk_suite() {
  static const std::vector<Triple> suite{{2, 1, 3}, {2, 1, 4}, {2, 1, 6}, {2, 2, 4}, {2, 2, 6}, {2, 3, 6},
                                         {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {3, 2, 4}, {5, 1, 2}, {5, 1, 3}};
  return suite;
}

inline std::vector<Elt> all_elements(const Field& f) {
  std::vector<Elt> out;
  f.for_each([&](const Elt& x) { out.push_back(x); });
  return out;
}

inline std::vector<Elt> nonzero_elements(const Field& f) {
  auto all = all_elements(f);
  all.erase(all.begin());
  return all;
}

inline std::set<std::uint64_t> encode_set(const Field& f, const std::vector<Elt>& xs) {
  std::set<std::uint64_t> out;
  for (const auto& x : xs) out.insert(f.encode(x));
  return out;
}

// ---- independent polynomial oracle over GF(p) (ascending coefficient vectors) --

inline std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  // b monic.
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() >= b.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

/// Irreducible iff no monic divisor of degree 1..deg/2 (trial division by all of them).
inline bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    std::vector<std::uint32_t> g(dd + 1, 0);
    g[dd] = 1;
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < dd && ++g[i] == p) g[i++] = 0;
      if (i == dd) break;
    }
  }
  return true;
}

/// First monic irreducible of degree e in base-p order of the lower coefficients.
inline std::vector<std::uint32_t> first_irreducible(std::uint32_t p, unsigned e) {
  std::vector<std::uint32_t> f(e + 1, 0);
  f[e] = 1;
  while (!irreducible_by_trial_division(f, p)) {
    unsigned i = 0;
    while (i < e && ++f[i] == p) f[i++] = 0;
  }
  return f;
}

}  // namespace bluher::testing
