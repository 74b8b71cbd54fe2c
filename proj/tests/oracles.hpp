#pragma once

// Brute-force reference implementations used only by the tests. Each one
// takes a different route from the library code it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t lcm_all(const std::vector<std::int64_t>& a) {
  std::int64_t l = 1;
  for (const auto x : a) l = std::lcm(l, x);
  return l;
}

// Rational middle Betti number of the link as the multiplicity of the
// eigenvalue 1 of the Milnor fibre monodromy: the number of tuples
// 0 < x_j < a_j with sum x_j / a_j an integer. Dynamic programme over
// residues of sum x_j (L / a_j) modulo L.
inline std::int64_t middle_betti_by_eigenvalues(const std::vector<std::int64_t>& a) {
  const std::int64_t l = lcm_all(a);
  std::vector<std::int64_t> ways(static_cast<std::size_t>(l), 0);
  ways[0] = 1;
  for (const auto aj : a) {
    std::vector<std::int64_t> next(ways.size(), 0);
    const std::int64_t unit = l / aj;
    for (std::int64_t r = 0; r < l; ++r) {
      if (ways[static_cast<std::size_t>(r)] == 0) continue;
      for (std::int64_t x = 1; x < aj; ++x) next[static_cast<std::size_t>((r + x * unit) % l)] += ways[static_cast<std::size_t>(r)];
    }
    ways.swap(next);
  }
  return ways[0];
}

// Plain nested enumeration of b with sum b_j w_j = m, optional caps.
inline std::int64_t count_monomials(const std::vector<std::int64_t>& w, std::int64_t m,
                                    const std::vector<std::int64_t>& caps = {}) {
  std::int64_t count = 0;
  std::vector<std::int64_t> b(w.size(), 0);
  const auto rec = [&](auto&& self, std::size_t slot, std::int64_t used) -> void {
    if (slot == w.size()) {
      if (used == m) ++count;
      return;
    }
    for (std::int64_t x = 0; used + x * w[slot] <= m; ++x) {
      if (!caps.empty() && x > caps[slot]) break;
      self(self, slot + 1, used + x * w[slot]);
    }
  };
  rec(rec, 0, 0);
  return count;
}

struct ScannedStratum {
  std::vector<std::size_t> indices;
  std::int64_t min_period;
  bool operator<(const ScannedStratum& o) const { return min_period < o.min_period; }
};

// Scans every T in [1, lcm] and records each index set {j : a_j | T} of
// size at least two at the first T where it appears.
inline std::vector<ScannedStratum> strata_by_scan(const std::vector<std::int64_t>& a) {
  const std::int64_t l = lcm_all(a);
  std::map<std::vector<std::size_t>, std::int64_t> first;
  for (std::int64_t t = 1; t <= l; ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (t % a[j] == 0) idx.push_back(j);
    }
    if (idx.size() >= 2) first.emplace(idx, t);
  }
  std::vector<ScannedStratum> out;
  for (const auto& [idx, t] : first) out.push_back({idx, t});
  std::sort(out.begin(), out.end());
  return out;
}

// Per stratum (by index set), the number of T in (0, lcm] whose index set
// is exactly that stratum.
inline std::map<std::vector<std::size_t>, std::int64_t> period_counts_by_scan(const std::vector<std::int64_t>& a) {
  const std::int64_t l = lcm_all(a);
  std::map<std::vector<std::size_t>, std::int64_t> out;
  for (std::int64_t t = 1; t <= l; ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (t % a[j] == 0) idx.push_back(j);
    }
    if (idx.size() >= 2) ++out[idx];
  }
  return out;
}

// Sorted vectors of the given length over {2..max}: every tuple in the box,
// kept when non-decreasing. Lexicographic order by construction.
inline std::vector<std::vector<std::int64_t>> multisets_by_filter(std::size_t length, std::int64_t max) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> t(length, 2);
  while (true) {
    if (std::is_sorted(t.begin(), t.end())) out.push_back(t);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (t[i] < max) {
        ++t[i];
        std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), 2);
        break;
      }
      if (i == 0) return out;
    }
  }
}

// Brieskorn signature by exact rational arithmetic over the full box.
inline std::int64_t signature_by_rationals(const std::vector<std::int64_t>& a) {
  std::int64_t sigma = 0;
  std::vector<std::int64_t> x(a.size(), 1);
  while (true) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += Rational(x[j], a[j]);
    // fractional part of s / 2
    const Rational half = s / 2;
    const Rational frac = half - Rational(boost::multiprecision::cpp_int(numerator(half) / denominator(half)));
    if (frac > 0 && frac < Rational(1, 2)) ++sigma;
    if (frac > Rational(1, 2)) --sigma;
    std::size_t i = 0;
    while (i < a.size() && ++x[i] == a[i]) x[i++] = 1;
    if (i == a.size()) return sigma;
  }
}

}  // namespace oracle
