#pragma once

// Exponent vectors, derived link data and the Morse-Bott stratification of
// the Reeb flow on a Brieskorn-Pham link L(a_0, ..., a_n).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brieskorn/arith.hpp"

namespace brieskorn {

/// Exponents of z_0^{a_0} + ... + z_n^{a_n}, in the caller's slot order.
/// Every entry is at least 2 and there are at least 3 entries.
class ExponentVector {
 public:
  static constexpr std::size_t kMaxEntries = 20;

  explicit ExponentVector(std::vector<std::int64_t> entries);

  /// Parses "2,3,4,16" (whitespace around entries is ignored).
  static ExponentVector parse(std::string_view text);

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  /// Sorted non-decreasing copy; used as the deduplication key.
  ExponentVector canonical() const;
  bool is_canonical() const;

  std::string to_string() const;

  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Parses a comma separated list of integers without applying the
/// ExponentVector invariants (sub-links may have fewer than three entries).
std::vector<std::int64_t> parse_integer_list(std::string_view text);

std::string join_integers(std::span<const std::int64_t> values, char separator = ',');

/// Bitmask over exponent slots; bit j set means slot j is in the subset.
using IndexMask = std::uint32_t;

struct LinkProfile {
  ExponentVector exponents;
  std::int64_t degree = 0;             // lcm of the exponents
  std::vector<std::int64_t> weights;   // degree / a_j
  int link_dim = 0;                    // 2n - 1
  Rational recip_sum;                  // sum of 1/a_j
  std::vector<std::vector<std::size_t>> gcd_graph;  // edge i-j iff gcd(a_i, a_j) > 1
};

LinkProfile make_link(const ExponentVector& a);

/// One Morse-Bott family of periodic Reeb orbits: the sub-link
/// K(I) = L({a_j}_{j in I}) swept out by orbits of minimal period
/// lcm_{j in I} a_j.
struct Stratum {
  IndexMask mask = 0;
  std::vector<std::size_t> indices;
  std::vector<std::int64_t> sub_exponents;
  std::int64_t min_period = 0;
  int stratum_dim = 0;  // 2|I| - 3

  bool is_principal(std::size_t exponent_count) const {
    return indices.size() == exponent_count;
  }
};

/// I_T = { j : a_j divides T }.
IndexMask index_set_at(const LinkProfile& link, std::int64_t period);

std::vector<std::size_t> mask_indices(IndexMask mask);

/// All strata, sorted by minimal period ascending; the principal stratum
/// comes last.
std::vector<Stratum> strata(const LinkProfile& link);

struct SpectrumEntry {
  std::int64_t period = 0;
  std::size_t stratum = 0;  // index into PeriodSpectrum::strata
};

struct PeriodSpectrum {
  std::vector<Stratum> strata;
  std::vector<SpectrumEntry> entries;  // strictly increasing periods
  std::int64_t principal_period = 0;
};

/// Every period T <= lcm(a) with |I_T| >= 2, labelled by the stratum of I_T.
PeriodSpectrum period_spectrum(const LinkProfile& link);

/// c_0 = 2, c_i = c_{i-1}(c_{i-1} - 1) + 1, as exact integers.
std::vector<Integer> sylvester_sequence(std::size_t count);

/// (2, 2c_0, ..., 2c_n, a) for every 2 <= a <= a_max coprime to all c_i.
std::vector<ExponentVector> sylvester_links(int n, std::int64_t a_max);

}  // namespace brieskorn
