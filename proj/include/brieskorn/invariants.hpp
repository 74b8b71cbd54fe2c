#pragma once

// Contact invariants of a Brieskorn-Pham link computed from its Reeb flow:
// cover counts, Robbin-Salamon indices, the mean Euler characteristic and
// the E^1-page of the Morse-Bott spectral sequence for positive
// S^1-equivariant symplectic homology.
//
// Periods are measured in units where the principal orbit has period
// lcm_j a_j.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "brieskorn/arith.hpp"
#include "brieskorn/homology.hpp"
#include "brieskorn/linkmodel.hpp"

namespace brieskorn {

struct IndexReport {
  std::int64_t period = 0;  // N * T
  std::int64_t cover = 1;   // N
  std::int64_t maslov = 0;  // Robbin-Salamon index of the N-fold cover
  int stratum_dim = 0;
  std::int64_t shift = 0;   // maslov - (stratum_dim - 1) / 2
};

/// Number of a >= 1 with a*period < principal and a*period not a multiple
/// of any excluded period.
std::int64_t phi(std::int64_t period, std::span<const std::int64_t> exclusions, std::int64_t principal);

/// Index of the N-fold cover of the stratum with minimal period `period`.
/// Throws NotMorseBottCover when the cover lies in a larger stratum.
IndexReport maslov_index(const LinkProfile& link, std::int64_t period, std::int64_t cover);

/// Index of the orbits at an arbitrary critical period, resolving I_T there.
IndexReport index_at_period(const LinkProfile& link, std::int64_t period);

/// mu_P = 2 lcm(a) (sum 1/a_j - 1).
std::int64_t principal_index(const LinkProfile& link);

/// One summand of the mean Euler characteristic.
struct MeanEulerTerm {
  Stratum stratum;
  std::int64_t phi = 0;
  std::int64_t maslov = 0;
  int sign = 1;
  std::int64_t chi = 0;
};

struct MeanEuler {
  Rational value;
  Integer numerator;  // signed sum before division by |mu_P|
  std::int64_t mu_p = 0;
  std::vector<MeanEulerTerm> terms;
};

/// Exact count of critical periods in (0, lcm] carrying each stratum,
/// obtained by Moebius inversion over the stratum poset (index matches
/// `strata(link)`).
std::vector<std::int64_t> stratum_frequencies(const LinkProfile& link, std::span<const Stratum> strata);

MeanEuler mean_euler(const LinkProfile& link);

/// Integer ranks per degree over an inclusive window.
struct GradedRanks {
  std::int64_t k_lo = 0;
  std::int64_t k_hi = -1;
  std::map<std::int64_t, std::int64_t> ranks;  // only non-zero degrees are stored
  std::int64_t mu_p = 0;
  std::int64_t period_action = 0;  // T_P
  bool lacunary = false;

  std::int64_t at(std::int64_t k) const {
    const auto it = ranks.find(k);
    return it == ranks.end() ? 0 : it->second;
  }
};

struct E1Column {
  std::int64_t period = 0;
  IndexMask mask = 0;
  std::vector<std::int64_t> sub_exponents;
  IndexReport index;
  std::vector<std::int64_t> betti;  // quotient Betti numbers placed at degree shift + i
};

struct E1Page {
  GradedRanks totals;
  std::vector<E1Column> columns;  // columns meeting the window, by period
};

/// E^1-page restricted to total degrees [k_lo, k_hi]. The lacunary flag
/// reports the lacunarity condition for entries in the window, checked
/// against the earlier columns one degree lower.
E1Page e1_page(const LinkProfile& link, std::int64_t k_lo, std::int64_t k_hi);

/// Ranks of SH^{+,S^1}_k for k in [k_lo, k_hi] when the spectral sequence is
/// lacunary there; otherwise E^1 upper bounds with lacunary = false.
GradedRanks sh_plus_ranks(const LinkProfile& link, std::int64_t k_lo, std::int64_t k_hi);

/// Mean Euler characteristic read off one degree period of the E^1-page in
/// the range where it is periodic. Differentials preserve Euler
/// characteristics, so E^1 suffices; with require_lacunary the page must also
/// be lacunary there (so that E^1 ranks are the SH ranks), else NotLacunary.
MeanEuler mean_euler_from_ranks(const LinkProfile& link, bool require_lacunary = false);

}  // namespace brieskorn
