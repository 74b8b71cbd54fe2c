#pragma once

// Sasaki-Einstein existence tests, moduli counts via weighted monomials,
// and the Sylvester-sequence family.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "brieskorn/arith.hpp"
#include "brieskorn/linkmodel.hpp"

namespace brieskorn {

enum class TriState { Yes, No, NotApplicable };
enum class Verdict { Exists, Obstructed, Unknown };

std::string_view to_string(TriState value);
std::string_view to_string(Verdict value);
TriState parse_tristate(std::string_view text);
Verdict parse_verdict(std::string_view text);

struct SEReport {
  bool positivity = false;
  bool sufficient1 = false;
  bool sufficient2 = false;
  TriState coprime_iff = TriState::NotApplicable;
  bool lichnerowicz_obstructed = false;
  bool literature = false;  // existence known from outside the numerical criteria
  Verdict verdict = Verdict::Unknown;

  bool operator==(const SEReport&) const = default;
};

/// b_i = gcd(lcm_{j != i} a_j, a_i).
std::vector<std::int64_t> orbifold_multiplicities(const ExponentVector& a);

/// The two sufficient inequalities, compared exactly.
std::pair<bool, bool> se_sufficient(const LinkProfile& link);

/// Criterion for pairwise coprime exponents; NotApplicable otherwise.
TriState se_coprime_iff(const LinkProfile& link);

/// |w| - d >= n min_i w_i. Equality is included: it forces a holomorphic
/// function of charge one, which needs a linear term that a Brieskorn-Pham
/// polynomial with all exponents >= 2 does not have.
bool lichnerowicz_obstructed(const LinkProfile& link);

/// Links known to carry SE metrics although no numerical criterion above
/// applies: the quadrics (2,...,2) and (2,2,2,3).
bool se_known_from_literature(const ExponentVector& a);

SEReport se_status(const LinkProfile& link);

/// #{ b in Z_{>=0}^{n+1} : sum b_j w_j = m }.
Integer count_weighted_monomials(std::span<const std::int64_t> weights, std::int64_t m);

/// #{ b : 0 <= b_j < a_j, sum b_j w_j = d }.
Integer count_perturbation_monomials(const LinkProfile& link);

struct ModuliReport {
  std::int64_t h0_degree_d = 0;
  std::int64_t h0_weights_sum = 0;
  std::int64_t kuranishi_dim = 0;
  std::int64_t perturbation_count = 0;
  bool applicable = false;  // at most one exponent equal to 2

  bool operator==(const ModuliReport&) const = default;
};

ModuliReport moduli_dimension(const LinkProfile& link);

/// Numerator of the mean Euler characteristic of (2, 2c_0, ..., 2c_n, a)
/// assembled from the closed-form stratum Euler characteristics and orbit
/// frequencies of the Sylvester family.
Integer sylvester_numerator(int n, std::int64_t a);

/// The same numerator computed by the general stratification machinery,
/// i.e. mean_euler(L).numerator.
Integer sylvester_numerator_general(int n, std::int64_t a);

}  // namespace brieskorn
