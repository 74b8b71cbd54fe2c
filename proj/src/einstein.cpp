#include "brieskorn/einstein.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>

#include "brieskorn/errors.hpp"
#include "brieskorn/invariants.hpp"

namespace brieskorn {

std::string_view to_string(TriState value) {
  switch (value) {
    case TriState::Yes: return "Yes";
    case TriState::No: return "No";
    case TriState::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

std::string_view to_string(Verdict value) {
  switch (value) {
    case Verdict::Exists: return "Exists";
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

TriState parse_tristate(std::string_view text) {
  if (text == "Yes") return TriState::Yes;
  if (text == "No") return TriState::No;
  if (text == "NotApplicable") return TriState::NotApplicable;
  raise(ErrorKind::Schema, "bad tri-state '" + std::string(text) + "'");
}

Verdict parse_verdict(std::string_view text) {
  if (text == "Exists") return Verdict::Exists;
  if (text == "Obstructed") return Verdict::Obstructed;
  if (text == "Unknown") return Verdict::Unknown;
  raise(ErrorKind::Schema, "bad verdict '" + std::string(text) + "'");
}

std::vector<std::int64_t> orbifold_multiplicities(const ExponentVector& a) {
  std::vector<std::int64_t> b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t others = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) others = lcm_checked(others, a[j]);
    }
    b.push_back(std::gcd(others, a[i]));
  }
  return b;
}

namespace {

Rational dimension_factor(const LinkProfile& link) {
  const auto n = static_cast<std::int64_t>(link.exponents.size()) - 1;
  return Rational(n, n - 1);
}

bool pairwise_coprime(const ExponentVector& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (std::gcd(a[i], a[j]) != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<bool, bool> se_sufficient(const LinkProfile& link) {
  const auto& a = link.exponents;
  const Rational& sum = link.recip_sum;
  if (sum <= 1) return {false, false};
  const auto [min_it, max_it] = std::minmax_element(a.entries().begin(), a.entries().end());
  const Rational smallest_recip(1, *max_it);
  const Rational largest_recip(1, *min_it);

  const auto b = orbifold_multiplicities(a);
  Rational bound1 = smallest_recip;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i != j) bound1 = std::min(bound1, Rational(1, b[i] * b[j]));
    }
  }
  const Rational factor = dimension_factor(link);
  const bool first = sum < 1 + factor * bound1;
  const bool second = sum < 1 + factor * smallest_recip * largest_recip;
  return {first, second};
}

TriState se_coprime_iff(const LinkProfile& link) {
  const auto& a = link.exponents;
  if (!pairwise_coprime(a)) return TriState::NotApplicable;
  const auto n = static_cast<std::int64_t>(a.size()) - 1;
  const auto a_max = *std::max_element(a.entries().begin(), a.entries().end());
  const Rational& sum = link.recip_sum;
  return (sum > 1 && sum < 1 + Rational(n, a_max)) ? TriState::Yes : TriState::No;
}

bool lichnerowicz_obstructed(const LinkProfile& link) {
  const auto n = static_cast<std::int64_t>(link.exponents.size()) - 1;
  std::int64_t weight_sum = 0;
  for (const auto w : link.weights) weight_sum = checked_add(weight_sum, w);
  const auto w_min = *std::min_element(link.weights.begin(), link.weights.end());
  return weight_sum - link.degree >= checked_mul(n, w_min);
}

bool se_known_from_literature(const ExponentVector& a) {
  const auto c = a.canonical();
  const auto e = c.entries();
  if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 2; })) return true;
  return c == ExponentVector({2, 2, 2, 3});
}

SEReport se_status(const LinkProfile& link) {
  SEReport r;
  r.positivity = link.recip_sum > 1;
  std::tie(r.sufficient1, r.sufficient2) = se_sufficient(link);
  r.coprime_iff = se_coprime_iff(link);
  r.lichnerowicz_obstructed = lichnerowicz_obstructed(link);
  r.literature = se_known_from_literature(link.exponents);
  const bool exists = r.literature || r.sufficient1 || r.sufficient2 || r.coprime_iff == TriState::Yes;
  const bool obstructed = r.lichnerowicz_obstructed || r.coprime_iff == TriState::No;
  ensure(!(exists && obstructed), ErrorKind::InternalInconsistency,
         "(" + link.exponents.to_string() + ") is both SE and obstructed");
  r.verdict = exists ? Verdict::Exists : obstructed ? Verdict::Obstructed : Verdict::Unknown;
  return r;
}

namespace {

// Counts b with sum b_j w_j = m and 0 <= b_j <= cap_j, memoised on
// (slot, remaining). The last slot is solved by divisibility.
class MonomialCounter {
 public:
  MonomialCounter(std::vector<std::int64_t> weights, std::vector<std::int64_t> caps)
      : weights_(std::move(weights)), caps_(std::move(caps)) {}

  Integer count(std::int64_t m) { return count_from(0, m); }

 private:
  Integer count_from(std::size_t slot, std::int64_t remaining) {
    const auto w = weights_[slot];
    const auto cap = caps_[slot];
    if (slot + 1 == weights_.size()) {
      return (remaining % w == 0 && remaining / w <= cap) ? Integer(1) : Integer(0);
    }
    const auto key = std::make_pair(slot, remaining);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    const std::int64_t top = std::min(cap, remaining / w);
    for (std::int64_t b = 0; b <= top; ++b) total += count_from(slot + 1, remaining - b * w);
    memo_.emplace(key, total);
    return total;
  }

  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> caps_;
  std::map<std::pair<std::size_t, std::int64_t>, Integer> memo_;
};

// Largest weights first keeps the branching small; the smallest weight is
// then resolved analytically in the last slot.
MonomialCounter make_counter(std::span<const std::int64_t> weights, std::span<const std::int64_t> caps) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return weights[x] > weights[y]; });
  std::vector<std::int64_t> w;
  std::vector<std::int64_t> c;
  for (const auto i : order) {
    w.push_back(weights[i]);
    c.push_back(caps[i]);
  }
  return MonomialCounter(std::move(w), std::move(c));
}

}  // namespace

Integer count_weighted_monomials(std::span<const std::int64_t> weights, std::int64_t m) {
  ensure(!weights.empty(), ErrorKind::PreconditionFailed, "no weights");
  ensure(m >= 0, ErrorKind::PreconditionFailed, "negative degree");
  for (const auto w : weights) ensure(w >= 1, ErrorKind::PreconditionFailed, "weights must be positive");
  const std::vector<std::int64_t> caps(weights.size(), std::numeric_limits<std::int64_t>::max());
  return make_counter(weights, caps).count(m);
}

Integer count_perturbation_monomials(const LinkProfile& link) {
  std::vector<std::int64_t> caps;
  for (const auto aj : link.exponents.entries()) caps.push_back(aj - 1);
  return make_counter(link.weights, caps).count(link.degree);
}

ModuliReport moduli_dimension(const LinkProfile& link) {
  ModuliReport r;
  const auto twos = std::count(link.exponents.entries().begin(), link.exponents.entries().end(), 2);
  r.applicable = twos <= 1;
  r.h0_degree_d = to_int64(count_weighted_monomials(link.weights, link.degree));
  for (const auto w : link.weights) {
    r.h0_weights_sum = checked_add(r.h0_weights_sum, to_int64(count_weighted_monomials(link.weights, w)));
  }
  r.kuranishi_dim = r.h0_degree_d - r.h0_weights_sum;
  r.perturbation_count = to_int64(count_perturbation_monomials(link));
  ensure(!r.applicable || r.kuranishi_dim >= 0, ErrorKind::InternalInconsistency,
         "negative moduli dimension for (" + link.exponents.to_string() + ")");
  return r;
}

namespace {

ExponentVector sylvester_link(int n, std::int64_t a) {
  ensure(n >= 0, ErrorKind::PreconditionFailed, "n must be non-negative");
  ensure(a >= 2, ErrorKind::PreconditionFailed, "a must be at least 2");
  const auto c = sylvester_sequence(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> entries{2};
  for (const auto& ci : c) {
    ensure(boost::multiprecision::gcd(ci, Integer(a)) == 1, ErrorKind::PreconditionFailed,
           std::to_string(a) + " is not coprime to c = " + ci.str());
    entries.push_back(to_int64(2 * ci));
  }
  entries.push_back(a);
  ExponentVector v(std::move(entries));
  ensure(principal_index(make_link(v)) > 0, ErrorKind::PreconditionFailed,
         "(" + v.to_string() + ") is not positive");
  return v;
}

}  // namespace

Integer sylvester_numerator(int n, std::int64_t a) {
  sylvester_link(n, a);  // validates the preconditions
  const auto c = sylvester_sequence(static_cast<std::size_t>(n) + 1);
  const auto slots = static_cast<std::uint32_t>(n + 1);
  // Closed forms for chi^{S^1} of L(2, 2c_{i_0}, ..., 2c_{i_l}) and of the
  // same sub-link with a appended.
  const auto chi_without_a = [](std::int64_t l) { return l + 2 + (l % 2 == 0 ? 1 : 0); };
  const auto chi_with_a = [](std::int64_t l) { return l + 3; };
  Integer without_a = 0;
  Integer with_a = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << slots); ++mask) {
    const std::int64_t l = std::popcount(mask) - 1;
    Integer frequency = 1;
    for (std::uint32_t j = 0; j < slots; ++j) {
      if (!(mask & (std::uint32_t{1} << j))) frequency *= c[j] - 1;
    }
    without_a += frequency * chi_without_a(l);
    if (l >= 1) with_a += frequency * chi_with_a(l);
  }
  return without_a * (a - 1) + with_a;
}

Integer sylvester_numerator_general(int n, std::int64_t a) {
  return mean_euler(make_link(sylvester_link(n, a))).numerator;
}

}  // namespace brieskorn
