#include "brieskorn/homology.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>

#include "brieskorn/errors.hpp"
#include "brieskorn/linkmodel.hpp"

namespace brieskorn {

Integer middle_betti(std::span<const std::int64_t> a) {
  const std::size_t s = a.size();
  ensure(s >= 1 && s <= 24, ErrorKind::PreconditionFailed, "middle_betti needs 1..24 exponents");
  Integer total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
    Integer product = 1;
    Integer lcm = 1;
    std::size_t t = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) continue;
      ++t;
      product *= a[i];
      lcm = boost::multiprecision::lcm(lcm, Integer(a[i]));
    }
    ensure(product % lcm == 0, ErrorKind::InternalInconsistency, "inexact division by lcm");
    const Integer term = product / lcm;
    if ((s - t) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  ensure(total >= 0, ErrorKind::InternalInconsistency,
         "negative middle Betti number " + total.str() + " for (" + join_integers(a) + ")");
  return total;
}

QuotientBetti quotient_betti(std::span<const std::int64_t> a) {
  ensure(a.size() >= 2, ErrorKind::PreconditionFailed, "quotient_betti needs at least 2 exponents");
  // Rational Gysin sequence of the S^1 orbibundle L -> L/S^1: the quotient
  // looks like CP^q except in the middle degree, which absorbs the middle
  // homology of the link.
  const std::int64_t kappa = to_int64(middle_betti(a));
  const int q = static_cast<int>(a.size()) - 2;
  QuotientBetti out;
  out.ranks.assign(static_cast<std::size_t>(2 * q + 1), 0);
  for (int i = 0; i <= 2 * q; i += 2) out.ranks[static_cast<std::size_t>(i)] = 1;
  if (q % 2 == 0) {
    out.ranks[static_cast<std::size_t>(q)] += kappa;
  } else {
    out.ranks[static_cast<std::size_t>(q)] = kappa;
  }
  for (std::size_t i = 0; i < out.ranks.size(); ++i) {
    out.chi += (i % 2 == 0) ? out.ranks[i] : -out.ranks[i];
  }
  return out;
}

std::int64_t chi_s1(std::span<const std::int64_t> a) { return quotient_betti(a).chi; }

std::vector<std::vector<std::size_t>> gcd_components(std::span<const std::int64_t> a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::gcd(a[i], a[j]) > 1) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = find(i);
    if (slot[root] == n) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(i);
  }
  return components;
}

namespace {

struct GraphSummary {
  std::size_t isolated = 0;
  bool odd_even_component = false;  // odd size >= 3, pairwise gcd exactly 2
};

GraphSummary summarize(std::span<const std::int64_t> a) {
  GraphSummary out;
  for (const auto& component : gcd_components(a)) {
    if (component.size() == 1) {
      ++out.isolated;
      continue;
    }
    if (component.size() % 2 == 0) continue;
    bool all_two = true;
    for (std::size_t i = 0; i < component.size() && all_two; ++i) {
      for (std::size_t j = i + 1; j < component.size(); ++j) {
        if (std::gcd(a[component[i]], a[component[j]]) != 2) {
          all_two = false;
          break;
        }
      }
    }
    if (all_two) out.odd_even_component = true;
  }
  return out;
}

void require_dim5(std::span<const std::int64_t> a) {
  ensure(a.size() >= 4, ErrorKind::DimensionTooLow,
         "graph classifiers need at least 4 exponents (link dimension >= 5)");
}

}  // namespace

bool is_rational_homology_sphere(std::span<const std::int64_t> a) {
  require_dim5(a);
  const auto g = summarize(a);
  return g.isolated >= 1 || g.odd_even_component;
}

bool is_homotopy_sphere(std::span<const std::int64_t> a) {
  require_dim5(a);
  const auto g = summarize(a);
  return g.isolated >= 2 || (g.isolated == 1 && g.odd_even_component);
}

std::string Dim5Type::label() const {
  switch (tag) {
    case Tag::Sphere5: return "S5";
    case Tag::ConnectedSumS2xS3: return std::to_string(count) + "(S2xS3)";
    case Tag::RationalHomologySphere: return name.empty() ? "Unknown" : name;
    case Tag::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

Dim5Type Dim5Type::from_label(const std::string& label, std::int64_t middle_rank) {
  Dim5Type out;
  out.middle_rank = middle_rank;
  if (label == "S5") {
    out.tag = Tag::Sphere5;
  } else if (label == "Unclassified") {
    out.tag = Tag::Unclassified;
  } else if (label.size() > 7 && label.ends_with("(S2xS3)")) {
    out.tag = Tag::ConnectedSumS2xS3;
    out.count = std::stoll(label.substr(0, label.size() - 7));
  } else if (label == "M2" || label == "M3" || label == "M5" || label == "2M3" || label == "4M2" ||
             label == "Unknown") {
    out.tag = Tag::RationalHomologySphere;
    out.name = label;
  } else {
    raise(ErrorKind::Schema, "unknown dimension-5 type label '" + label + "'");
  }
  return out;
}

Dim5Type diffeo_type_dim5(std::span<const std::int64_t> a) {
  ensure(a.size() == 4, ErrorKind::DimensionMismatch, "dimension-5 classification needs exactly 4 exponents");
  Dim5Type out;
  out.middle_rank = to_int64(middle_betti(a));
  if (is_homotopy_sphere(a)) {
    out.tag = Dim5Type::Tag::Sphere5;
    return out;
  }
  std::array<std::int64_t, 4> s{a[0], a[1], a[2], a[3]};
  std::sort(s.begin(), s.end());
  if (s[0] == 2 && s[1] == 2) {
    out.tag = Dim5Type::Tag::ConnectedSumS2xS3;
    out.count = std::gcd(s[2], s[3]) - 1;
    ensure(out.count == out.middle_rank, ErrorKind::InternalInconsistency,
           "connected-sum count disagrees with the middle Betti number");
    return out;
  }
  const auto family = [&](std::int64_t third, std::int64_t base, std::int64_t step) {
    return s[0] == 2 && s[1] == 3 && s[2] == third && s[3] >= base && (s[3] - base) % step == 0;
  };
  std::string name;
  if (family(3, 3, 6)) {
    name = "M2";
  } else if (family(4, 4, 12) || family(4, 8, 12)) {
    name = "M3";
  } else if (family(5, 6, 30) || family(5, 12, 30) || family(5, 18, 30) || family(5, 24, 30)) {
    name = "M5";
  } else if (family(5, 10, 30) || family(5, 20, 30)) {
    name = "2M3";
  } else if (family(5, 15, 30)) {
    name = "4M2";
  }
  if (!name.empty()) {
    out.tag = Dim5Type::Tag::RationalHomologySphere;
    out.name = name;
  } else if (is_rational_homology_sphere(a)) {
    out.tag = Dim5Type::Tag::RationalHomologySphere;
    out.name = "Unknown";
  } else {
    out.tag = Dim5Type::Tag::Unclassified;
  }
  return out;
}

namespace {

struct SignedCount {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
};

// Counts x in the open box with x_0 fixed; residues are taken mod 2L where
// L = lcm(a), so that sum x_j/a_j mod 2 in (0,1) means residue in (0, L).
SignedCount count_slice(std::span<const std::int64_t> a, std::span<const std::int64_t> unit,
                        std::int64_t two_l, std::int64_t x0) {
  SignedCount out;
  const std::int64_t l = two_l / 2;
  const std::int64_t base0 = (x0 * unit[0]) % two_l;
  for (std::int64_t x1 = 1; x1 < a[1]; ++x1) {
    const std::int64_t base1 = (base0 + x1 * unit[1]) % two_l;
    for (std::int64_t x2 = 1; x2 < a[2]; ++x2) {
      const std::int64_t base2 = (base1 + x2 * unit[2]) % two_l;
      for (std::int64_t x3 = 1; x3 < a[3]; ++x3) {
        std::int64_t r = (base2 + x3 * unit[3]) % two_l;
        for (std::int64_t x4 = 1; x4 < a[4]; ++x4) {
          r += unit[4];
          if (r >= two_l) r -= two_l;
          if (r > 0 && r < l) {
            ++out.positive;
          } else if (r > l) {
            ++out.negative;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

Signature7 milnor_signature_dim7(std::span<const std::int64_t> a, std::int64_t budget, unsigned jobs) {
  ensure(a.size() == 5, ErrorKind::NotDim7, "the dimension-7 signature needs exactly 5 exponents");
  Integer points = 1;
  for (const auto aj : a) {
    ensure(aj >= 2, ErrorKind::InvalidExponent, "exponent below 2");
    points *= aj;
  }
  ensure(points <= budget, ErrorKind::BudgetExceeded,
         "lattice box has " + points.str() + " points, budget is " + std::to_string(budget));
  const std::int64_t l = lcm_of(a);
  const std::int64_t two_l = checked_mul(2, l);
  std::vector<std::int64_t> unit;
  for (const auto aj : a) unit.push_back(l / aj);
  checked_mul(two_l, 4);  // partial sums stay below 4L before reduction

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(a[0] - 1)));
  std::vector<std::future<SignedCount>> shards;
  for (unsigned shard = 0; shard < jobs; ++shard) {
    shards.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [=, &unit] {
      SignedCount partial;
      for (std::int64_t x0 = 1 + shard; x0 < a[0]; x0 += jobs) {
        const auto c = count_slice(a, unit, two_l, x0);
        partial.positive += c.positive;
        partial.negative += c.negative;
      }
      return partial;
    }));
  }
  SignedCount total;
  for (auto& f : shards) {
    const auto c = f.get();
    total.positive += c.positive;
    total.negative += c.negative;
  }
  Signature7 out;
  out.sigma = total.positive - total.negative;
  if (is_homotopy_sphere(a)) {
    ensure(out.sigma % 8 == 0, ErrorKind::InternalInconsistency,
           "signature of a homotopy sphere filling is not divisible by 8");
    out.exotic_class = ((out.sigma / 8) % 28 + 28) % 28;
  }
  return out;
}

}  // namespace brieskorn
