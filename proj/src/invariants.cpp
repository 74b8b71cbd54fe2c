#include "brieskorn/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "brieskorn/errors.hpp"

namespace brieskorn {

std::int64_t phi(std::int64_t period, std::span<const std::int64_t> exclusions, std::int64_t principal) {
  ensure(period >= 1 && principal % period == 0, ErrorKind::PreconditionFailed,
         "period must divide the principal period");
  if (period == principal) return 1;
  std::int64_t count = 0;
  for (std::int64_t t = period; t < principal; t += period) {
    const bool excluded =
        std::any_of(exclusions.begin(), exclusions.end(), [t](std::int64_t e) { return t % e == 0; });
    if (!excluded) ++count;
  }
  return count;
}

namespace {

std::int64_t maslov_formula(const LinkProfile& link, IndexMask mask, std::int64_t p) {
  const auto a = link.exponents.entries();
  std::int64_t mu = checked_mul(-2, p);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (mask & (IndexMask{1} << j)) {
      mu = checked_add(mu, 2 * (p / a[j]));
    } else {
      mu = checked_add(mu, 2 * (p / a[j]) + 1);
    }
  }
  return mu;
}

std::int64_t lcm_over(const LinkProfile& link, IndexMask mask) {
  std::int64_t t = 1;
  for (const auto j : mask_indices(mask)) t = lcm_checked(t, link.exponents[j]);
  return t;
}

IndexReport make_report(const LinkProfile& link, IndexMask mask, std::int64_t period, std::int64_t cover) {
  IndexReport r;
  r.period = period;
  r.cover = cover;
  r.maslov = maslov_formula(link, mask, period);
  r.stratum_dim = 2 * std::popcount(mask) - 3;
  r.shift = r.maslov - (r.stratum_dim - 1) / 2;
  return r;
}

}  // namespace

IndexReport maslov_index(const LinkProfile& link, std::int64_t period, std::int64_t cover) {
  ensure(cover >= 1, ErrorKind::PreconditionFailed, "cover must be at least 1");
  ensure(period >= 1, ErrorKind::PreconditionFailed, "period must be positive");
  const IndexMask mask = index_set_at(link, period);
  ensure(std::popcount(mask) >= 2 && lcm_over(link, mask) == period, ErrorKind::PreconditionFailed,
         std::to_string(period) + " is not the minimal period of a stratum");
  const std::int64_t total = checked_mul(period, cover);
  if (index_set_at(link, total) != mask) {
    raise(ErrorKind::NotMorseBottCover, "the " + std::to_string(cover) + "-fold cover of period " +
                                            std::to_string(period) + " lies in a larger stratum");
  }
  return make_report(link, mask, total, cover);
}

IndexReport index_at_period(const LinkProfile& link, std::int64_t period) {
  ensure(period >= 1, ErrorKind::PreconditionFailed, "period must be positive");
  const IndexMask mask = index_set_at(link, period);
  ensure(std::popcount(mask) >= 2, ErrorKind::PreconditionFailed,
         std::to_string(period) + " is not a critical period");
  return make_report(link, mask, period, period / lcm_over(link, mask));
}

std::int64_t principal_index(const LinkProfile& link) {
  std::int64_t weight_sum = 0;
  for (const auto w : link.weights) weight_sum = checked_add(weight_sum, w);
  return checked_mul(2, weight_sum - link.degree);
}

std::vector<std::int64_t> stratum_frequencies(const LinkProfile& link, std::span<const Stratum> strata) {
  std::vector<std::int64_t> freq(strata.size(), 0);
  for (std::size_t i = strata.size(); i-- > 0;) {
    std::int64_t count = link.degree / strata[i].min_period;
    for (std::size_t j = i + 1; j < strata.size(); ++j) {
      if ((strata[j].mask & strata[i].mask) == strata[i].mask) count -= freq[j];
    }
    ensure(count >= 0, ErrorKind::InternalInconsistency, "negative stratum frequency");
    freq[i] = count;
  }
  return freq;
}

MeanEuler mean_euler(const LinkProfile& link) {
  MeanEuler out;
  out.mu_p = principal_index(link);
  ensure(out.mu_p != 0, ErrorKind::ZeroPrincipalIndex,
         "mu_P = 0 for (" + link.exponents.to_string() + "); the mean Euler characteristic is undefined");
  const auto all = strata(link);
  const auto freq = stratum_frequencies(link, all);
  for (std::size_t i = 0; i < all.size(); ++i) {
    MeanEulerTerm term;
    term.stratum = all[i];
    term.phi = freq[i];
    const auto index = maslov_index(link, all[i].min_period, 1);
    term.maslov = index.maslov;
    term.sign = (index.shift % 2 == 0) ? 1 : -1;
    term.chi = chi_s1(all[i].sub_exponents);
    out.numerator += Integer(term.sign) * term.phi * term.chi;
    out.terms.push_back(std::move(term));
  }
  out.value = Rational(out.numerator, Integer(std::abs(out.mu_p)));
  return out;
}

namespace {

struct Seed {
  std::int64_t period = 0;
  std::size_t stratum = 0;
  std::int64_t shift = 0;
};

// Critical periods in (0, lcm] with their shifts. Every later block of length
// lcm repeats these with periods + b*lcm and shifts + b*mu_P.
struct BlockZero {
  std::vector<Stratum> strata;
  std::vector<QuotientBetti> betti;
  std::vector<Seed> seeds;
  std::int64_t mu_p = 0;
  std::int64_t principal = 0;
};

BlockZero block_zero(const LinkProfile& link) {
  BlockZero z;
  z.mu_p = principal_index(link);
  z.principal = link.degree;
  ensure(z.mu_p != 0, ErrorKind::ZeroPrincipalIndex,
         "mu_P = 0: every block of the E^1-page lands in the same degrees");
  z.strata = strata(link);
  for (std::size_t s = 0; s < z.strata.size(); ++s) {
    const auto& st = z.strata[s];
    z.betti.push_back(quotient_betti(st.sub_exponents));
    for (std::int64_t t = st.min_period; t <= link.degree; t += st.min_period) {
      if (index_set_at(link, t) != st.mask) continue;
      z.seeds.push_back({t, s, make_report(link, st.mask, t, t / st.min_period).shift});
    }
  }
  std::sort(z.seeds.begin(), z.seeds.end(), [](const Seed& x, const Seed& y) { return x.period < y.period; });
  return z;
}

struct Aggregate {
  std::int64_t lo = 0;  // first tracked degree
  std::vector<std::int64_t> total;
  std::vector<std::int64_t> min_period;
  std::vector<std::int64_t> max_period;
  std::vector<E1Column> columns;
};

// Accumulates E^1 entries with total degree in [lo, hi]. Columns touching
// [keep_lo, hi] are retained when `retain` is set.
Aggregate aggregate(const LinkProfile& link, const BlockZero& z, std::int64_t lo, std::int64_t hi,
                    std::int64_t keep_lo, bool retain) {
  Aggregate agg;
  agg.lo = lo;
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  agg.total.assign(width, 0);
  agg.min_period.assign(width, std::numeric_limits<std::int64_t>::max());
  agg.max_period.assign(width, std::numeric_limits<std::int64_t>::min());
  const std::int64_t mu = z.mu_p;
  for (const auto& seed : z.seeds) {
    const auto& betti = z.betti[seed.stratum].ranks;
    const auto top = static_cast<std::int64_t>(betti.size()) - 1;
    std::int64_t b_first = 0;
    std::int64_t b_last = -1;
    if (mu > 0) {
      b_first = std::max<std::int64_t>(0, ceil_div(lo - seed.shift - top, mu));
      b_last = floor_div(hi - seed.shift, mu);
    } else {
      b_first = std::max<std::int64_t>(0, ceil_div(seed.shift - hi, -mu));
      b_last = floor_div(seed.shift + top - lo, -mu);
    }
    for (std::int64_t b = b_first; b <= b_last; ++b) {
      const std::int64_t shift = seed.shift + b * mu;
      const std::int64_t period = checked_add(seed.period, checked_mul(b, z.principal));
      bool touches_kept = false;
      for (std::int64_t i = 0; i <= top; ++i) {
        const std::int64_t k = shift + i;
        if (betti[static_cast<std::size_t>(i)] == 0 || k < lo || k > hi) continue;
        const auto slot = static_cast<std::size_t>(k - lo);
        agg.total[slot] += betti[static_cast<std::size_t>(i)];
        agg.min_period[slot] = std::min(agg.min_period[slot], period);
        agg.max_period[slot] = std::max(agg.max_period[slot], period);
        if (k >= keep_lo) touches_kept = true;
      }
      if (retain && touches_kept) {
        const auto& st = z.strata[seed.stratum];
        E1Column col;
        col.period = period;
        col.mask = st.mask;
        col.sub_exponents = st.sub_exponents;
        col.index = index_at_period(link, period);
        ensure(col.index.shift == shift, ErrorKind::InternalInconsistency,
               "shift does not advance by mu_P per principal period");
        col.betti = betti;
        agg.columns.push_back(std::move(col));
      }
    }
  }
  std::sort(agg.columns.begin(), agg.columns.end(),
            [](const E1Column& x, const E1Column& y) { return x.period < y.period; });
  return agg;
}

// Lacunarity over entries with degree in [from, agg_hi], comparing against
// the tracked degree below.
bool lacunary_over(const Aggregate& agg, std::int64_t from) {
  const auto hi = agg.lo + static_cast<std::int64_t>(agg.total.size()) - 1;
  for (std::int64_t k = std::max(from, agg.lo + 1); k <= hi; ++k) {
    const auto here = static_cast<std::size_t>(k - agg.lo);
    const auto below = here - 1;
    if (agg.total[here] == 0 || agg.total[below] == 0) continue;
    if (agg.min_period[below] < agg.max_period[here]) return false;
  }
  return true;
}

GradedRanks ranks_from(const Aggregate& agg, const BlockZero& z, std::int64_t k_lo, std::int64_t k_hi,
                       bool lacunary) {
  GradedRanks out;
  out.k_lo = k_lo;
  out.k_hi = k_hi;
  out.mu_p = z.mu_p;
  out.period_action = z.principal;
  out.lacunary = lacunary;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const auto r = agg.total[static_cast<std::size_t>(k - agg.lo)];
    if (r != 0) out.ranks[k] = r;
  }
  return out;
}

void check_window(std::int64_t k_lo, std::int64_t k_hi) {
  ensure(k_lo <= k_hi, ErrorKind::PreconditionFailed, "empty degree window");
  ensure(k_hi - k_lo <= 100'000'000, ErrorKind::BudgetExceeded, "degree window too wide");
}

}  // namespace

E1Page e1_page(const LinkProfile& link, std::int64_t k_lo, std::int64_t k_hi) {
  check_window(k_lo, k_hi);
  const auto z = block_zero(link);
  auto agg = aggregate(link, z, k_lo - 1, k_hi, k_lo, true);
  E1Page page;
  page.totals = ranks_from(agg, z, k_lo, k_hi, lacunary_over(agg, k_lo));
  page.columns = std::move(agg.columns);
  return page;
}

GradedRanks sh_plus_ranks(const LinkProfile& link, std::int64_t k_lo, std::int64_t k_hi) {
  check_window(k_lo, k_hi);
  const auto z = block_zero(link);
  // Differentials leave degree k towards k-1 and arrive from k+1, so the
  // check covers one degree on either side of the window.
  const auto agg = aggregate(link, z, k_lo - 1, k_hi + 1, k_lo, false);
  return ranks_from(agg, z, k_lo, k_hi, lacunary_over(agg, k_lo));
}

MeanEuler mean_euler_from_ranks(const LinkProfile& link, bool require_lacunary) {
  const auto z = block_zero(link);
  const std::int64_t mu = z.mu_p;
  std::int64_t k_lo = 0;
  if (mu > 0) {
    std::int64_t top = std::numeric_limits<std::int64_t>::min();
    for (const auto& seed : z.seeds) {
      top = std::max(top, seed.shift + static_cast<std::int64_t>(z.betti[seed.stratum].ranks.size()) - 1);
    }
    k_lo = top - mu + 1;
  } else {
    std::int64_t bottom = std::numeric_limits<std::int64_t>::max();
    for (const auto& seed : z.seeds) bottom = std::min(bottom, seed.shift);
    k_lo = bottom;
  }
  const std::int64_t k_hi = k_lo + std::abs(mu) - 1;
  check_window(k_lo, k_hi);
  const auto agg = aggregate(link, z, k_lo - 1, k_hi + 1, k_lo, false);
  if (require_lacunary && !lacunary_over(agg, k_lo)) {
    raise(ErrorKind::NotLacunary, "E^1-page of (" + link.exponents.to_string() +
                                      ") is not lacunary over the periodic window");
  }
  MeanEuler out;
  out.mu_p = mu;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const auto r = agg.total[static_cast<std::size_t>(k - agg.lo)];
    out.numerator += (k % 2 == 0) ? Integer(r) : Integer(-r);
  }
  out.value = Rational(out.numerator, Integer(std::abs(mu)));
  return out;
}

}  // namespace brieskorn
