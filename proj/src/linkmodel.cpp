#include "brieskorn/linkmodel.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto token = trim(text.substr(start, end - start));
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      raise(ErrorKind::InvalidExponent, "cannot parse '" + std::string(token) + "' as an integer in '" +
                                            std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_integers(std::span<const std::int64_t> values, char separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  ensure(entries_.size() >= 3, ErrorKind::InvalidExponent,
         "an exponent vector needs at least 3 entries, got " + std::to_string(entries_.size()));
  ensure(entries_.size() <= kMaxEntries, ErrorKind::InvalidExponent,
         "at most " + std::to_string(kMaxEntries) + " exponents are supported");
  for (const auto a : entries_) {
    ensure(a >= 2, ErrorKind::InvalidExponent, "exponent " + std::to_string(a) + " is below 2");
  }
}

ExponentVector ExponentVector::parse(std::string_view text) {
  return ExponentVector(parse_integer_list(text));
}

ExponentVector ExponentVector::canonical() const {
  auto sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  return ExponentVector(std::move(sorted));
}

bool ExponentVector::is_canonical() const { return std::is_sorted(entries_.begin(), entries_.end()); }

std::string ExponentVector::to_string() const { return join_integers(entries_); }

LinkProfile make_link(const ExponentVector& a) {
  LinkProfile link{a, 0, {}, 0, Rational(0), {}};
  link.degree = lcm_of(a.entries());
  link.weights.reserve(a.size());
  for (const auto aj : a.entries()) {
    link.weights.push_back(link.degree / aj);
    link.recip_sum += Rational(1, aj);
  }
  link.link_dim = 2 * static_cast<int>(a.size() - 1) - 1;
  link.gcd_graph.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (std::gcd(a[i], a[j]) > 1) {
        link.gcd_graph[i].push_back(j);
        link.gcd_graph[j].push_back(i);
      }
    }
  }
  return link;
}

IndexMask index_set_at(const LinkProfile& link, std::int64_t period) {
  IndexMask mask = 0;
  const auto a = link.exponents.entries();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (period % a[j] == 0) mask |= IndexMask{1} << j;
  }
  return mask;
}

std::vector<std::size_t> mask_indices(IndexMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1U) out.push_back(j);
  }
  return out;
}

std::vector<Stratum> strata(const LinkProfile& link) {
  const auto a = link.exponents.entries();
  const auto count = a.size();
  std::vector<Stratum> out;
  // A subset is a stratum exactly when it equals I_T for its own lcm T.
  for (IndexMask mask = 1; mask < (IndexMask{1} << count); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::int64_t period = 1;
    for (const auto j : mask_indices(mask)) period = lcm_checked(period, a[j]);
    if (index_set_at(link, period) != mask) continue;
    Stratum s;
    s.mask = mask;
    s.indices = mask_indices(mask);
    for (const auto j : s.indices) s.sub_exponents.push_back(a[j]);
    s.min_period = period;
    s.stratum_dim = 2 * static_cast<int>(s.indices.size()) - 3;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const Stratum& x, const Stratum& y) { return x.min_period < y.min_period; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    ensure(out[i - 1].min_period != out[i].min_period, ErrorKind::InternalInconsistency,
           "two strata share the minimal period " + std::to_string(out[i].min_period));
  }
  return out;
}

PeriodSpectrum period_spectrum(const LinkProfile& link) {
  PeriodSpectrum spectrum;
  spectrum.strata = strata(link);
  spectrum.principal_period = link.degree;
  for (std::size_t s = 0; s < spectrum.strata.size(); ++s) {
    const auto& stratum = spectrum.strata[s];
    for (std::int64_t t = stratum.min_period; t <= link.degree; t += stratum.min_period) {
      if (index_set_at(link, t) == stratum.mask) spectrum.entries.push_back({t, s});
    }
  }
  std::sort(spectrum.entries.begin(), spectrum.entries.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.period < y.period; });
  return spectrum;
}

std::vector<Integer> sylvester_sequence(std::size_t count) {
  std::vector<Integer> c;
  c.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    c.push_back(i == 0 ? Integer(2) : c.back() * (c.back() - 1) + 1);
  }
  return c;
}

std::vector<ExponentVector> sylvester_links(int n, std::int64_t a_max) {
  ensure(n >= 0, ErrorKind::PreconditionFailed, "n must be non-negative");
  const auto c = sylvester_sequence(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> base{2};
  for (const auto& ci : c) base.push_back(to_int64(2 * ci));
  std::vector<ExponentVector> out;
  for (std::int64_t a = 2; a <= a_max; ++a) {
    const bool coprime = std::all_of(c.begin(), c.end(), [a](const Integer& ci) {
      return boost::multiprecision::gcd(ci, Integer(a)) == 1;
    });
    if (!coprime) continue;
    auto entries = base;
    entries.push_back(a);
    out.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace brieskorn
