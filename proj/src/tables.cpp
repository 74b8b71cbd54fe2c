#include "brieskorn/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "brieskorn/errors.hpp"
#include "brieskorn/invariants.hpp"
#include "brieskorn/serialize.hpp"

#ifndef BRIESKORN_VERSION
#define BRIESKORN_VERSION "0.0.0"
#endif

namespace brieskorn {

std::string_view version() { return BRIESKORN_VERSION; }

LinkRecord make_record(const ExponentVector& a, const RecordOptions& options) {
  const auto link = make_link(a);
  LinkRecord r(a);
  r.dim = link.link_dim;
  r.degree = link.degree;
  r.weights = link.weights;
  r.recip_sum = link.recip_sum;
  r.mu_p = principal_index(link);
  if (r.mu_p != 0) r.chi_m = mean_euler(link).value;
  r.middle_rank = to_int64(middle_betti(a.entries()));
  if (a.size() >= 4) {
    r.homotopy_sphere = is_homotopy_sphere(a.entries());
    r.rhs = is_rational_homology_sphere(a.entries());
  }
  if (a.size() == 4) r.dim5_type = diffeo_type_dim5(a.entries());
  if (options.sig7 && a.size() == 5) r.sig7 = milnor_signature_dim7(a.entries(), options.budget, options.jobs);
  r.se = se_status(link);
  r.moduli = moduli_dimension(link);
  if (options.sh0 && r.mu_p != 0) r.sh0_rank = sh_plus_ranks(link, 0, 0).at(0);
  return r;
}

LinkRecord permute_record(const LinkRecord& record, const ExponentVector& target) {
  ensure(record.exponents.canonical() == target.canonical(), ErrorKind::PreconditionFailed,
         "(" + target.to_string() + ") is not a permutation of (" + record.exponents.to_string() + ")");
  LinkRecord out = record;
  out.exponents = target;
  for (std::size_t j = 0; j < target.size(); ++j) out.weights[j] = record.degree / target[j];
  return out;
}

// ---------------------------------------------------------------- cache

namespace {

bool covers(const LinkRecord& r, const RecordOptions& options) {
  if (options.sh0 && r.mu_p != 0 && !r.sh0_rank) return false;
  if (options.sig7 && r.exponents.size() == 5 && !r.sig7) return false;
  return true;
}

}  // namespace

RecordCache::RecordCache(std::filesystem::path dir)
    : path_(std::move(dir) / ("brieskorn-" + std::string(version()) + ".jsonl")) {
  std::error_code ec;
  std::filesystem::create_directories(path_.parent_path(), ec);
  ensure(!ec, ErrorKind::Io, "cannot create cache directory " + path_.parent_path().string());
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from an interrupted writer is simply recomputed.
    try {
      auto record = record_from_json_line(line);
      entries_.insert_or_assign(record.exponents.canonical(), std::move(record));
    } catch (const Error&) {
    }
  }
}

std::unique_ptr<RecordCache> RecordCache::from_environment() {
  const char* dir = std::getenv("BRIESKORN_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return nullptr;
  return std::make_unique<RecordCache>(dir);
}

LinkRecord RecordCache::get(const ExponentVector& a, const RecordOptions& options) {
  const auto key = a.canonical();
  RecordOptions wanted = options;
  {
    std::lock_guard lock(mutex_);
    if (const auto it = entries_.find(key); it != entries_.end()) {
      if (covers(it->second, options)) return permute_record(it->second, a);
      wanted.sh0 = wanted.sh0 || it->second.sh0_rank.has_value();
      wanted.sig7 = wanted.sig7 || it->second.sig7.has_value();
    }
  }
  auto record = make_record(key, wanted);
  {
    std::lock_guard lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    ensure(static_cast<bool>(out), ErrorKind::Io, "cannot write cache file " + path_.string());
    out << to_json_line(record) << '\n';
    entries_.insert_or_assign(key, record);
  }
  return permute_record(record, a);
}

// ---------------------------------------------------------------- enumeration

std::string_view to_string(Filter filter) {
  switch (filter) {
    case Filter::Positive: return "positive";
    case Filter::SEExists: return "se_exists";
    case Filter::SEUnknown: return "se_unknown";
    case Filter::HomotopySphere: return "homotopy_sphere";
    case Filter::RationalHomologySphere: return "rhs";
  }
  return "positive";
}

Filter parse_filter(std::string_view text) {
  for (const auto f : {Filter::Positive, Filter::SEExists, Filter::SEUnknown, Filter::HomotopySphere,
                       Filter::RationalHomologySphere}) {
    if (to_string(f) == text) return f;
  }
  raise(ErrorKind::Schema, "unknown filter '" + std::string(text) + "'");
}

bool passes(const LinkRecord& record, Filter filter) {
  switch (filter) {
    case Filter::Positive: return record.mu_p > 0;
    case Filter::SEExists: return record.se.verdict == Verdict::Exists;
    case Filter::SEUnknown: return record.se.verdict == Verdict::Unknown;
    case Filter::HomotopySphere: return record.homotopy_sphere.value_or(false);
    case Filter::RationalHomologySphere: return record.rhs.value_or(false);
  }
  return false;
}

namespace {

std::size_t vector_length(int dim) {
  ensure(dim >= 5 && dim % 2 == 1, ErrorKind::PreconditionFailed, "dim must be odd and at least 5");
  const auto length = static_cast<std::size_t>(dim + 3) / 2;
  ensure(length <= ExponentVector::kMaxEntries, ErrorKind::PreconditionFailed, "dim too large");
  return length;
}

void extend(std::vector<std::int64_t>& prefix, std::size_t length, std::int64_t max_exponent,
            std::vector<ExponentVector>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t a = prefix.back(); a <= max_exponent; ++a) {
    prefix.push_back(a);
    extend(prefix, length, max_exponent, out);
    prefix.pop_back();
  }
}

std::vector<ExponentVector> vectors_with_lead(std::int64_t lead, std::size_t length, std::int64_t max_exponent) {
  std::vector<ExponentVector> out;
  std::vector<std::int64_t> prefix{lead};
  extend(prefix, length, max_exponent, out);
  return out;
}

}  // namespace

std::vector<ExponentVector> canonical_vectors(int dim, std::int64_t max_exponent) {
  const auto length = vector_length(dim);
  ensure(max_exponent >= 2, ErrorKind::PreconditionFailed, "max_exponent must be at least 2");
  std::vector<ExponentVector> out;
  for (std::int64_t lead = 2; lead <= max_exponent; ++lead) {
    auto shard = vectors_with_lead(lead, length, max_exponent);
    out.insert(out.end(), std::make_move_iterator(shard.begin()), std::make_move_iterator(shard.end()));
  }
  return out;
}

std::vector<LinkRecord> enumerate(int dim, std::int64_t max_exponent, const EnumerateOptions& options) {
  const auto length = vector_length(dim);
  ensure(max_exponent >= 2, ErrorKind::PreconditionFailed, "max_exponent must be at least 2");
  const auto shard_count = static_cast<std::size_t>(max_exponent - 1);
  std::vector<std::vector<LinkRecord>> shards(shard_count);
  std::vector<std::exception_ptr> failures(shard_count);
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t s = next++; s < shard_count; s = next++) {
      try {
        for (const auto& v : vectors_with_lead(static_cast<std::int64_t>(s) + 2, length, max_exponent)) {
          auto record = options.cache != nullptr ? options.cache->get(v, options.record) : make_record(v, options.record);
          const bool keep = std::all_of(options.filters.begin(), options.filters.end(),
                                        [&](Filter f) { return passes(record, f); });
          if (keep) shards[s].push_back(std::move(record));
        }
      } catch (...) {
        failures[s] = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(shard_count)));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::vector<LinkRecord> out;
  for (auto& shard : shards) {
    out.insert(out.end(), std::make_move_iterator(shard.begin()), std::make_move_iterator(shard.end()));
  }
  return out;
}

// ---------------------------------------------------------------- collisions

std::size_t MecCollision::size() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.members.size();
  return n;
}

bool MecCollision::split() const {
  return std::count_if(classes.begin(), classes.end(), [](const ShClass& c) { return c.lacunary; }) >= 2;
}

std::vector<MecCollision> find_mec_collisions(const std::vector<LinkRecord>& records, std::int64_t k_lo,
                                              std::int64_t k_hi) {
  ensure(k_lo <= k_hi, ErrorKind::PreconditionFailed, "empty degree window");
  std::map<ExponentVector, Rational> unique;
  for (const auto& r : records) {
    if (r.chi_m) unique.emplace(r.exponents.canonical(), *r.chi_m);
  }
  std::map<Rational, std::vector<ExponentVector>> by_value;
  for (const auto& [v, chi] : unique) by_value[chi].push_back(v);

  std::vector<MecCollision> out;
  for (const auto& [chi, members] : by_value) {
    if (members.size() < 2) continue;
    MecCollision group{chi, {}};
    for (const auto& v : members) {
      const auto ranks = sh_plus_ranks(make_link(v), k_lo, k_hi);
      std::vector<std::int64_t> row;
      for (std::int64_t k = k_lo; k <= k_hi; ++k) row.push_back(ranks.at(k));
      const auto match = std::find_if(group.classes.begin(), group.classes.end(), [&](const ShClass& c) {
        return ranks.lacunary && c.lacunary && c.ranks == row;
      });
      if (match != group.classes.end()) {
        match->members.push_back(v);
      } else {
        group.classes.push_back(ShClass{row, ranks.lacunary, {v}});
      }
    }
    out.push_back(std::move(group));
  }
  // Members are already lexicographic inside each group; order groups by
  // their smallest member.
  std::sort(out.begin(), out.end(), [](const MecCollision& x, const MecCollision& y) {
    return x.classes.front().members.front() < y.classes.front().members.front();
  });
  return out;
}

// ---------------------------------------------------------------- sweeps

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  ensure(ec == std::errc() && ptr == end && !text.empty(), ErrorKind::InvalidExponent,
         "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split(std::string_view text, char separator) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(separator, start);
    out.push_back(std::string(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto t = trim(text);
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    const auto k = parse_int(t, "k range");
    return {k, k};
  }
  const auto lo = parse_int(trim(std::string_view(t).substr(0, dots)), "k range");
  const auto hi = parse_int(trim(std::string_view(t).substr(dots + 2)), "k range");
  ensure(lo <= hi, ErrorKind::InvalidExponent, "empty k range '" + t + "'");
  return {lo, hi};
}

SweepSpec SweepSpec::parse(std::string_view pattern, std::string_view k_range) {
  SweepSpec spec;
  bool found = false;
  const auto tokens = split(pattern, ',');
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto token = trim(tokens[i]);
    if (token.find('k') == std::string::npos) {
      const auto a = parse_int(token, "exponent");
      ensure(a >= 2, ErrorKind::InvalidExponent, "exponent " + token + " is below 2");
      spec.base.push_back(a);
      continue;
    }
    ensure(!found, ErrorKind::InvalidExponent, "sweep pattern needs exactly one slot in k");
    ensure(token.back() == 'k', ErrorKind::InvalidExponent, "slot '" + token + "' must read b+ck");
    found = true;
    spec.slot = i;
    const auto body = std::string_view(token).substr(0, token.size() - 1);  // drop 'k'
    const auto plus = body.rfind('+');
    const auto offset_text = plus == std::string_view::npos ? std::string_view() : body.substr(0, plus);
    const auto step_text = plus == std::string_view::npos ? body : body.substr(plus + 1);
    spec.offset = offset_text.empty() ? 0 : parse_int(trim(offset_text), "offset");
    spec.step = trim(step_text).empty() ? 1 : parse_int(trim(step_text), "step");
    ensure(spec.offset >= 0 && spec.step >= 1, ErrorKind::InvalidExponent, "slot '" + token + "' needs b >= 0, c >= 1");
    spec.base.push_back(spec.offset);
  }
  ensure(found, ErrorKind::InvalidExponent, "sweep pattern has no slot in k");
  std::tie(spec.k_first, spec.k_last) = parse_range(k_range);
  return spec;
}

ExponentVector SweepSpec::instantiate(std::int64_t k) const {
  auto entries = base;
  entries[slot] = checked_add(offset, checked_mul(step, k));
  ensure(entries[slot] >= 2, ErrorKind::InvalidInstance,
         pattern() + " at k = " + std::to_string(k) + " has exponent " + std::to_string(entries[slot]));
  return ExponentVector(std::move(entries));
}

std::string SweepSpec::pattern() const {
  std::string out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i > 0) out += ',';
    out += i == slot ? std::to_string(offset) + "+" + std::to_string(step) + "k" : std::to_string(base[i]);
  }
  return out;
}

std::vector<std::pair<std::int64_t, LinkRecord>> family_sweep(const SweepSpec& spec, const RecordOptions& options) {
  std::vector<std::pair<std::int64_t, LinkRecord>> out;
  for (std::int64_t k = spec.k_first; k <= spec.k_last; ++k) {
    out.emplace_back(k, make_record(spec.instantiate(k), options));
  }
  return out;
}

// ---------------------------------------------------------------- persistence

namespace {

constexpr std::size_t kCsvColumns = 12;

std::string csv_bool(const std::optional<bool>& value) {
  if (!value) return "";
  return *value ? "true" : "false";
}

}  // namespace

std::string csv_header() {
  return "exponents;dim;degree;mu_P;chi_m;middle_rank;homotopy_sphere;dim5_type;se_verdict;kuranishi_dim;"
         "perturbation_count;sh0_rank";
}

std::string to_csv_row(const LinkRecord& r) {
  std::ostringstream out;
  out << r.exponents.to_string() << ';' << r.dim << ';' << r.degree << ';' << r.mu_p << ';'
      << (r.chi_m ? to_string(*r.chi_m) : "") << ';' << r.middle_rank << ';' << csv_bool(r.homotopy_sphere) << ';'
      << (r.dim5_type ? r.dim5_type->label() : "") << ';' << to_string(r.se.verdict) << ';' << r.moduli.kuranishi_dim
      << ';' << r.moduli.perturbation_count << ';' << (r.sh0_rank ? std::to_string(*r.sh0_rank) : "");
  return out.str();
}

void write_csv(std::ostream& out, const std::vector<LinkRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

std::string to_json_line(const LinkRecord& record) { return to_json(record).dump(); }

LinkRecord record_from_json_line(const std::string& line) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Schema, std::string("malformed JSON line: ") + e.what());
  }
  return record_from_json(j);
}

void write_jsonl(std::ostream& out, const std::vector<LinkRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

// CSV rows are a summary, so they are rebuilt from the exponents and every
// stored column is checked against the recomputed one.
std::vector<LinkRecord> read_csv(std::istream& in) {
  std::string line;
  ensure(static_cast<bool>(std::getline(in, line)) && line == csv_header(), ErrorKind::Schema,
         "CSV header does not match");
  const auto names = split(csv_header(), ';');
  std::vector<LinkRecord> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split(line, ';');
    ensure(fields.size() == kCsvColumns, ErrorKind::Schema, "CSV row " + std::to_string(row) + " has " +
                                                                std::to_string(fields.size()) + " columns");
    ExponentVector a({2, 2, 2});
    try {
      a = ExponentVector::parse(fields[0]);
    } catch (const Error& e) {
      raise(ErrorKind::Schema, "CSV row " + std::to_string(row) + ": " + e.what());
    }
    RecordOptions options;
    options.sh0 = !fields[kCsvColumns - 1].empty();
    auto record = make_record(a, options);
    const auto expected = split(to_csv_row(record), ';');
    for (std::size_t c = 0; c < kCsvColumns; ++c) {
      ensure(fields[c] == expected[c], ErrorKind::Schema,
             "CSV row " + std::to_string(row) + ": column " + names[c] + " is '" + fields[c] + "', expected '" +
                 expected[c] + "'");
    }
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<LinkRecord> read_jsonl(std::istream& in) {
  std::vector<LinkRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(record_from_json_line(line));
  }
  return out;
}

std::vector<LinkRecord> import_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  ensure(static_cast<bool>(in), ErrorKind::Io, "cannot open " + path.string());
  const auto header = csv_header();
  std::string head(header.size(), '\0');
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  const bool csv = in.gcount() == static_cast<std::streamsize>(head.size()) && head == header;
  in.clear();
  in.seekg(0);
  return csv ? read_csv(in) : read_jsonl(in);
}

void export_records(const std::filesystem::path& path, const std::vector<LinkRecord>& records, bool csv) {
  std::ofstream out(path, std::ios::binary);
  ensure(static_cast<bool>(out), ErrorKind::Io, "cannot write " + path.string());
  if (csv) {
    write_csv(out, records);
  } else {
    write_jsonl(out, records);
  }
  ensure(static_cast<bool>(out), ErrorKind::Io, "write to " + path.string() + " failed");
}

}  // namespace brieskorn
