#pragma once

// Census plumbing: per-link records, enumeration of canonical exponent
// vectors, mean-Euler collision detection, family sweeps and persistence.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brieskorn/arith.hpp"
#include "brieskorn/einstein.hpp"
#include "brieskorn/homology.hpp"
#include "brieskorn/linkmodel.hpp"

namespace brieskorn {

std::string_view version();

struct LinkRecord {
  explicit LinkRecord(ExponentVector a) : exponents(std::move(a)) {}

  ExponentVector exponents;
  int dim = 0;
  std::int64_t degree = 0;
  std::vector<std::int64_t> weights;
  Rational recip_sum;
  std::int64_t mu_p = 0;
  std::optional<Rational> chi_m;  // present iff mu_p != 0
  std::int64_t middle_rank = 0;
  std::optional<bool> homotopy_sphere;  // absent in dimension 3
  std::optional<bool> rhs;
  std::optional<Dim5Type> dim5_type;  // dimension 5 only
  std::optional<Signature7> sig7;     // dimension 7, on request
  SEReport se;
  ModuliReport moduli;
  std::optional<std::int64_t> sh0_rank;

  bool operator==(const LinkRecord&) const = default;
};

struct RecordOptions {
  bool sh0 = false;
  bool sig7 = false;
  std::int64_t budget = kDefaultLatticeBudget;
  unsigned jobs = 1;  // lattice-count threads
};

LinkRecord make_record(const ExponentVector& a, const RecordOptions& options = {});

/// Same record for a permutation of the exponents: invariants are
/// permutation invariant, only the slot-ordered fields move.
LinkRecord permute_record(const LinkRecord& record, const ExponentVector& target);

/// Append-only JSON-lines cache keyed by canonical exponent vector. The file
/// name carries the library version so stale entries are never reused.
class RecordCache {
 public:
  explicit RecordCache(std::filesystem::path dir);

  /// Cache in $BRIESKORN_CACHE_DIR, or nothing when the variable is unset.
  static std::unique_ptr<RecordCache> from_environment();

  const std::filesystem::path& path() const { return path_; }

  /// Record for `a`, computed and appended on a miss. Entries lacking a
  /// requested optional field count as misses.
  LinkRecord get(const ExponentVector& a, const RecordOptions& options);

 private:
  std::filesystem::path path_;
  std::map<ExponentVector, LinkRecord> entries_;
  std::mutex mutex_;
};

enum class Filter { Positive, SEExists, SEUnknown, HomotopySphere, RationalHomologySphere };

std::string_view to_string(Filter filter);
Filter parse_filter(std::string_view text);
bool passes(const LinkRecord& record, Filter filter);

struct EnumerateOptions {
  std::vector<Filter> filters;
  RecordOptions record;
  unsigned jobs = 1;
  RecordCache* cache = nullptr;
};

/// Canonical (sorted) vectors of length (dim + 3) / 2 with entries in
/// [2, max_exponent], in lexicographic order.
std::vector<ExponentVector> canonical_vectors(int dim, std::int64_t max_exponent);

/// Records of canonical vectors passing every filter, in lexicographic
/// order. Work is sharded by leading exponent; the output does not depend
/// on the number of jobs.
std::vector<LinkRecord> enumerate(int dim, std::int64_t max_exponent, const EnumerateOptions& options = {});

/// Members of a collision group sharing the same SH ranks on the window.
/// Non-lacunary members only carry upper bounds and each form their own
/// class with `lacunary` false.
struct ShClass {
  std::vector<std::int64_t> ranks;  // one per degree of the window
  bool lacunary = true;
  std::vector<ExponentVector> members;
};

struct MecCollision {
  Rational chi_m;
  std::vector<ShClass> classes;

  std::size_t size() const;
  /// True when SH ranks prove some members are not contactomorphic.
  bool split() const;
};

/// Groups of at least two distinct canonical vectors with equal chi_m,
/// each sub-split by SH ranks over [k_lo, k_hi]. Records with mu_P = 0 are
/// skipped; duplicates are merged.
std::vector<MecCollision> find_mec_collisions(const std::vector<LinkRecord>& records, std::int64_t k_lo = 0,
                                              std::int64_t k_hi = 0);

/// An exponent list with one slot of the form b + c*k.
struct SweepSpec {
  std::vector<std::int64_t> base;
  std::size_t slot = 0;
  std::int64_t offset = 0;  // b
  std::int64_t step = 1;    // c
  std::int64_t k_first = 0;
  std::int64_t k_last = 0;

  static SweepSpec parse(std::string_view pattern, std::string_view k_range);
  ExponentVector instantiate(std::int64_t k) const;
  std::string pattern() const;
};

/// Parses "lo..hi" (or a single integer).
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

std::vector<std::pair<std::int64_t, LinkRecord>> family_sweep(const SweepSpec& spec,
                                                              const RecordOptions& options = {});

// Persistence. CSV is the ';'-separated summary table; JSON lines carry
// every field.
std::string csv_header();
std::string to_csv_row(const LinkRecord& record);
void write_csv(std::ostream& out, const std::vector<LinkRecord>& records);

std::string to_json_line(const LinkRecord& record);
LinkRecord record_from_json_line(const std::string& line);
void write_jsonl(std::ostream& out, const std::vector<LinkRecord>& records);

std::vector<LinkRecord> read_csv(std::istream& in);
std::vector<LinkRecord> read_jsonl(std::istream& in);

/// Reads a file written by write_csv or write_jsonl, chosen by content.
std::vector<LinkRecord> import_records(const std::filesystem::path& path);
void export_records(const std::filesystem::path& path, const std::vector<LinkRecord>& records, bool csv);

}  // namespace brieskorn
