#include "brieskorn/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "brieskorn/einstein.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/homology.hpp"
#include "brieskorn/invariants.hpp"
#include "brieskorn/serialize.hpp"
#include "brieskorn/tables.hpp"

namespace brieskorn {

namespace {

enum class Format { Text, Json, Csv };

struct Common {
  bool json = false;
  bool csv = false;
  bool approx = false;
  unsigned jobs = 1;
  std::int64_t budget = kDefaultLatticeBudget;

  Format format() const {
    ensure(!(json && csv), ErrorKind::Schema, "--json and --csv are exclusive");
    return json ? Format::Json : csv ? Format::Csv : Format::Text;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Machine-readable JSON output");
  sub->add_flag("--csv", c.csv, "Semicolon-separated table output");
  sub->add_flag("--approx", c.approx, "Append a 6-digit decimal to exact fractions");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--budget", c.budget, "Lattice point budget for signatures")->check(CLI::PositiveNumber);
}

std::string fraction(const Rational& value, bool approx) {
  auto text = to_string(value);
  if (approx) text += " (~" + approx_string(value) + ")";
  return text;
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

std::string optional_bool(const std::optional<bool>& value) { return value ? yes_no(*value) : "n/a"; }

void print_record_text(std::ostream& out, const LinkRecord& r, bool approx) {
  const auto row = [&](std::string_view key, const std::string& value) {
    out << std::left << std::setw(20) << key << value << '\n';
  };
  row("exponents", r.exponents.to_string());
  row("dim", std::to_string(r.dim));
  row("degree", std::to_string(r.degree));
  row("weights", join_integers(r.weights));
  row("recip_sum", fraction(r.recip_sum, approx));
  row("mu_P", std::to_string(r.mu_p));
  row("chi_m", r.chi_m ? fraction(*r.chi_m, approx) : "undefined (mu_P = 0)");
  row("middle_rank", std::to_string(r.middle_rank));
  row("homotopy_sphere", optional_bool(r.homotopy_sphere));
  row("rhs", optional_bool(r.rhs));
  if (r.dim5_type) row("dim5_type", r.dim5_type->label());
  if (r.sig7) {
    row("sig7", std::to_string(r.sig7->sigma));
    if (r.sig7->exotic_class) row("exotic_class", std::to_string(*r.sig7->exotic_class) + " mod 28");
  }
  row("se_verdict", std::string(to_string(r.se.verdict)));
  row("  positivity", yes_no(r.se.positivity));
  row("  sufficient1", yes_no(r.se.sufficient1));
  row("  sufficient2", yes_no(r.se.sufficient2));
  row("  coprime_iff", std::string(to_string(r.se.coprime_iff)));
  row("  lichnerowicz", yes_no(r.se.lichnerowicz_obstructed));
  row("  literature", yes_no(r.se.literature));
  row("kuranishi_dim", std::to_string(r.moduli.kuranishi_dim) + (r.moduli.applicable ? "" : " (not applicable)"));
  row("perturbation_count", std::to_string(r.moduli.perturbation_count));
  if (r.sh0_rank) row("sh0_rank", std::to_string(*r.sh0_rank));
}

void print_records(std::ostream& out, const std::vector<LinkRecord>& records, Format format, bool approx) {
  switch (format) {
    case Format::Json: write_jsonl(out, records); break;
    case Format::Csv: write_csv(out, records); break;
    case Format::Text:
      for (const auto& r : records) {
        out << std::left << std::setw(24) << r.exponents.to_string() << ' ' << std::setw(6) << r.mu_p << ' '
            << std::setw(14) << (r.chi_m ? fraction(*r.chi_m, approx) : "-") << ' '
            << std::setw(12) << (r.dim5_type ? r.dim5_type->label() : "") << ' ' << to_string(r.se.verdict) << '\n';
      }
      out << records.size() << " record(s)\n";
      break;
  }
}

LinkRecord fetch_record(const ExponentVector& a, const RecordOptions& options, RecordCache* cache) {
  return cache != nullptr ? cache->get(a, options) : make_record(a, options);
}

// Two exponents describe a torus knot or link, not a manifold in scope, but
// the homological invariants are still defined and worth showing.
void analyze_pair(std::ostream& out, const std::vector<std::int64_t>& a) {
  out << std::left << std::setw(20) << "exponents" << join_integers(a) << '\n';
  out << std::setw(20) << "middle_rank" << to_string(middle_betti(a)) << '\n';
  out << std::setw(20) << "chi_S1" << chi_s1(a) << '\n';
  raise(ErrorKind::DimensionTooLow, "classifiers and contact invariants need at least 3 exponents");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of Brieskorn-Pham links"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));
  Common common;

  std::string exponents;
  bool want_sh0 = false;
  bool want_sig7 = false;
  auto* analyze = app.add_subcommand("analyze", "Full record for one link");
  analyze->add_option("exponents", exponents, "Comma separated exponents, e.g. 2,3,4,16")->required();
  analyze->add_flag("--sh0", want_sh0, "Include the SH_0 rank");
  analyze->add_flag("--sig7", want_sig7, "Include the Milnor fibre signature (5 exponents)");
  add_common(analyze, common);

  auto* mec = app.add_subcommand("mec", "Mean Euler characteristic");
  mec->add_option("exponents", exponents)->required();
  add_common(mec, common);

  std::int64_t k_lo = 0;
  std::int64_t k_hi = 0;
  auto* sh = app.add_subcommand("sh-ranks", "Ranks of positive equivariant symplectic homology");
  sh->add_option("exponents", exponents)->required();
  sh->add_option("k_lo", k_lo)->required();
  sh->add_option("k_hi", k_hi)->required();
  add_common(sh, common);

  auto* se = app.add_subcommand("se-check", "Sasaki-Einstein existence tests");
  se->add_option("exponents", exponents)->required();
  add_common(se, common);

  std::string pattern;
  std::string k_range;
  auto* sweep = app.add_subcommand("sweep", "Records along a family b+ck");
  sweep->add_option("pattern", pattern, "e.g. 2,3,4,4+12k")->required();
  sweep->add_option("k_range", k_range, "e.g. 0..5")->required();
  add_common(sweep, common);

  int dim = 5;
  std::int64_t max_exponent = 2;
  std::vector<std::string> filter_names;
  bool f_positive = false;
  bool f_exists = false;
  bool f_unknown = false;
  bool f_sphere = false;
  bool f_rhs = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Census over canonical exponent vectors");
  enumerate_cmd->add_option("dim", dim)->required();
  enumerate_cmd->add_option("max", max_exponent)->required();
  enumerate_cmd->add_option("--filter", filter_names, "positive, se_exists, se_unknown, homotopy_sphere, rhs");
  enumerate_cmd->add_flag("--positive", f_positive);
  enumerate_cmd->add_flag("--se-exists", f_exists);
  enumerate_cmd->add_flag("--se-unknown", f_unknown);
  enumerate_cmd->add_flag("--homotopy-sphere", f_sphere);
  enumerate_cmd->add_flag("--rhs", f_rhs);
  enumerate_cmd->add_flag("--sh0", want_sh0);
  enumerate_cmd->add_flag("--sig7", want_sig7);
  add_common(enumerate_cmd, common);

  std::string input;
  std::string window = "0..0";
  auto* collide = app.add_subcommand("collide", "Links sharing a mean Euler characteristic");
  collide->add_option("input", input, "CSV or JSON-lines records")->required();
  collide->add_option("--window", window, "SH degree window used to split groups");
  add_common(collide, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  err << "brieskorn " << version() << '\n';

  try {
    const Format format = common.format();
    RecordOptions options;
    options.sh0 = want_sh0;
    options.sig7 = want_sig7;
    options.budget = common.budget;
    options.jobs = common.jobs;
    const auto cache = RecordCache::from_environment();

    if (analyze->parsed()) {
      const auto entries = parse_integer_list(exponents);
      if (entries.size() == 2 && entries[0] >= 2 && entries[1] >= 2) analyze_pair(out, entries);
      const auto record = fetch_record(ExponentVector(entries), options, cache.get());
      if (format == Format::Json) {
        out << to_json(record).dump(2) << '\n';
      } else if (format == Format::Csv) {
        write_csv(out, {record});
      } else {
        print_record_text(out, record, common.approx);
      }
    } else if (mec->parsed()) {
      const auto a = ExponentVector::parse(exponents);
      const auto m = mean_euler(make_link(a));
      if (format == Format::Json) {
        out << nlohmann::ordered_json{{"exponents", a.to_string()}, {"mu_P", m.mu_p}, {"chi_m", to_string(m.value)}}
                   .dump()
            << '\n';
      } else if (format == Format::Csv) {
        out << "exponents;mu_P;chi_m\n" << a.to_string() << ';' << m.mu_p << ';' << to_string(m.value) << '\n';
      } else {
        out << fraction(m.value, common.approx) << '\n';
      }
    } else if (sh->parsed()) {
      ensure(k_lo <= k_hi, ErrorKind::PreconditionFailed, "empty degree window");
      const auto ranks = sh_plus_ranks(make_link(ExponentVector::parse(exponents)), k_lo, k_hi);
      if (format == Format::Json) {
        out << to_json(ranks).dump() << '\n';
      } else if (format == Format::Csv) {
        out << "k;rank;lacunary\n";
        for (auto k = k_lo; k <= k_hi; ++k) out << k << ';' << ranks.at(k) << ';' << yes_no(ranks.lacunary) << '\n';
      } else {
        const std::string tail = ranks.lacunary ? ", lacunary" : ", not lacunary (E1 upper bound)";
        for (auto k = k_lo; k <= k_hi; ++k) out << "SH_" << k << " = " << ranks.at(k) << tail << '\n';
      }
    } else if (se->parsed()) {
      const auto link = make_link(ExponentVector::parse(exponents));
      const auto report = se_status(link);
      const auto moduli = moduli_dimension(link);
      if (format == Format::Json) {
        out << nlohmann::ordered_json{{"exponents", link.exponents.to_string()},
                                      {"se", to_json(report)},
                                      {"moduli", to_json(moduli)}}
                   .dump()
            << '\n';
      } else if (format == Format::Csv) {
        out << "exponents;positivity;sufficient1;sufficient2;coprime_iff;lichnerowicz_obstructed;literature;verdict;"
               "kuranishi_dim;perturbation_count\n"
            << link.exponents.to_string() << ';' << yes_no(report.positivity) << ';' << yes_no(report.sufficient1)
            << ';' << yes_no(report.sufficient2) << ';' << to_string(report.coprime_iff) << ';'
            << yes_no(report.lichnerowicz_obstructed) << ';' << yes_no(report.literature) << ';'
            << to_string(report.verdict) << ';'
            << moduli.kuranishi_dim << ';' << moduli.perturbation_count << '\n';
      } else {
        out << "verdict: " << to_string(report.verdict) << '\n'
            << "  positivity (sum 1/a_j > 1): " << yes_no(report.positivity) << '\n'
            << "  sufficient inequality 1: " << yes_no(report.sufficient1) << '\n'
            << "  sufficient inequality 2: " << yes_no(report.sufficient2) << '\n'
            << "  coprime criterion: " << to_string(report.coprime_iff) << '\n'
            << "  Lichnerowicz obstruction: " << yes_no(report.lichnerowicz_obstructed) << '\n'
            << "  known from the literature: " << yes_no(report.literature) << '\n'
            << "moduli: kuranishi_dim " << moduli.kuranishi_dim << ", perturbation_count "
            << moduli.perturbation_count << (moduli.applicable ? "" : " (kuranishi not applicable)") << '\n';
      }
    } else if (sweep->parsed()) {
      const auto spec = SweepSpec::parse(pattern, k_range);
      const auto rows = family_sweep(spec, options);
      if (format == Format::Text) {
        for (const auto& [k, r] : rows) {
          out << "k=" << std::left << std::setw(5) << k << std::setw(24) << r.exponents.to_string()
              << (r.chi_m ? fraction(*r.chi_m, common.approx) : "-") << '\n';
        }
      } else {
        std::vector<LinkRecord> records;
        for (const auto& row : rows) records.push_back(row.second);
        print_records(out, records, format, common.approx);
      }
    } else if (enumerate_cmd->parsed()) {
      EnumerateOptions e;
      for (const auto& name : filter_names) e.filters.push_back(parse_filter(name));
      if (f_positive) e.filters.push_back(Filter::Positive);
      if (f_exists) e.filters.push_back(Filter::SEExists);
      if (f_unknown) e.filters.push_back(Filter::SEUnknown);
      if (f_sphere) e.filters.push_back(Filter::HomotopySphere);
      if (f_rhs) e.filters.push_back(Filter::RationalHomologySphere);
      e.record = options;
      e.record.jobs = 1;
      e.jobs = common.jobs;
      e.cache = cache.get();
      print_records(out, enumerate(dim, max_exponent, e), format, common.approx);
    } else if (collide->parsed()) {
      const auto [lo, hi] = parse_range(window);
      const auto groups = find_mec_collisions(import_records(input), lo, hi);
      if (format == Format::Json) {
        auto all = nlohmann::ordered_json::array();
        for (const auto& g : groups) all.push_back(to_json(g));
        out << all.dump() << '\n';
      } else if (format == Format::Csv) {
        out << "chi_m;class;lacunary;sh_ranks;exponents\n";
        for (const auto& g : groups) {
          for (std::size_t c = 0; c < g.classes.size(); ++c) {
            for (const auto& m : g.classes[c].members) {
              out << to_string(g.chi_m) << ';' << c << ';' << yes_no(g.classes[c].lacunary) << ';'
                  << join_integers(g.classes[c].ranks) << ';' << m.to_string() << '\n';
            }
          }
        }
      } else {
        for (const auto& g : groups) {
          out << "chi_m = " << fraction(g.chi_m, common.approx) << ": " << g.size() << " links"
              << (g.split() ? ", split by SH ranks" : "") << '\n';
          for (const auto& c : g.classes) {
            out << "  SH[" << lo << ".." << hi << "] = (" << join_integers(c.ranks) << ")"
                << (c.lacunary ? "" : " upper bound") << ':';
            for (const auto& m : c.members) out << " (" << m.to_string() << ')';
            out << '\n';
          }
        }
        out << groups.size() << " collision group(s)\n";
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: InternalInconsistency: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace brieskorn
