#include "brieskorn/serialize.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

using Json = nlohmann::ordered_json;

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorKind::Schema, std::string("missing key '") + key + "'");
  return j.at(key);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

Json to_json(const GradedRanks& ranks) {
  Json by_degree = Json::object();
  for (const auto& [k, r] : ranks.ranks) by_degree[std::to_string(k)] = r;
  return Json{{"k_lo", ranks.k_lo},
              {"k_hi", ranks.k_hi},
              {"ranks", by_degree},
              {"mu_P", ranks.mu_p},
              {"lacunary", ranks.lacunary}};
}

Json to_json(const SEReport& r) {
  return Json{{"positivity", r.positivity},
              {"sufficient1", r.sufficient1},
              {"sufficient2", r.sufficient2},
              {"coprime_iff", std::string(to_string(r.coprime_iff))},
              {"lichnerowicz_obstructed", r.lichnerowicz_obstructed},
              {"literature", r.literature},
              {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const ModuliReport& r) {
  return Json{{"h0_degree_d", r.h0_degree_d},
              {"h0_weights_sum", r.h0_weights_sum},
              {"kuranishi_dim", r.kuranishi_dim},
              {"perturbation_count", r.perturbation_count},
              {"applicable", r.applicable}};
}

Json to_json(const LinkRecord& r) {
  Json j;
  j["exponents"] = std::vector<std::int64_t>(r.exponents.entries().begin(), r.exponents.entries().end());
  j["dim"] = r.dim;
  j["degree"] = r.degree;
  j["weights"] = r.weights;
  j["recip_sum"] = to_string(r.recip_sum);
  j["mu_P"] = r.mu_p;
  j["chi_m"] = r.chi_m ? Json(to_string(*r.chi_m)) : Json(nullptr);
  j["middle_rank"] = r.middle_rank;
  j["homotopy_sphere"] = optional_json(r.homotopy_sphere);
  j["rhs"] = optional_json(r.rhs);
  j["dim5_type"] = r.dim5_type ? Json(r.dim5_type->label()) : Json(nullptr);
  if (r.sig7) {
    j["sig7"] = Json{{"sigma", r.sig7->sigma}, {"exotic_class", optional_json(r.sig7->exotic_class)}};
  } else {
    j["sig7"] = nullptr;
  }
  j["se"] = to_json(r.se);
  j["moduli"] = to_json(r.moduli);
  j["sh0_rank"] = optional_json(r.sh0_rank);
  return j;
}

Json to_json(const MecCollision& group) {
  Json classes = Json::array();
  for (const auto& c : group.classes) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(m.to_string());
    classes.push_back(Json{{"sh_ranks", c.ranks}, {"lacunary", c.lacunary}, {"members", members}});
  }
  return Json{{"chi_m", to_string(group.chi_m)}, {"split", group.split()}, {"classes", classes}};
}

SEReport se_report_from_json(const Json& j) {
  try {
    SEReport r;
    r.positivity = field(j, "positivity").get<bool>();
    r.sufficient1 = field(j, "sufficient1").get<bool>();
    r.sufficient2 = field(j, "sufficient2").get<bool>();
    r.coprime_iff = parse_tristate(field(j, "coprime_iff").get<std::string>());
    r.lichnerowicz_obstructed = field(j, "lichnerowicz_obstructed").get<bool>();
    r.literature = field(j, "literature").get<bool>();
    r.verdict = parse_verdict(field(j, "verdict").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Schema, std::string("bad SE report: ") + e.what());
  }
}

ModuliReport moduli_report_from_json(const Json& j) {
  try {
    ModuliReport r;
    r.h0_degree_d = field(j, "h0_degree_d").get<std::int64_t>();
    r.h0_weights_sum = field(j, "h0_weights_sum").get<std::int64_t>();
    r.kuranishi_dim = field(j, "kuranishi_dim").get<std::int64_t>();
    r.perturbation_count = field(j, "perturbation_count").get<std::int64_t>();
    r.applicable = field(j, "applicable").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Schema, std::string("bad moduli report: ") + e.what());
  }
}

LinkRecord record_from_json(const Json& j) {
  try {
    LinkRecord r(ExponentVector(field(j, "exponents").get<std::vector<std::int64_t>>()));
    r.dim = field(j, "dim").get<int>();
    r.degree = field(j, "degree").get<std::int64_t>();
    r.weights = field(j, "weights").get<std::vector<std::int64_t>>();
    r.recip_sum = parse_rational(field(j, "recip_sum").get<std::string>());
    r.mu_p = field(j, "mu_P").get<std::int64_t>();
    if (const auto chi = optional_from<std::string>(j, "chi_m")) r.chi_m = parse_rational(*chi);
    r.middle_rank = field(j, "middle_rank").get<std::int64_t>();
    r.homotopy_sphere = optional_from<bool>(j, "homotopy_sphere");
    r.rhs = optional_from<bool>(j, "rhs");
    if (const auto& t = field(j, "dim5_type"); !t.is_null()) {
      r.dim5_type = Dim5Type::from_label(t.get<std::string>(), r.middle_rank);
    }
    if (const auto& s = field(j, "sig7"); !s.is_null()) {
      Signature7 sig;
      sig.sigma = field(s, "sigma").get<std::int64_t>();
      sig.exotic_class = optional_from<std::int64_t>(s, "exotic_class");
      r.sig7 = sig;
    }
    r.se = se_report_from_json(field(j, "se"));
    r.moduli = moduli_report_from_json(field(j, "moduli"));
    r.sh0_rank = optional_from<std::int64_t>(j, "sh0_rank");
    ensure(r.chi_m.has_value() == (r.mu_p != 0), ErrorKind::Schema, "chi_m must be present iff mu_P != 0");
    return r;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Schema, std::string("bad link record: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    raise(ErrorKind::Schema, std::string("bad link record: ") + e.what());
  }
}

}  // namespace brieskorn
