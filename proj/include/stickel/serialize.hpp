#pragma once

#include <json.hpp>

#include "stickel/bernoulli.hpp"
#include "stickel/iwasawa.hpp"
#include "stickel/logval.hpp"

namespace stickel {

using json = nlohmann::json;

inline json to_json(const FieldPtr& F) {
  return json{{"f", F->conductor()}, {"H", F->kernel()}};
}

inline FieldPtr field_from_json(const json& j) {
  return AbelianField::make(j.at("f").get<long>(), j.at("H").get<std::vector<long>>());
}

inline json to_json(const GroupRingQ& x) {
  json coeffs = json::array();
  for (auto& [g, c] : x.coeffs())
    coeffs.push_back({g, c.get_num().get_str(), c.get_den().get_str()});
  return json{{"f", x.field()->conductor()}, {"H", x.field()->kernel()}, {"coeffs", coeffs}};
}

inline GroupRingQ group_ring_from_json(const json& j) {
  GroupRingQ x(field_from_json(j));
  for (auto& t : j.at("coeffs")) {
    Rat c(Int(t.at(1).get<std::string>()), Int(t.at(2).get<std::string>()));
    c.canonicalize();
    x.add_term(t.at(0).get<long>(), c);
  }
  return x;
}

inline json to_json(const GroupRingZl& x, long ell, long M) {
  json coeffs = json::array();
  for (auto& [g, c] : x.coeffs()) coeffs.push_back({g, c.v.get_str(), "1"});
  return json{{"f", x.field()->conductor()},
              {"H", x.field()->kernel()},
              {"coeffs", coeffs},
              {"ell", ell},
              {"M", M}};
}

inline GroupRingZl group_ring_zl_from_json(const json& j) {
  Int mod = pow_int(Int(j.at("ell").get<long>()), j.at("M").get<long>());
  GroupRingZl x(field_from_json(j));
  for (auto& t : j.at("coeffs"))
    x.add_term(t.at(0).get<long>(), ZMod(Int(t.at(1).get<std::string>()), mod));
  return x;
}

inline json to_json(const IwasawaElement& x) {
  const auto& ctx = x.context();
  json coeffs = json::array();
  for (auto& a : x.coeffs()) {
    json c = json::array();
    for (auto& [g, v] : a.coeffs()) c.push_back({g, v.v.get_str(), "1"});
    coeffs.push_back(json{{"coeffs", c}});
  }
  return json{{"ell", ctx->ell()},    {"M", ctx->prec_M()}, {"N", ctx->tdeg_N()},
              {"delta", to_json(ctx->delta())}, {"coeffs", coeffs}, {"exact", x.exact()}};
}

/// Rebuilds the element over a fresh tower whose base is the level-0 field of
/// the serialized Δ.
inline IwasawaElement iwasawa_element_from_json(const json& j) {
  long ell = j.at("ell").get<long>();
  FieldPtr delta = field_from_json(j.at("delta"));
  TowerPtr ctx = make_tower(ell, delta, j.at("M").get<long>(), j.at("N").get<long>());
  std::vector<GroupRingZl> a;
  for (auto& cj : j.at("coeffs")) {
    GroupRingZl c(ctx->delta());
    for (auto& t : cj.at("coeffs"))
      c.add_term(t.at(0).get<long>(), ctx->zmod(Int(t.at(1).get<std::string>())));
    a.push_back(std::move(c));
  }
  return IwasawaElement(ctx, std::move(a), j.at("exact").get<bool>());
}

inline json to_json(const IndexReport& r) {
  return json{{"valuation", r.valuation ? json(*r.valuation) : json(nullptr)},
              {"certified", r.certified},
              {"precision", r.precision},
              {"working_level", r.working_level}};
}

inline IndexReport index_report_from_json(const json& j) {
  IndexReport r;
  if (!j.at("valuation").is_null()) r.valuation = j.at("valuation").get<long>();
  r.certified = j.at("certified").get<bool>();
  r.precision = j.at("precision").get<long>();
  r.working_level = j.at("working_level").get<long>();
  return r;
}

inline json to_json(const AnnihilationTable& t) {
  json rows = json::array();
  for (auto& r : t.rows)
    rows.push_back(json{{"chi", json{{"omega_power", r.k}}},
                        {"valuation", r.total_val},
                        {"irregular", r.flagged}});
  return json{{"ell", t.ell},           {"c", t.c},
              {"rows", rows},           {"excluded", t.excluded},
              {"irregular_even", t.irregular_even}, {"consistent", t.consistent}};
}

inline json padic_to_json(const Padic& x) {
  if (x.is_exact_zero()) return json{{"zero", true}};
  if (x.is_zero()) return json{{"zero_mod", x.abs_prec()}};
  return json{{"v", x.val()}, {"unit", x.unit().get_str()}, {"prec", x.rel_prec()}};
}

inline json to_json(const DegreeZeroReport& r) {
  json terms = json::array();
  for (auto& t : r.terms)
    terms.push_back(json{{"place", t.p == 0 ? json("ell") : json(t.p)},
                         {"nu", t.p == 0 ? json(nullptr) : json(t.nu)},
                         {"deg", padic_to_json(t.value)}});
  return json{{"x", {r.x.get_num().get_str(), r.x.get_den().get_str()}},
              {"terms", terms},
              {"sum_valuation_ge", r.M},
              {"ok", r.ok}};
}

/// Cache of ordinary Bernoulli numbers: JSON map k -> [num, den].
inline json bernoulli_cache_to_json(long kmax) {
  json j = json::object();
  for (long k = 0; k <= kmax; ++k) {
    Rat b = ordinary_bernoulli(k);
    j[std::to_string(k)] = {b.get_num().get_str(), b.get_den().get_str()};
  }
  return j;
}

inline bool bernoulli_cache_validate(const json& j) {
  for (auto& [key, val] : j.items()) {
    long k = std::stol(key);
    Rat b(Int(val.at(0).get<std::string>()), Int(val.at(1).get<std::string>()));
    b.canonicalize();
    if (b != ordinary_bernoulli(k)) return false;
  }
  return true;
}

}  // namespace stickel
