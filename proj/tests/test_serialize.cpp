#include <catch2/catch_amalgamated.hpp>

#include "stickel/serialize.hpp"

using namespace stickel;

TEST_CASE("field round-trip") {
  auto F = make_field(15, {4});
  auto j = to_json(F);
  auto G = field_from_json(j);
  REQUIRE(*F == *G);
  // through a serialized string as well
  auto G2 = field_from_json(json::parse(j.dump()));
  REQUIRE(*F == *G2);
}

TEST_CASE("rational group ring round-trip") {
  auto F = make_field(7, {});
  GroupRingQ s = stickelberger(F);
  auto back = group_ring_from_json(json::parse(to_json(s).dump()));
  REQUIRE(back == s);
  REQUIRE(*back.field() == *F);
}

TEST_CASE("modular group ring round-trip") {
  auto F = make_field(5, {});
  long ell = 3, M = 8;
  Int mod = pow_int(Int(ell), M);
  GroupRingZl x(F);
  x.add_term(2, ZMod(Int(17), mod));
  x.add_term(3, ZMod(Int(-4), mod));
  auto back = group_ring_zl_from_json(json::parse(to_json(x, ell, M).dump()));
  REQUIRE(back == x);
}

TEST_CASE("iwasawa element round-trip") {
  auto ctx = make_tower(3, make_field(3, {}), 8, 6);
  auto x = coherent_stickelberger(ctx, 5, 1);
  auto back = iwasawa_element_from_json(json::parse(to_json(x).dump()));
  REQUIRE(back.context()->ell() == 3);
  REQUIRE(back.exact() == x.exact());
  REQUIRE(back.coeffs() == x.coeffs());
  auto y = x.inexact();
  REQUIRE_FALSE(iwasawa_element_from_json(to_json(y)).exact());
}

TEST_CASE("index report round-trip") {
  IndexReport certified{2, true, 8, 5};
  auto b1 = index_report_from_json(json::parse(to_json(certified).dump()));
  REQUIRE(b1.valuation == 2);
  REQUIRE(b1.certified);
  REQUIRE(b1.precision == 8);
  REQUIRE(b1.working_level == 5);
  IndexReport inconclusive{std::nullopt, false, 6, 4};
  auto b2 = index_report_from_json(json::parse(to_json(inconclusive).dump()));
  REQUIRE_FALSE(b2.valuation.has_value());
  REQUIRE_FALSE(b2.certified);
}

TEST_CASE("annihilation table serialization carries the flags") {
  auto t = annihilation_consistency(37, 5);
  auto j = to_json(t);
  REQUIRE(j.at("consistent").get<bool>());
  bool saw = false;
  for (auto& row : j.at("rows"))
    if (row.at("chi").at("omega_power").get<long>() == 5) {
      REQUIRE(row.at("irregular").get<bool>());
      saw = true;
    }
  REQUIRE(saw);
}

TEST_CASE("degree zero report serialization") {
  auto r = degree_zero_check(Rat(10, 21), 3, 10);
  auto j = to_json(r);
  REQUIRE(j.at("ok").get<bool>());
  REQUIRE(j.at("x")[0].get<std::string>() == "10");
  REQUIRE(j.at("terms").size() == r.terms.size());
}

TEST_CASE("bernoulli cache validates against recomputation") {
  auto j = bernoulli_cache_to_json(30);
  REQUIRE(bernoulli_cache_validate(json::parse(j.dump())));
  j["12"] = {"-691", "2731"};
  REQUIRE_FALSE(bernoulli_cache_validate(j));
}
