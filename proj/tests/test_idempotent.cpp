#include <catch2/catch_amalgamated.hpp>

#include "stickel/idempotent.hpp"

using namespace stickel;

TEST_CASE("finite fields have working arithmetic") {
  auto F = detail::make_finite_field(3, 2);
  REQUIRE(F.r() == 2);
  auto t = F.zero();
  t[1] = 1;
  REQUIRE(F.pow(t, Int(8)) == F.one());  // t is a unit of order dividing 8
  auto y = detail::element_of_order(F, 8);
  REQUIRE(F.is_one(F.pow(y, Int(8))));
  REQUIRE_FALSE(F.is_one(F.pow(y, Int(4))));
}

TEST_CASE("frobenius classes partition the dual group") {
  auto F = make_field(5, {});
  auto classes = character_classes(F, 3);
  // orders 1, 2 are rational; the two quartic characters are conjugate over Q_3
  REQUIRE(classes.size() == 3);
  size_t total = 0;
  for (auto& c : classes) total += c.size();
  REQUIRE(total == 4);
}

TEST_CASE("class idempotents are orthogonal and sum to one") {
  for (long ell : {3L, 7L}) {
    auto F = make_field(5, {});
    auto classes = character_classes(F, ell);
    long M = 6;
    Int mod = pow_int(Int(ell), M);
    std::vector<GroupRingZl> es;
    for (auto& cl : classes) es.push_back(idempotent(F, cl[0], ell, M));
    GroupRingZl sum(F);
    for (auto& e : es) {
      REQUIRE(e * e == e);
      sum = sum + e;
    }
    REQUIRE(sum == GroupRingZl::scalar(F, ZMod(Int(1), mod)));
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j) REQUIRE((es[i] * es[j]).is_zero());
  }
}

TEST_CASE("idempotents project character evaluations") {
  // e_chi picks out exactly the chi-component: chi'(e_chi) = 1 if chi' ~ chi else 0
  auto F = make_field(7, {});
  long ell = 5, M = 6;
  auto classes = character_classes(F, ell);
  for (auto& cl : classes) {
    auto e = idempotent(F, cl[0], ell, M);
    for (auto& chi : characters(F)) {
      if ((ell - 1) % chi.order() != 0) continue;  // only ell-adically rational characters
      Padic v = Padic::zero(ell);
      for (auto& [g, c] : e.coeffs())
        v = v + Padic(ell, 0, c.v, M) * chi.padic_value(g, ell, M);
      bool in_class = false;
      for (auto& psi : cl)
        if (psi == chi) in_class = true;
      if (in_class)
        REQUIRE(v == Padic::from_int(ell, 1, M));
      else
        REQUIRE(v.is_zero());
    }
  }
}

TEST_CASE("non-semisimple requests are rejected") {
  auto F = make_field(7, {});  // |G| = 6
  auto chi = characters(F)[1];
  REQUIRE_THROWS_AS(idempotent(F, chi, 3, 4), precondition_error);
}
