#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stickel/logval.hpp"

using namespace stickel;

TEST_CASE("local norms of standard elements") {
  for (long ell : {3L, 5L, 7L}) {
    LocalCyclotomicField F(ell, 1, 10);
    auto one_minus_z = F.add(F.from_rational(Rat(1)), F.mul(F.from_rational(Rat(-1)), F.zeta()));
    Padic n = local_norm(F, one_minus_z);
    REQUIRE(n == Padic::from_int(ell, Int(ell), n.abs_prec()));
  }
  LocalCyclotomicField F9(3, 2, 10);
  REQUIRE(F9.degree() == 6);
  Padic n2 = local_norm(F9, F9.from_rational(Rat(2)));
  REQUIRE(n2 == Padic::from_int(3, 64, n2.abs_prec()));
  for (long j = 1; j < 9; ++j) {
    Padic nz = local_norm(F9, F9.zeta(j));
    REQUIRE((nz == Padic::from_int(3, 1, nz.abs_prec()) ||
             nz == Padic::from_int(3, -1, nz.abs_prec())));
    // roots of unity have norm a root of unity; its square is 1
    REQUIRE(nz * nz == Padic::from_int(3, 1, nz.abs_prec()));
  }
}

TEST_CASE("local norm is multiplicative") {
  LocalCyclotomicField F(5, 1, 10);
  auto x = F.add(F.from_rational(Rat(2)), F.zeta(3));
  auto y = F.add(F.from_rational(Rat(1)), F.mul(F.from_rational(Rat(3)), F.zeta()));
  Padic nx = local_norm(F, x), ny = local_norm(F, y), nxy = local_norm(F, F.mul(x, y));
  REQUIRE((nx * ny - nxy).is_zero());
}

TEST_CASE("logarithmic valuations of rationals") {
  // away from ell the logarithmic valuation is the ordinary one
  REQUIRE(logval(Rat(2), 2, 3, 8) == Padic::from_int(3, 1, 8));
  REQUIRE(logval(Rat(9, 4), 2, 5, 8) == Padic::from_int(5, -2, 8));
  // at the ell place: -Log(x)/Log(1+ell)
  REQUIRE(logval(Rat(4), 3, 3, 8) == Padic::from_int(3, -1, 8));
  // ell powers and roots of unity have logarithmic valuation zero at ell
  REQUIRE(logval(Rat(-27), 3, 3, 8).is_zero());
  REQUIRE(logval(Rat(5), 5, 5, 8).is_zero());
  REQUIRE_THROWS_AS(logval(Rat(0), 2, 3, 8), precondition_error);
}

TEST_CASE("logarithmic valuation at a ramified local place") {
  LocalCyclotomicField F(5, 1, 12);
  auto one_minus_z = F.add(F.from_rational(Rat(1)), F.mul(F.from_rational(Rat(-1)), F.zeta()));
  // N(1 - zeta_5) = 5, Log_5(5) = 0: the uniformizer has logarithmic valuation 0
  REQUIRE(logval_local(F, one_minus_z).is_zero());
  // N(1 + 5 zeta) is a principal unit with nonzero log
  auto u = F.add(F.from_rational(Rat(1)), F.mul(F.from_rational(Rat(5)), F.zeta()));
  REQUIRE_FALSE(logval_local(F, u).is_zero());
}

TEST_CASE("place degrees") {
  // deg of the ell place of Q is Log(1+ell), a unit multiple of ell
  for (long ell : {3L, 5L, 7L}) {
    Padic d = place_degree(ell, 0, 10);
    REQUIRE(d.val() == 1);
    REQUIRE(place_degree(ell, 3, 10).val() == 3);
  }
  REQUIRE(place_degree_prime(3, 2, 10).val() >= 1);
  REQUIRE_THROWS_AS(place_degree_prime(3, 3, 10), precondition_error);
}

TEST_CASE("degree zero identity for principal rationals") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> dist(1, 500);
  for (long ell : {3L, 5L, 7L}) {
    for (int rep = 0; rep < 40; ++rep) {
      long a = dist(rng), b = dist(rng);
      Rat x(a, b);
      if (x == 0) continue;
      auto report = degree_zero_check((rep % 2) ? x : -x, ell, 12);
      REQUIRE(report.ok);
    }
  }
  auto r = degree_zero_check(Rat(10, 21), 3, 12);
  REQUIRE(r.ok);
  REQUIRE(r.terms.size() == 4);  // 2, 5, 7 and the ell place; the 3-part sits inside the log term
}
