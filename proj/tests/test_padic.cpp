#include <catch2/catch_amalgamated.hpp>

#include "stickel/padic.hpp"

using namespace stickel;

TEST_CASE("basic arithmetic tracks valuation and precision") {
  Padic a = Padic::from_int(5, 50, 6);
  REQUIRE(a.val() == 2);
  REQUIRE(a.unit() == 2);
  Padic b = Padic::from_rational(5, Rat(1, 3), 6);
  REQUIRE((a * b).val() == 2);
  REQUIRE(a + (-a) == Padic::zero(5));
  REQUIRE((a / a) == Padic::from_int(5, 1, 6));
}

TEST_CASE("cancellation leaves a certified near-zero") {
  Padic x = Padic::from_int(7, 1, 4);
  Padic y = Padic::from_int(7, 1 + 2401, 4);  // equal mod 7^4
  Padic d = x - y;
  REQUIRE(d.is_zero());
  REQUIRE_FALSE(d.is_exact_zero());
  REQUIRE(d.abs_prec() == 4);
  REQUIRE_THROWS_AS(d.val(), precondition_error);
}

TEST_CASE("from_rational rejects nothing invertible and inverts denominators") {
  Padic q = Padic::from_rational(3, Rat(7, 2), 5);
  Padic two = Padic::from_int(3, 2, 5);
  REQUIRE(q * two == Padic::from_int(3, 7, 5));
}

TEST_CASE("teichmuller representatives are roots of unity") {
  for (long ell : {3L, 5L, 7L, 13L}) {
    for (long a = 1; a < ell; ++a) {
      Int w = teichmuller_lift(ell, Int(a), 8);
      Int mod = pow_int(Int(ell), 8);
      REQUIRE(pow_mod(w, Int(ell - 1), mod) == 1);
      REQUIRE(w % ell == a % ell);
    }
  }
}

TEST_CASE("iwasawa log kills roots of unity and powers of ell") {
  REQUIRE(iwasawa_log(Padic::from_int(5, 1, 8), 8).is_zero());
  REQUIRE(iwasawa_log(Padic::from_int(5, 5, 8), 8).is_zero());
  REQUIRE(iwasawa_log(Padic::from_int(5, -125, 8), 8).is_zero());
  Int w = teichmuller_lift(7, Int(3), 10);
  REQUIRE(iwasawa_log(Padic(7, 0, w, 10), 8).is_zero());
}

TEST_CASE("iwasawa log against the series oracle") {
  // Log_5(6): z = 5, sum (-1)^{k+1} 5^k / k
  long prec = 8;
  Int mod = pow_int(Int(5), prec + 3);
  Rat acc(0);
  Int zk(1);
  for (long k = 1; k <= 20; ++k) {
    zk *= 5;
    Rat t(zk);
    t /= k;
    acc += (k % 2 ? t : -t);
  }
  Padic want = Padic::from_rational(5, acc, prec);
  Padic got = iwasawa_log(Padic::from_int(5, 6, prec + 2), prec);
  REQUIRE((got - want).is_zero());
}

TEST_CASE("iwasawa log is a homomorphism on units") {
  long prec = 9;
  for (auto [a, b] : {std::pair<long, long>{2, 7}, {4, 11}, {8, 13}}) {
    Padic la = iwasawa_log(Padic::from_int(3, a, prec + 2), prec);
    Padic lb = iwasawa_log(Padic::from_int(3, b, prec + 2), prec);
    Padic lab = iwasawa_log(Padic::from_int(3, a * b, prec + 2), prec);
    REQUIRE(la + lb == lab);
  }
}
