#include <catch2/catch_amalgamated.hpp>

#include "stickel/bernoulli.hpp"

using namespace stickel;

TEST_CASE("ordinary Bernoulli numbers") {
  REQUIRE(ordinary_bernoulli(0) == Rat(1));
  REQUIRE(ordinary_bernoulli(1) == Rat(-1, 2));
  REQUIRE(ordinary_bernoulli(3) == Rat(0));
  REQUIRE(ordinary_bernoulli(12) == Rat(-691, 2730));
  // von Staudt-Clausen: denominator of B_k is the product of primes p with p-1 | k
  for (long k : {2L, 4L, 10L, 16L}) {
    Int d(1);
    for (long p = 2; p <= k + 1; ++p)
      if (is_prime(p) && k % (p - 1) == 0) d *= p;
    REQUIRE(ordinary_bernoulli(k).get_den() == d);
  }
}

TEST_CASE("generalized Bernoulli values for quadratic characters") {
  auto F3 = make_field(3, {});
  for (auto& chi : characters(F3)) {
    if (chi.is_trivial()) {
      REQUIRE_THROWS_AS(gen_bernoulli_B1(chi), precondition_error);
      continue;
    }
    REQUIRE(gen_bernoulli_B1(chi).rational_part() == Rat(-1, 3));
  }
  auto F4 = make_field(4, {});
  for (auto& chi : characters(F4))
    if (!chi.is_trivial()) REQUIRE(gen_bernoulli_B1(chi).rational_part() == Rat(-1, 2));
  // B_{1,chi} = 0 for even nontrivial chi
  auto F5r = make_field(5, {4});
  for (auto& chi : characters(F5r))
    if (!chi.is_trivial()) REQUIRE(gen_bernoulli_B1(chi).is_zero());
}

TEST_CASE("character evaluation of sigma matches the Bernoulli oracle") {
  for (long f : {3L, 4L, 5L, 15L, 20L}) {
    auto rep = stick_eval_identity_check(make_field(f, {}));
    REQUIRE(rep.passed);
    REQUIRE(rep.sign == +1);
    REQUIRE(rep.characters_checked == make_field(f, {})->order());
  }
  REQUIRE_THROWS_AS(stick_eval_identity_check(make_field(5, {4})), precondition_error);
}

TEST_CASE("padic generalized Bernoulli values reduce correctly") {
  // odd omega power: a unit value for the regular prime 5
  Padic b = padic_bernoulli_B1(5, 1, 6);
  REQUIRE_FALSE(b.is_zero());
  REQUIRE(b.val() == 0);
  // even nontrivial omega power: the character is even, the value vanishes
  REQUIRE(padic_bernoulli_B1(5, 2, 6).is_zero());
}

TEST_CASE("kummer congruences, regular and irregular") {
  auto r52 = kummer_check(5, 2);
  REQUIRE(r52.holds);
  REQUIRE_FALSE(r52.irregular);
  auto r74 = kummer_check(7, 4);
  REQUIRE(r74.holds);
  REQUIRE_FALSE(r74.irregular);
  // 37 | numerator(B_32)
  auto r37 = kummer_check(37, 32);
  REQUIRE(r37.holds);
  REQUIRE(r37.irregular);
  REQUIRE_THROWS_AS(kummer_check(9, 2), precondition_error);
  REQUIRE_THROWS_AS(kummer_check(7, 3), precondition_error);
}

TEST_CASE("irregular index oracle") {
  REQUIRE(irregular_indices(37) == std::vector<long>{32});
  REQUIRE(irregular_indices(59) == std::vector<long>{44});
  REQUIRE(irregular_indices(31).empty());
}

TEST_CASE("relative class numbers of small cyclotomic fields") {
  REQUIRE(minus_class_number(3) == 1);
  REQUIRE(minus_class_number(5) == 1);
  REQUIRE(minus_class_number(19) == 1);
  REQUIRE(minus_class_number(23) == 3);
}

TEST_CASE("eigenspace annihilation table cross-checks irregularity") {
  auto t37 = annihilation_consistency(37, 5);
  REQUIRE(t37.consistent);
  REQUIRE(t37.irregular_even == std::vector<long>{32});
  std::vector<long> flagged;
  for (auto& r : t37.rows)
    if (r.flagged && r.k != 1) flagged.push_back(r.k);
  REQUIRE(flagged == std::vector<long>{5});
  for (auto& r : t37.rows) REQUIRE(r.total_val == r.twist_val + r.bernoulli_val);

  auto t5 = annihilation_consistency(5, 3);
  REQUIRE(t5.consistent);
  for (auto& r : t5.rows)
    if (r.k != 1) REQUIRE_FALSE(r.flagged);

  auto t3 = annihilation_consistency(3, 5);
  REQUIRE(t3.consistent);
  REQUIRE(t3.rows.size() == 1);
  REQUIRE(t3.excluded == std::vector<long>{1});

  REQUIRE_THROWS_AS(annihilation_consistency(5, 4), precondition_error);
  REQUIRE_THROWS_AS(annihilation_consistency(5, 15), precondition_error);
}
