#include <catch2/catch_amalgamated.hpp>

#include "stickel/dirichlet.hpp"

using namespace stickel;

TEST_CASE("cyclotomic fields and their basic Galois data") {
  auto F = make_field(7, {});
  REQUIRE(F->order() == 6);
  REQUIRE(F->is_imaginary());
  REQUIRE(F->conjugation() == F->canonical_rep(6));
  REQUIRE(F->mul(3, 5) == 1);
  REQUIRE(F->inv(3) == 5);
}

TEST_CASE("quadratic subfield of Q(zeta_5)") {
  auto F = make_field(5, {4});  // kernel {1,4}: the real quadratic field
  REQUIRE(F->order() == 2);
  REQUIRE_FALSE(F->is_imaginary());
  REQUIRE(F->canonical_rep(4) == 1);
  REQUIRE(F->canonical_rep(3) == 2);
}

TEST_CASE("exact conductor is enforced") {
  // 4 generates {1,4,7} mod 9, the units congruent to 1 mod 3
  REQUIRE_THROWS_AS(AbelianField::make(9, {4}), precondition_error);
  auto F = AbelianField::reduce_to_exact_conductor(9, {4});
  REQUIRE(F->conductor() == 3);
  REQUIRE(F->order() == 2);
}

TEST_CASE("subfield lattice of Q(zeta_15)") {
  auto F = make_field(15, {});
  auto subs = subfields(F);
  REQUIRE(subs.size() == 8);
  std::map<long, int> by_conductor;
  for (auto& K : subs) {
    by_conductor[K->conductor()]++;
    REQUIRE(is_subfield(K, F));
  }
  REQUIRE(by_conductor[1] == 1);
  REQUIRE(by_conductor[3] == 1);
  REQUIRE(by_conductor[5] == 2);   // Q(zeta_5) and its quadratic subfield
  REQUIRE(by_conductor[15] == 4);
}

TEST_CASE("restriction of Galois elements is compatible with the Artin symbol") {
  auto F = make_field(45, {});
  auto K = make_field(15, {});
  for (long a : {2L, 7L, 11L, 44L}) {
    auto g = artin_symbol(F, a);
    auto r = restrict_to(F, K, g);
    REQUIRE(r == artin_symbol(K, a));
  }
  REQUIRE(restrict_to(F, K, complex_conjugation(F)) == complex_conjugation(K));
}

TEST_CASE("character group has the order of the Galois group") {
  for (long f : {5L, 8L, 12L, 21L}) {
    auto F = make_field(f, {});
    auto chars = characters(F);
    REQUIRE(chars.size() == static_cast<size_t>(F->order()));
  }
}

TEST_CASE("character orthogonality") {
  auto F = make_field(12, {});
  for (auto& chi : characters(F)) {
    Cyclotomic s(chi.order());
    for (long g : F->elements()) s = s + chi.value(g);
    if (chi.is_trivial())
      REQUIRE(s.rational_part() == F->order());
    else
      REQUIRE(s.is_zero());
  }
}

TEST_CASE("characters of Q(zeta_5): orders and parity") {
  auto F = make_field(5, {});
  std::multiset<long> orders;
  int odd = 0;
  for (auto& chi : characters(F)) {
    orders.insert(chi.order());
    if (chi.is_odd()) ++odd;
  }
  REQUIRE(orders == std::multiset<long>{1, 2, 4, 4});
  REQUIRE(odd == 2);
}

TEST_CASE("conductor and primitivization of an imprimitive character") {
  auto F = make_field(15, {});
  int found = 0;
  for (auto& chi : characters(F)) {
    if (chi.is_trivial() || chi.conductor() == 15) continue;
    ++found;
    auto prim = chi.primitive();
    REQUIRE(prim.modulus() == chi.conductor());
    REQUIRE(prim.order() == chi.order());
    for (long a : F->units()) REQUIRE(prim.value(mod_floor(a, prim.modulus())) == chi.value(a));
  }
  REQUIRE(found == 4);  // the quadratic mod 3 and the three nontrivial characters mod 5
}

TEST_CASE("padic character values are roots of unity matching exponents") {
  auto F = make_field(5, {});
  for (auto& chi : characters(F)) {
    if (chi.order() == 1) continue;
    Padic v = chi.padic_value(2, 5, 8);
    REQUIRE(v.pow(chi.order()) == Padic::from_int(5, 1, 8));
  }
}
