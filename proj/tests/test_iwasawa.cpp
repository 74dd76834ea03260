#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "stickel/iwasawa.hpp"

using namespace stickel;

namespace {

IwasawaElement random_elt(const TowerPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(0, 80);
  std::vector<GroupRingZl> a;
  for (long k = 0; k < ctx->tdeg_N(); ++k) {
    GroupRingZl c(ctx->delta());
    for (long g : ctx->delta()->elements()) c.add_term(g, ctx->zmod(Int(dist(rng))));
    a.push_back(c);
  }
  return IwasawaElement(ctx, std::move(a));
}

GroupRingZl lift_integral(const TowerPtr& ctx, const FieldPtr& Fn, const GroupRingQ& s) {
  GroupRingZl r(Fn);
  for (auto& [g, q] : s.coeffs()) r.add_term(g, ctx->zmod(q.get_num()));
  return r;
}

}  // namespace

TEST_CASE("tower construction over small bases") {
  auto t3 = make_tower(3, make_field(3, {}), 8, 6);
  REQUIRE(t3->level_offset() == 0);
  REQUIRE(t3->prime_to_ell_conductor() == 1);
  REQUIRE(t3->delta()->order() == 2);
  REQUIRE(t3->level_conductor(0) == 3);
  REQUIRE(t3->level_conductor(2) == 27);
  REQUIRE(t3->level_field(1)->order() == 6);

  auto t9 = make_tower(3, make_field(9, {}), 8, 6);
  REQUIRE(t9->level_offset() == 1);
  REQUIRE(t9->delta()->conductor() == 3);

  auto t15 = make_tower(5, make_field(15, {}), 6, 5);
  REQUIRE(t15->prime_to_ell_conductor() == 3);
  REQUIRE(t15->delta()->order() == 8);
}

TEST_CASE("tower preconditions") {
  // full Q(zeta_63): v_3(phi(63)) = 2 but v_3(63) - 1 = 1
  REQUIRE_THROWS_AS(make_tower(3, make_field(63, {}), 8, 6), precondition_error);
  // cubic field of conductor 9 does not contain mu_3
  REQUIRE_THROWS_AS(make_tower(3, make_field(9, {8}), 8, 6), precondition_error);
  REQUIRE_THROWS_AS(make_tower(3, make_field(5, {}), 8, 6), precondition_error);
  REQUIRE_THROWS_AS(make_tower(4, make_field(4, {}), 8, 6), precondition_error);
}

TEST_CASE("group elements split as delta times gamma power") {
  auto ctx = make_tower(3, make_field(9, {}), 10, 6);
  long n = 2;
  auto Fn = ctx->level_field(n);
  REQUIRE(ctx->gamma_rep(1) == 4);
  REQUIRE(ctx->kappa(ctx->delta()->conjugation()) == ctx->modulus() - 1);
  for (long a : Fn->units()) {
    auto [d, t] = ctx->decompose(n, a, Fn);
    long rebuilt = ctx->delta_lift(n, d, Fn);
    long g = Fn->canonical_rep(ctx->gamma_rep(n));
    for (long i = 0; i < t; ++i) rebuilt = Fn->mul(rebuilt, g);
    REQUIRE(rebuilt == Fn->canonical_rep(a));
  }
}

TEST_CASE("graded congruence grades precision by degree") {
  auto ctx = make_tower(3, make_field(3, {}), 8, 4);
  IwasawaElement x = IwasawaElement::unit(ctx);
  // perturbation by ell at top degree is below the grading, at degree 0 it is not
  IwasawaElement top(ctx);
  std::vector<GroupRingZl> c(4, GroupRingZl(ctx->delta()));
  c[3] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(Int(3)));
  REQUIRE(graded_congruent(x, x + IwasawaElement(ctx, c)));
  std::vector<GroupRingZl> c0(4, GroupRingZl(ctx->delta()));
  c0[0] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(Int(3)));
  REQUIRE_FALSE(graded_congruent(x, x + IwasawaElement(ctx, c0)));
}

TEST_CASE("parity idempotents and the mirror swap") {
  for (auto ctx : {make_tower(3, make_field(3, {}), 8, 5), make_tower(5, make_field(5, {}), 6, 5)}) {
    auto ep = e_plus(ctx), em = e_minus(ctx);
    REQUIRE(ep + em == IwasawaElement::unit(ctx));
    REQUIRE((ep * em).is_zero());
    REQUIRE(ep * ep == ep);
    REQUIRE(mirror(ep) == em);
    REQUIRE(mirror(em) == ep);
  }
}

TEST_CASE("mirror is a graded involution and multiplicative") {
  std::mt19937 rng(12345);
  for (auto ctx : {make_tower(3, make_field(3, {}), 8, 7), make_tower(5, make_field(5, {}), 6, 6)}) {
    for (int rep = 0; rep < 15; ++rep) {
      auto x = random_elt(ctx, rng);
      auto y = random_elt(ctx, rng);
      REQUIRE(graded_congruent(mirror(mirror(x)), x));
      REQUIRE(graded_congruent(mirror(x * y), mirror(x) * mirror(y)));
      REQUIRE_FALSE(mirror(x + IwasawaElement::tvar(ctx)).exact());
    }
  }
}

TEST_CASE("tate twist laws") {
  std::mt19937 rng(777);
  auto ctx = make_tower(3, make_field(3, {}), 8, 7);
  for (int rep = 0; rep < 15; ++rep) {
    auto x = random_elt(ctx, rng);
    REQUIRE(tate_twist(x, 0) == x);
    REQUIRE(tate_twist(tate_twist(x, 2), 3) == tate_twist(x, 5));
    REQUIRE(tate_twist(tate_twist(x, 4), -4) == x);
    REQUIRE(graded_congruent(mirror(tate_twist(x, 2)), tate_twist(mirror(x), -2)));
    REQUIRE(tate_twist(x, 1).exact());
  }
  // twist of T by 1: T maps to kappa(gamma)(1+T) - 1 = 3 + 4T
  auto tw = tate_twist(IwasawaElement::tvar(ctx), 1);
  std::vector<GroupRingZl> want(7, GroupRingZl(ctx->delta()));
  want[0] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(Int(3)));
  want[1] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(Int(4)));
  REQUIRE(tw == IwasawaElement(ctx, want));
}

TEST_CASE("coherent elements reduce to the finite-level twisted elements") {
  auto ctx = make_tower(3, make_field(3, {}), 8, 28);
  for (long c : {5L, 7L}) {
    for (long n = 0; n <= 2; ++n) {
      auto x = coherent_stickelberger(ctx, c, n);
      REQUIRE(x.exact());
      auto Fn = ctx->level_field(n);
      REQUIRE(reduce_mod_level(x, n) == lift_integral(ctx, Fn, twisted_stickelberger(Fn, c)));
    }
    // deeper levels restrict to shallower ones through the algebra
    auto x2 = coherent_stickelberger(ctx, c, 2);
    auto F0 = ctx->level_field(0);
    REQUIRE(restrict_ring(ctx->level_field(2), F0, reduce_mod_level(x2, 2)) ==
            lift_integral(ctx, F0, twisted_stickelberger(F0, c)));
  }
}

TEST_CASE("level zero reduction of the 5-twist is conjugation minus one") {
  auto ctx = make_tower(3, make_field(3, {}), 8, 6);
  auto r = reduce_mod_level(coherent_stickelberger(ctx, 5, 0), 0);
  auto F0 = ctx->level_field(0);
  GroupRingZl want = GroupRingZl::basis(F0, F0->conjugation(), ctx->zmod(Int(1))) -
                     GroupRingZl::scalar(F0, ctx->zmod(Int(1)));
  REQUIRE(r == want);
}

TEST_CASE("truncated series cannot be reduced to a level") {
  auto ctx = make_tower(3, make_field(3, {}), 8, 2);
  auto x = coherent_stickelberger(ctx, 5, 1);  // degree < 3 but N = 2: tail dropped
  REQUIRE_FALSE(x.exact());
  REQUIRE_THROWS_AS(reduce_mod_level(x, 1), precondition_error);
}

TEST_CASE("stickelberger lattice index at the bottom of the tower") {
  auto ctx3 = make_tower(3, make_field(3, {}), 8, 4);
  auto r = ideal_index(ctx3, 0, {5, 7});
  REQUIRE(r.certified);
  REQUIRE(r.valuation == 0);
  REQUIRE(r.precision == 8);

  auto ctx5 = make_tower(5, make_field(5, {}), 8, 4);
  auto r5 = ideal_index(ctx5, 0, {3, 7, 9});
  REQUIRE(r5.certified);
  REQUIRE(r5.valuation == 0);
  REQUIRE(r5.working_level == 6);
  REQUIRE(r5.precision == 7);

  auto none = ideal_index(ctx3, 0, {});
  REQUIRE_FALSE(none.certified);
  REQUIRE_FALSE(none.valuation.has_value());
}

TEST_CASE("index at level one with a tate twist stays certified") {
  auto ctx = make_tower(3, make_field(3, {}), 16, 4);
  auto r = ideal_index(ctx, 1, {5, 7, 11});
  REQUIRE(r.certified);
  REQUIRE(r.valuation == 0);
  REQUIRE(r.precision == 11);
  auto rt = ideal_index(ctx, 0, {5, 7}, 2);
  REQUIRE(rt.certified);
  REQUIRE(rt.valuation.has_value());
}
