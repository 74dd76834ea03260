#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "stickel/stickel.hpp"

using namespace stickel;

namespace {

struct GlobalOpts {
  long ell = 3;
  long M = 16;
  long N = 9;
  std::string format = "text";
  std::string cache_dir;
  unsigned long seed = 0;
};

std::string render(const GroupRingQ& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto& [g, c] : x.coeffs()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.get_str() + ")*[" + std::to_string(g) + "]";
  }
  return s;
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

void write_cache(const GlobalOpts& g) {
  if (g.cache_dir.empty()) return;
  std::ofstream out(g.cache_dir + "/bernoulli.json");
  if (out) out << bernoulli_cache_to_json(64).dump() << "\n";
}

int cmd_stick(const GlobalOpts& g, long f, const std::vector<long>& H, std::optional<long> c,
              std::optional<long> restrict_f) {
  FieldPtr F = make_field(f, H);
  json out;
  std::string text;
  if (!F->is_imaginary()) {
    out["sigma"] = "0";
    text = "sigma = 0 (real field)";
  } else {
    GroupRingQ s = stickelberger(F);
    out["sigma"] = to_json(s);
    text = "sigma = " + render(s);
    if (c) {
      GroupRingQ d = twist_factor(F, *c), sc = twisted_stickelberger(F, *c);
      out["delta_c"] = to_json(d);
      out["sigma_c"] = to_json(sc);
      text += "\ndelta_c = " + render(d) + "\nsigma_c = " + render(sc);
    }
  }
  if (restrict_f) {
    FieldPtr K = make_field(*restrict_f, {});
    auto rep = check_restriction(F, K, c);
    out["restriction"] = json{{"equal", rep.equal},
                              {"lhs", to_json(rep.lhs)},
                              {"rhs", to_json(rep.rhs)},
                              {"euler_primes", rep.euler_primes}};
    text += "\nrestriction to f=" + std::to_string(*restrict_f) + ": " +
            (rep.equal ? "equal" : "NOT EQUAL") + "\n  lhs = " + render(rep.lhs) +
            "\n  rhs = " + render(rep.rhs);
    if (!rep.equal) {
      emit(g, out, text);
      return 1;
    }
  }
  emit(g, out, text);
  return 0;
}

IwasawaElement random_element(const TowerPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(0, 1 << 20);
  std::vector<GroupRingZl> a;
  for (long k = 0; k < ctx->tdeg_N(); ++k) {
    GroupRingZl c(ctx->delta());
    for (long g : ctx->delta()->elements()) c.add_term(g, ctx->zmod(Int(d(rng))));
    a.push_back(std::move(c));
  }
  return IwasawaElement(ctx, std::move(a), false);
}

int cmd_iwasawa(const GlobalOpts& g, long f, const std::vector<long>& H,
                const std::string& action, std::vector<long> twists, long n, long i,
                bool selftest) {
  TowerPtr ctx = make_tower(g.ell, make_field(f, H), g.M, g.N);
  if (twists.empty()) {
    for (long c = 3; twists.empty(); c += 2)
      if (gcd_long(c, ctx->prime_to_ell_conductor() * ctx->ell()) == 1) twists.push_back(c);
  }
  long c0 = twists.front();

  if (action == "mirror") {
    if (selftest) {
      std::mt19937 rng(g.seed);
      for (int t = 0; t < 50; ++t) {
        auto x = random_element(ctx, rng);
        if (!graded_congruent(mirror(mirror(x)), x)) {
          emit(g, json{{"pass", false}, {"seed", g.seed}}, "double-mirror selftest: FAIL");
          return 1;
        }
      }
      emit(g, json{{"pass", true}}, "double-mirror selftest: pass");
      return 0;
    }
    auto x = coherent_stickelberger(ctx, c0, n);
    emit(g, to_json(mirror(x)), "mirror(sigma_c) = " + to_json(mirror(x)).dump());
    return 0;
  }
  if (action == "twist") {
    auto x = coherent_stickelberger(ctx, c0, n);
    auto t = tate_twist(x, i);
    bool id_ok = (i != 0) || (t == x);
    emit(g, json{{"element", to_json(t)}, {"identity_roundtrip", id_ok}},
         "twist(sigma_c, " + std::to_string(i) + ") = " + to_json(t).dump());
    return id_ok ? 0 : 1;
  }
  if (action == "symmetrize") {
    auto x = symmetrize(coherent_stickelberger(ctx, c0, n));
    emit(g, to_json(x), "symmetrize(sigma_c) = " + to_json(x).dump());
    return 0;
  }
  if (action == "reduce") {
    auto x = coherent_stickelberger(ctx, c0, n);
    auto r = reduce_mod_level(x, n);
    emit(g, to_json(r, ctx->ell(), ctx->prec_M()),
         "reduce(sigma_c, " + std::to_string(n) + ") = " +
             to_json(r, ctx->ell(), ctx->prec_M()).dump());
    return 0;
  }
  if (action == "index") {
    auto rep = ideal_index(ctx, n, twists, i);
    std::string text = "index valuation: ";
    text += rep.valuation ? std::to_string(*rep.valuation) : std::string("inconclusive");
    text += rep.certified ? " (certified)" : " (not certified)";
    emit(g, to_json(rep), text);
    return rep.certified ? 0 : 1;
  }
  throw CLI::ValidationError("unknown iwasawa action: " + action);
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, long p, long fmax, long count,
               long Mcheck, long cflag) {
  write_cache(g);
  if (suite == "bernoulli") {
    json rows = json::array();
    bool pass = true;
    for (long f = 3; f <= fmax; ++f) {
      if (f % 4 == 2) continue;
      for (auto& F : subfields(make_field(f, {}))) {
        if (F->conductor() != f || !F->is_imaginary()) continue;
        auto rep = stick_eval_identity_check(F);
        pass = pass && rep.passed;
        rows.push_back(json{{"f", f}, {"H", F->kernel()}, {"pass", rep.passed}, {"sign", rep.sign}});
      }
    }
    emit(g, json{{"pass", pass}, {"rows", rows}},
         std::string("bernoulli evaluation identity: ") + (pass ? "pass" : "FAIL"));
    return pass ? 0 : 1;
  }
  if (suite == "kummer") {
    bool pass = true;
    std::vector<long> irregular;
    for (long k = 2; k <= g.ell - 3; k += 2) {
      auto rep = kummer_check(g.ell, k);
      pass = pass && rep.holds;
      if (rep.irregular) irregular.push_back(k);
    }
    std::string text = std::string("kummer congruences: ") + (pass ? "pass" : "FAIL");
    if (!irregular.empty()) {
      text += "; irregular indices:";
      for (long k : irregular) text += " " + std::to_string(k);
    }
    emit(g, json{{"pass", pass}, {"irregular", irregular}}, text);
    return pass ? 0 : 1;
  }
  if (suite == "hminus") {
    Int h = minus_class_number(p);
    emit(g, json{{"p", p}, {"h_minus", h.get_str()}}, "h-(" + std::to_string(p) + ") = " + h.get_str());
    return 0;
  }
  if (suite == "consistency") {
    long c = cflag;
    if (c == 0) {
      c = primitive_root(g.ell);
      if (c % 2 == 0) c += g.ell;
    }
    auto t = annihilation_consistency(g.ell, c, 10);
    emit(g, to_json(t), std::string("annihilation consistency: ") +
                            (t.consistent ? "consistent" : "INCONSISTENT"));
    return t.consistent ? 0 : 1;
  }
  if (suite == "degree-zero") {
    std::mt19937 rng(g.seed);
    std::uniform_int_distribution<long> d(1, 1000000);
    bool pass = true;
    for (long t = 0; t < count; ++t) {
      Rat x(d(rng), d(rng));
      x.canonicalize();
      if (rng() & 1) x = -x;
      if (!degree_zero_check(x, g.ell, Mcheck).ok) pass = false;
    }
    emit(g, json{{"pass", pass}, {"count", count}, {"seed", g.seed}},
         std::string("degree-zero invariant: ") + (pass ? "pass" : "FAIL"));
    return pass ? 0 : 1;
  }
  if (suite == "restriction") {
    bool pass = true;
    std::mt19937 rng(g.seed);
    for (long f = 3; f <= fmax; ++f) {
      if (f % 4 == 2) continue;
      auto F = make_field(f, {});
      for (auto& K : subfields(F)) {
        if (K->conductor() <= 1) continue;
        if (!check_restriction(F, K).equal) pass = false;
        std::uniform_int_distribution<long> d(1, 200);
        for (int t = 0; t < 2; ++t) {
          long c = 2 * d(rng) + 1;
          while (gcd_long(mod_floor(c, f), f) != 1) c += 2;
          if (!check_restriction(F, K, c).equal) pass = false;
        }
      }
    }
    emit(g, json{{"pass", pass}, {"f_max", fmax}},
         std::string("restriction identities: ") + (pass ? "pass" : "FAIL"));
    return pass ? 0 : 1;
  }
  throw CLI::ValidationError("unknown suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and ell-adic Stickelberger element toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--ell", g.ell, "odd prime ell");
  app.add_option("--prec-M", g.M, "ell-adic precision exponent");
  app.add_option("--tdeg-N", g.N, "T-adic truncation degree");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", g.cache_dir, "directory for JSON caches");
  app.add_option("--seed", g.seed, "seed for randomized suites");

  long f = 3, n = 0, i = 0, p = 23, fmax = 60, count = 100, Mcheck = 12, cflag = 0;
  std::vector<long> H, twists;
  std::optional<long> twist_c, restrict_f;
  bool selftest = false;
  std::string action, suite;

  auto* stick = app.add_subcommand("stick", "Stickelberger elements and restriction checks");
  stick->fallthrough();
  stick->add_option("--f", f, "conductor")->required();
  stick->add_option("--H", H, "kernel subgroup generators (use -1 for complex conjugation)");
  stick->add_option("--c", twist_c, "twist parameter");
  stick->add_option("--restrict", restrict_f, "conductor of the cyclotomic subfield to restrict to");

  auto* iw = app.add_subcommand("iwasawa", "Iwasawa algebra operations over a tower");
  iw->fallthrough();
  iw->add_option("--f", f, "base conductor")->required();
  iw->add_option("--H", H, "kernel subgroup generators");
  iw->add_option("action", action, "mirror|twist|symmetrize|reduce|index")->required();
  iw->add_option("--c", twists, "twist parameters")->delimiter(',');
  iw->add_option("--n", n, "tower level");
  iw->add_option("--i", i, "Tate twist index");
  iw->add_flag("--selftest", selftest, "run the action's self test");

  auto* verify = app.add_subcommand("verify", "named verification suites");
  verify->fallthrough();
  verify->add_option("suite", suite, "bernoulli|kummer|hminus|consistency|degree-zero|restriction")
      ->required();
  verify->add_option("--p", p, "prime for hminus");
  verify->add_option("--f-max", fmax, "conductor bound");
  verify->add_option("--count", count, "number of random samples");
  verify->add_option("--M", Mcheck, "congruence precision for degree-zero");
  verify->add_option("--c", cflag, "twist for consistency (default: smallest odd primitive root)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (stick->parsed()) return cmd_stick(g, f, H, twist_c, restrict_f);
    if (iw->parsed()) return cmd_iwasawa(g, f, H, action, twists, n, i, selftest);
    if (verify->parsed()) return cmd_verify(g, suite, p, fmax, count, Mcheck, cflag);
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
