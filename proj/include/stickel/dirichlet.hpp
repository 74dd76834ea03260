#pragma once

#include "stickel/abelian_field.hpp"
#include "stickel/cyclotomic.hpp"
#include "stickel/padic.hpp"

namespace stickel {

/// Cyclic decomposition of (Z/fZ)^× with CRT-glued global generators.
struct UnitGroupStructure {
  long f = 1;
  std::vector<long> gens;    // global generators
  std::vector<long> orders;  // component orders
  std::unordered_map<long, std::vector<long>> dlog;  // unit -> exponent vector

  static const UnitGroupStructure& get(long f);
};

inline const UnitGroupStructure& UnitGroupStructure::get(long f) {
  static std::map<long, UnitGroupStructure> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f);
  if (it != cache.end()) return it->second;

  UnitGroupStructure s;
  s.f = f;
  if (f > 1) {
    for (auto& [p, e] : factorize(f)) {
      long pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      std::vector<std::pair<long, long>> local;  // (local gen, order) mod pe
      if (p == 2) {
        if (e == 2) local.push_back({3, 2});
        else if (e >= 3) {
          local.push_back({pe - 1, 2});
          local.push_back({5, pe / 4});
        }
      } else {
        local.push_back({primitive_root(pe), euler_phi(pe)});
      }
      for (auto& [g, o] : local) {
        // lift: ≡ g mod pe, ≡ 1 mod f/pe
        s.gens.push_back(crt(g, pe, 1 % (f / pe) == 0 ? 0 : 1, f / pe));
        s.orders.push_back(o);
      }
    }
    // discrete logs by direct enumeration of the generator lattice
    std::vector<long> exps(s.gens.size(), 0);
    std::function<void(size_t, long)> walk = [&](size_t i, long val) {
      if (i == s.gens.size()) {
        s.dlog[val] = exps;
        return;
      }
      long v = val;
      for (long e = 0; e < s.orders[i]; ++e) {
        exps[i] = e;
        walk(i + 1, v);
        v = Int(Int(v) * s.gens[i] % f).get_si();
      }
      exps[i] = 0;
    };
    walk(0, 1);
    if (s.dlog.size() != static_cast<size_t>(euler_phi(f)))
      throw consistency_error("UnitGroupStructure: generator decomposition failed");
  } else {
    s.dlog[1] = {};
  }
  cache[f] = std::move(s);
  return cache[f];
}

/// Character of (Z/fZ)^× trivial on the kernel of its field, with values the
/// e-th roots of unity ζ_e^{k(a)}.
class DirichletCharacter {
 public:
  DirichletCharacter(FieldPtr field, long order, std::unordered_map<long, long> exps)
      : field_(std::move(field)), e_(order), k_(std::move(exps)) {}

  const FieldPtr& field() const { return field_; }
  long modulus() const { return field_->conductor(); }
  long order() const { return e_; }

  /// Exponent k with χ(a) = ζ_e^k; a must be a unit mod f.
  long exponent(long a) const {
    long f = modulus();
    if (f == 1) return 0;
    a = mod_floor(a, f);
    auto it = k_.find(a);
    if (it == k_.end())
      throw precondition_error("DirichletCharacter: argument not coprime to the modulus");
    return it->second;
  }

  Cyclotomic value(long a) const { return Cyclotomic::zeta_power(e_, exponent(a)); }
  Cyclotomic value_at_inverse(long a) const { return Cyclotomic::zeta_power(e_, -exponent(a)); }

  bool is_trivial() const { return e_ == 1; }
  bool is_odd() const {
    long f = modulus();
    return f > 2 && exponent(f - 1) != 0;
  }

  /// χ^t as a character of the same field (its order divides e).
  DirichletCharacter power(long t) const {
    std::unordered_map<long, long> k2;
    long g = e_;
    for (auto& [a, k] : k_) g = std::gcd(g, mod_floor(k * t, e_));
    long e2 = g == 0 ? 1 : e_ / g;
    for (auto& [a, k] : k_) k2[a] = mod_floor(k * t, e_) / (e_ / e2);
    return DirichletCharacter(field_, e2, std::move(k2));
  }

  DirichletCharacter conjugate() const { return power(-1); }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.e_ == b.e_ && a.k_ == b.k_;
  }

  /// Exact conductor: smallest f' | f with χ trivial on units ≡ 1 mod f'.
  long conductor() const {
    long f = modulus();
    for (long fp : divisors(f)) {
      bool ok = true;
      for (long a : field_->units())
        if (a % fp == 1 % fp && exponent(a) != 0) { ok = false; break; }
      if (ok) return fp;
    }
    return f;
  }

  /// The primitive character of conductor f' inducing χ.
  DirichletCharacter primitive() const {
    long f = modulus(), fp = conductor();
    if (fp == f) return *this;
    auto K = AbelianField::make(fp, kernel_gens_mod(fp), false);
    std::unordered_map<long, long> k2;
    for (long a : K->units()) {
      long b = a;
      while (gcd_long(b, f) != 1) b += fp;  // lift to a unit mod f
      k2[a] = exponent(b);
    }
    return DirichletCharacter(K, e_, std::move(k2));
  }

  /// ℓ-adic realization through the Teichmüller embedding: requires e | ℓ-1.
  /// ζ_e ↦ ω(g)^{(ℓ-1)/e} for the smallest primitive root g mod ℓ.
  Padic padic_value(long a, long ell, long prec) const {
    if ((ell - 1) % e_ != 0)
      throw precondition_error("padic_value: character order does not divide ell-1");
    Int mod = pow_int(Int(ell), prec);
    Int zeta = teichmuller_lift(ell, Int(primitive_root(ell)), prec);
    zeta = pow_mod(zeta, Int((ell - 1) / e_), mod);
    return Padic(ell, 0, pow_mod(zeta, Int(exponent(a)), mod), prec);
  }

 private:
  std::vector<long> kernel_gens_mod(long fp) const {
    // kernel of the primitive character: all units a mod fp with χ(lift a) = 0 exponent
    std::vector<long> gens;
    long f = modulus();
    for (long a = 1; a < fp; ++a) {
      if (gcd_long(a, fp) != 1) continue;
      long b = a;
      while (gcd_long(b, f) != 1) b += fp;
      if (exponent(b) == 0) gens.push_back(a);
    }
    if (fp == 1) gens = {};
    return gens;
  }

  FieldPtr field_;
  long e_;
  std::unordered_map<long, long> k_;
};

/// The dual group of G_F: exactly |G_F| characters trivial on the kernel.
inline std::vector<DirichletCharacter> characters(const FieldPtr& F) {
  long f = F->conductor();
  if (f == 1)
    return {DirichletCharacter(F, 1, {{1, 0}})};
  const auto& st = UnitGroupStructure::get(f);
  long L = 1;
  for (long o : st.orders) L = lcm_long(L, o);

  std::vector<DirichletCharacter> out;
  std::vector<long> c(st.gens.size(), 0);
  while (true) {
    // exponent of χ(a) as a power of ζ_L
    bool trivial_on_H = true;
    for (long h : F->kernel()) {
      long k = 0;
      const auto& dl = st.dlog.at(h);
      for (size_t i = 0; i < c.size(); ++i) k = mod_floor(k + c[i] * dl[i] * (L / st.orders[i]), L);
      if (k != 0) { trivial_on_H = false; break; }
    }
    if (trivial_on_H) {
      std::unordered_map<long, long> kmap;
      long g = L;
      for (long a : F->units()) {
        long k = 0;
        const auto& dl = st.dlog.at(a);
        for (size_t i = 0; i < c.size(); ++i)
          k = mod_floor(k + c[i] * dl[i] * (L / st.orders[i]), L);
        kmap[a] = k;
        g = std::gcd(g, k);
      }
      long e = g == 0 ? 1 : L / g;
      for (auto& [a, k] : kmap) k /= (L / e);
      out.push_back(DirichletCharacter(F, e, std::move(kmap)));
    }
    // next tuple
    size_t i = 0;
    while (i < c.size() && ++c[i] == st.orders[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  if (out.size() != static_cast<size_t>(F->order()))
    throw consistency_error("characters: dual group has wrong size");
  return out;
}

}  // namespace stickel
