#pragma once

#include <optional>

#include "stickel/group_ring.hpp"

namespace stickel {

/// Normalized Stickelberger element σ_F = -Σ (1/2 - a/f)·(F/a)^{-1}, summed
/// over 0 < a < f coprime to f. Zero exactly when F is real.
inline GroupRingQ stickelberger(const FieldPtr& F) {
  long f = F->conductor();
  if (f <= 1) throw precondition_error("stickelberger: conductor > 1 required");
  GroupRingQ s(F);
  for (long a : F->units()) {
    Rat c = Rat(1, 2) - Rat(a, f);
    s.add_term(F->inv(a), -c);
  }
  return s;
}

struct ImaginaryFactor {
  GroupRingQ element;  // σ'_F
  int sign;            // certified: σ_F = sign · (1 - τ̄) σ'_F
};

/// Half-sum factor σ'_F with the certified identity σ_F = ±(1-τ̄)σ'_F.
inline ImaginaryFactor imaginary_factor(const FieldPtr& F) {
  if (!F->is_imaginary()) throw precondition_error("imaginary_factor: field is real");
  long f = F->conductor();
  GroupRingQ sp(F);
  for (long a : F->units()) {
    if (2 * a >= f) continue;
    sp.add_term(F->inv(a), Rat(1, 2) - Rat(a, f));
  }
  GroupRingQ one_minus_tau =
      GroupRingQ::scalar(F, Rat(1)) - GroupRingQ::basis(F, F->conjugation(), Rat(1));
  GroupRingQ s = stickelberger(F);
  GroupRingQ prod = one_minus_tau * sp;
  if (prod == s) return {sp, +1};
  if (-prod == s) return {sp, -1};
  throw consistency_error("imaginary_factor: σ_F is not ±(1-τ̄)σ'_F");
}

/// Twist factor δ_F^c = 1 - c·(F/c)^{-1} for odd c coprime to f.
inline GroupRingQ twist_factor(const FieldPtr& F, long c) {
  long f = F->conductor();
  if (c % 2 == 0) throw precondition_error("twist_factor: c must be odd");
  if (gcd_long(mod_floor(c, f), f) != 1)
    throw precondition_error("twist_factor: c must be coprime to the conductor");
  GroupRingQ d = GroupRingQ::scalar(F, Rat(1));
  d.add_term(F->inv(c), Rat(-c));
  return d;
}

/// Twisted Stickelberger element σ_F^c = δ_F^c·σ_F, verified integral.
inline GroupRingQ twisted_stickelberger(const FieldPtr& F, long c) {
  GroupRingQ s = twist_factor(F, c) * stickelberger(F);
  for (auto& [g, q] : s.coeffs())
    if (q.get_den() != 1)
      throw consistency_error("twisted_stickelberger: non-integer coefficient");
  return s;
}

struct RestrictionReport {
  bool equal;
  GroupRingQ lhs;                  // N_{F/K}(σ_F^{(c)})
  GroupRingQ rhs;                  // Π (1 - (K/p)^{-1}) · σ_K^{(c)}
  std::vector<long> euler_primes;  // primes dividing f_F but not f_K
};

/// Both sides of the restriction identity
/// N_{F/K}(σ_F^{(c)}) = Π_{p | f_F, p∤f_K} (1 - (K/p)^{-1}) σ_K^{(c)}.
inline RestrictionReport check_restriction(const FieldPtr& F, const FieldPtr& K,
                                           std::optional<long> c = std::nullopt) {
  if (K->conductor() <= 1)
    throw precondition_error("check_restriction: K = Q is excluded");
  if (!is_subfield(K, F)) throw precondition_error("check_restriction: K not a subfield of F");
  GroupRingQ sF = c ? twisted_stickelberger(F, *c) : stickelberger(F);
  GroupRingQ sK = c ? twisted_stickelberger(K, *c) : stickelberger(K);
  GroupRingQ lhs = restrict_ring(F, K, sF);
  GroupRingQ factor = GroupRingQ::scalar(K, Rat(1));
  std::vector<long> euler;
  for (long p : prime_divisors(F->conductor())) {
    if (K->conductor() % p == 0) continue;
    euler.push_back(p);
    GroupRingQ e = GroupRingQ::scalar(K, Rat(1));
    e.add_term(K->inv(p), Rat(-1));
    factor = factor * e;
  }
  GroupRingQ rhs = factor * sK;
  return {lhs == rhs, lhs, rhs, euler};
}

/// Largest subfield of F in which p splits completely (the decomposition
/// subfield): cut out, inside the prime-to-p part of the conductor, by the
/// kernel of F together with the Frobenius class of p.
inline FieldPtr decomposition_subfield(const FieldPtr& F, long p) {
  long f = F->conductor();
  long fp = f;
  while (fp % p == 0) fp /= p;
  std::vector<long> gens;
  for (long h : F->kernel()) gens.push_back(mod_floor(h, std::max<long>(fp, 1)));
  if (fp > 1) gens.push_back(mod_floor(p, fp));
  if (fp <= 2) return AbelianField::make(1, {});
  return AbelianField::reduce_to_exact_conductor(fp, gens);
}

struct RamifiedAnnihilationReport {
  bool vacuous;  // decomposition subfield is Q
  bool zero;     // N_{F/K}(σ_F) = 0
  FieldPtr decomposition_field;
};

/// Group-ring identity behind the annihilation of ramified primes:
/// the restriction of σ_F to the decomposition subfield of p vanishes.
inline RamifiedAnnihilationReport ramified_annihilation_check(const FieldPtr& F, long p) {
  if (!is_prime(p) || F->conductor() % p != 0)
    throw precondition_error("ramified_annihilation_check: p must be a prime dividing f");
  FieldPtr K = decomposition_subfield(F, p);
  GroupRingQ r = restrict_ring(F, K, stickelberger(F));
  // K = Q falls outside the restriction identity's scope; the restriction is
  // still computed (it is the augmentation) and reported as vacuous.
  return {K->conductor() <= 1, r.is_zero(), K};
}

}  // namespace stickel
