#pragma once

#include <mutex>
#include <optional>

#include "stickel/group_ring.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel {

/// B_k with the convention B_1 = -1/2, via the recurrence
/// B_k = -1/(k+1) Σ_{j<k} C(k+1,j) B_j. Cached; reads are serialized.
inline Rat ordinary_bernoulli(long k) {
  if (k < 0) throw precondition_error("ordinary_bernoulli: k >= 0 required");
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= k) {
    long n = static_cast<long>(cache.size());
    Rat s(0);
    for (long j = 0; j < n; ++j) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
      s += Rat(binom) * cache[j];
    }
    s /= -(n + 1);
    cache.push_back(s);
  }
  return cache[k];
}

/// Generalized Bernoulli number B_{1,χ} = (1/f')Σ_{a=1}^{f'} χ'(a)·a evaluated
/// at the primitive character χ' inducing χ.
inline Cyclotomic gen_bernoulli_B1(const DirichletCharacter& chi) {
  if (chi.is_trivial()) throw precondition_error("gen_bernoulli_B1: trivial character");
  DirichletCharacter prim = chi.primitive();
  long f = prim.modulus(), e = prim.order();
  Cyclotomic s(e);
  for (long a : prim.field()->units()) s = s + Rat(a) * prim.value(a);
  return Rat(1, f) * s;
}

struct StickEvalReport {
  bool passed;
  int sign;  // global sign s with χ(σ_F) = s·B_{1,χ̄'}·Π_{p|f, p∤f_χ}(1 - χ̄'(p))
  long characters_checked;
};

/// Certifies the character-theoretic evaluation of σ_F against the independent
/// Bernoulli oracle. Imprimitive characters pick up the Euler factors
/// Π_{p | f, p ∤ f_χ}(1 - χ̄'(p)); a single global sign must fit every χ.
inline StickEvalReport stick_eval_identity_check(const FieldPtr& F) {
  if (!F->is_imaginary()) throw precondition_error("stick_eval_identity_check: field is real");
  GroupRingQ s = stickelberger(F);
  std::optional<int> sign;
  long checked = 0;
  bool passed = true;
  for (auto& chi : characters(F)) {
    ++checked;
    if (chi.is_trivial()) {
      if (!char_eval(s, chi).is_zero()) passed = false;
      continue;
    }
    Cyclotomic lhs = char_eval(s, chi);
    DirichletCharacter prim = chi.conjugate().primitive();
    long L = lcm_long(chi.order(), prim.order());
    Cyclotomic rhs = gen_bernoulli_B1(chi.conjugate()).to_order(L);
    for (long p : prime_divisors(F->conductor())) {
      if (prim.modulus() % p == 0) continue;
      rhs = rhs * (Cyclotomic(L, Rat(1)) - prim.value(p).to_order(L));
    }
    Cyclotomic l = lhs.to_order(L);
    if (l.is_zero() && rhs.is_zero()) continue;
    int this_sign = 0;
    if (l == rhs) this_sign = +1;
    else if (l == -rhs) this_sign = -1;
    if (this_sign == 0) { passed = false; continue; }
    if (!sign) sign = this_sign;
    else if (*sign != this_sign) passed = false;
  }
  return {passed, sign.value_or(+1), checked};
}

struct KummerReport {
  bool holds;           // B_{1,ω^{k-1}} ≡ B_k/k mod ℓ
  bool irregular;       // both sides ≡ 0 mod ℓ
  Padic side_character;  // B_{1,ω^{k-1}}
  Padic side_ordinary;   // B_k / k
};

/// ℓ-adic generalized Bernoulli number B_{1,ω^j} = (1/ℓ)Σ_{a<ℓ} ω(a)^j·a,
/// through the Teichmüller embedding, at the given precision.
inline Padic padic_bernoulli_B1(long ell, long j, long prec) {
  if (ell == 2 || !is_prime(ell)) throw precondition_error("padic_bernoulli_B1: odd prime required");
  long work = prec + 2;
  Int mod = pow_int(Int(ell), work);
  Int sum(0);
  for (long a = 1; a < ell; ++a) {
    Int w = teichmuller_lift(ell, Int(a), work);
    sum = (sum + pow_mod(w, Int(mod_floor(j, ell - 1)), mod) * a) % mod;
  }
  Padic S(ell, 0, sum, work);
  return (S / Padic::from_int(ell, Int(ell), work)).truncated(prec);
}

/// Kummer congruence B_{1,ω^{k-1}} ≡ B_k/k mod ℓ for even k ≢ 0 mod ℓ-1,
/// both sides computed independently.
inline KummerReport kummer_check(long ell, long k) {
  if (ell == 2 || !is_prime(ell)) throw precondition_error("kummer_check: odd prime required");
  if (k < 2 || k > ell - 3 || k % 2 != 0)
    throw precondition_error("kummer_check: even k with 2 <= k <= ell-3 required");
  long prec = 4;
  Padic lhs = padic_bernoulli_B1(ell, k - 1, prec);
  Padic rhs = Padic::from_rational(ell, ordinary_bernoulli(k) / k, prec);
  Padic diff = lhs - rhs;
  bool holds = diff.is_zero() || diff.val() >= 1;
  bool irregular = (lhs.is_zero() || lhs.val() >= 1) && (rhs.is_zero() || rhs.val() >= 1);
  return {holds, irregular, lhs, rhs};
}

/// Even indices k, 2 ≤ k ≤ ℓ-3, with ℓ dividing the numerator of B_k.
inline std::vector<long> irregular_indices(long ell) {
  std::vector<long> out;
  for (long k = 2; k <= ell - 3; k += 2)
    if (ordinary_bernoulli(k).get_num() % ell == 0) out.push_back(k);
  return out;
}

/// Relative class number h⁻(p) = 2p·Π_{χ odd} (-½ B_{1,χ}) of Q(ζ_p),
/// evaluated exactly in Q(ζ_{p-1}); integrality is certified.
inline Int minus_class_number(long p) {
  if (p == 2 || !is_prime(p)) throw precondition_error("minus_class_number: odd prime required");
  FieldPtr F = make_field(p, {});
  long L = p - 1;
  Cyclotomic prod(L, Rat(2 * p));
  for (auto& chi : characters(F)) {
    if (!chi.is_odd()) continue;
    prod = prod * (Rat(-1, 2) * gen_bernoulli_B1(chi)).to_order(L);
  }
  if (!prod.is_rational())
    throw consistency_error("minus_class_number: product is not rational");
  Rat h = prod.rational_part();
  if (h.get_den() != 1 || h <= 0)
    throw consistency_error("minus_class_number: product is not a positive integer");
  return h.get_num();
}

struct AnnihilationRow {
  long k;             // χ = ω^k, k odd
  long twist_val;     // v_ℓ(1 - c·ω^{-k}(c))
  long bernoulli_val; // v_ℓ(B_{1,ω^{-k}})
  long total_val;     // v_ℓ(χ(σ_F^c))
  bool flagged;       // total_val > 0
};

struct AnnihilationTable {
  long ell, c;
  std::vector<AnnihilationRow> rows;
  std::vector<long> excluded;        // ω-component (k=1): the standard caveat
  std::vector<long> irregular_even;  // independent oracle: ℓ | numerator(B_k)
  bool consistent;  // flagged k (k≠1) are exactly {ℓ-k : k irregular even}
};

/// Eigenspace table of v_ℓ(ω^k(σ^c_F)) for F = Q(ζ_ℓ), computed through the
/// Teichmüller embedding as v(1 - c·ω^{-k}(c)) + v(B_{1,ω^{-k}}), and
/// cross-referenced against the ordinary-Bernoulli irregularity oracle.
inline AnnihilationTable annihilation_consistency(long ell, long c, long prec = 10) {
  if (ell == 2 || !is_prime(ell)) throw precondition_error("annihilation_consistency: odd prime required");
  if (c % 2 == 0 || mod_floor(c, ell) == 0 || gcd_long(mod_floor(c, ell), ell) != 1)
    throw precondition_error("annihilation_consistency: c must be odd and coprime to ell");
  AnnihilationTable t{ell, c, {}, {1}, irregular_indices(ell), true};
  long work = prec + 2;
  Int mod = pow_int(Int(ell), work);
  Int wc = teichmuller_lift(ell, Int(c), work);
  std::vector<long> flagged;
  for (long k = 1; k <= ell - 2; k += 2) {
    long j = mod_floor(-k, ell - 1);
    Padic twist = Padic::from_int(ell, 1, work) -
                  Padic::from_int(ell, Int(c), work) *
                      Padic(ell, 0, pow_mod(wc, Int(j), mod), work);
    Padic b1 = padic_bernoulli_B1(ell, j, work);
    Padic total = twist * b1;
    long tv = twist.is_zero() ? work : twist.val();
    long bv = b1.is_zero() ? work : b1.val();
    long v = total.is_zero() ? work : total.val();
    bool flag = v > 0;
    t.rows.push_back({k, tv, bv, v, flag});
    if (flag && k != 1) flagged.push_back(k);
  }
  std::vector<long> expected;
  for (long k : t.irregular_even) expected.push_back(ell - k);
  std::sort(expected.begin(), expected.end());
  t.consistent = flagged == expected;
  return t;
}

}  // namespace stickel
