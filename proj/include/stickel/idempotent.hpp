#pragma once

#include "stickel/group_ring.hpp"

namespace stickel {

namespace detail {

/// Arithmetic in F_{p^r} = F_p[t]/(h), h irreducible of degree r. Coefficient
/// vectors have fixed length r.
struct FiniteField {
  long p;
  std::vector<long> h;  // monic modulus, h.size() == r+1, h[r] == 1

  long r() const { return static_cast<long>(h.size()) - 1; }

  std::vector<long> zero() const { return std::vector<long>(r(), 0); }

  std::vector<long> one() const {
    auto x = zero();
    if (!x.empty()) x[0] = 1;
    return x;
  }

  std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
    long n = r();
    std::vector<long> prod(2 * n - 1, 0);
    for (long i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (long j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (long d = 2 * n - 2; d >= n; --d) {
      long c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (long j = 0; j < n; ++j)
        prod[d - n + j] = mod_floor(prod[d - n + j] - c * h[j], p);
    }
    prod.resize(n);
    return prod;
  }

  std::vector<long> pow(std::vector<long> b, Int e) const {
    auto acc = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }

  bool is_one(const std::vector<long>& a) const { return a == one(); }
};

/// Deterministic search for a monic irreducible polynomial of degree r over F_p.
inline FiniteField make_finite_field(long p, long r) {
  if (r == 1) return {p, {0, 1}};
  // Enumerate candidates in a fixed order; test irreducibility by checking
  // t^{p^r} = t and gcd-freeness at proper divisors via t^{p^{r/q}} != t.
  std::vector<long> coeffs(r, 0);
  while (true) {
    FiniteField F{p, coeffs};
    F.h.push_back(1);
    // candidate must have nonzero constant term
    if (coeffs[0] != 0) {
      std::vector<long> t = F.zero();
      t[1 % r] = 1;
      Int pr = pow_int(Int(p), r);
      bool ok = F.pow(t, pr) == t;
      if (ok) {
        for (long q : prime_divisors(r)) {
          Int pq = pow_int(Int(p), r / q);
          if (F.pow(t, pq) == t) { ok = false; break; }
        }
      }
      if (ok) return F;
    }
    long i = 0;
    while (i < r && ++coeffs[i] == p) coeffs[i++] = 0;
    if (i == r) throw consistency_error("make_finite_field: no irreducible polynomial found");
  }
}

/// Element of exact multiplicative order e in F_{p^r}^× (requires e | p^r - 1),
/// found deterministically.
inline std::vector<long> element_of_order(const FiniteField& F, long e) {
  Int group = pow_int(Int(F.p), F.r()) - 1;
  if (group % e != 0) throw consistency_error("element_of_order: order does not divide p^r-1");
  Int cof = group / e;
  auto qs = prime_divisors(e);
  // walk candidates a = small polynomials in a fixed order
  std::vector<long> c(F.r(), 0);
  while (true) {
    long i = 0;
    while (i < F.r() && ++c[i] == F.p) c[i++] = 0;
    if (i == F.r()) throw consistency_error("element_of_order: exhausted field");
    auto y = F.pow(c, cof);
    if (y == F.zero()) continue;
    bool exact = F.is_one(F.pow(y, Int(e)));
    for (long q : qs)
      if (exact && F.is_one(F.pow(y, Int(e / q)))) exact = false;
    if (exact) return y;
  }
}

}  // namespace detail

/// Frobenius orbit {φ, φ^ℓ, φ^{ℓ²}, …}: the Q_ℓ-conjugacy class of φ.
inline std::vector<DirichletCharacter> frobenius_class(const DirichletCharacter& phi, long ell) {
  std::vector<DirichletCharacter> orbit{phi};
  DirichletCharacter cur = phi.power(ell);
  while (!(cur == phi)) {
    orbit.push_back(cur);
    cur = cur.power(ell);
  }
  return orbit;
}

/// Partition of the dual group into Q_ℓ-conjugacy classes; each class is
/// ordered with a canonical representative first.
inline std::vector<std::vector<DirichletCharacter>> character_classes(const FieldPtr& F,
                                                                     long ell) {
  auto chars = characters(F);
  std::vector<std::vector<DirichletCharacter>> classes;
  std::vector<bool> used(chars.size(), false);
  for (size_t i = 0; i < chars.size(); ++i) {
    if (used[i]) continue;
    auto orbit = frobenius_class(chars[i], ell);
    for (auto& psi : orbit)
      for (size_t j = 0; j < chars.size(); ++j)
        if (!used[j] && chars[j] == psi) used[j] = true;
    classes.push_back(std::move(orbit));
  }
  return classes;
}

/// Idempotent e_φ ∈ Z/ℓ^M[G] of the Q_ℓ-conjugacy class of φ, for ℓ ∤ |G|.
/// Computed from the mod-ℓ idempotent (character values realized in F_{ℓ^r})
/// and lifted by the Newton iteration a ↦ 3a² - 2a³.
inline GroupRingZl idempotent(const FieldPtr& F, const DirichletCharacter& phi, long ell,
                              long M) {
  if (ell == 2 || !is_prime(ell)) throw precondition_error("idempotent: odd prime required");
  long n = F->order();
  if (n % ell == 0)
    throw precondition_error("idempotent: ell divides |G|, the algebra is not semisimple");
  long e = phi.order();
  long r = mult_order(ell, e);
  auto FF = detail::make_finite_field(ell, r);
  auto y = detail::element_of_order(FF, e);  // realizes ζ_e mod ℓ

  // ē = (1/|G|) Σ_σ Tr(φ(σ)) σ^{-1}, trace over the Frobenius orbit.
  long ninv = mod_inverse_long(n, ell);
  Int mod = pow_int(Int(ell), M);
  GroupRingZl a(F);
  for (long g : F->elements()) {
    long k = phi.exponent(g);
    auto v = FF.pow(y, Int(k));
    auto tr = FF.zero();
    auto cur = v;
    for (long j = 0; j < r; ++j) {
      for (long i = 0; i < FF.r(); ++i) tr[i] = (tr[i] + cur[i]) % ell;
      cur = FF.pow(cur, Int(ell));
    }
    for (long i = 1; i < FF.r(); ++i)
      if (tr[i] != 0) throw consistency_error("idempotent: trace not in the prime field");
    long c = mod_floor(tr.empty() ? 0 : tr[0] * ninv, ell);
    if (c != 0) a.add_term(F->inv(g), ZMod(Int(c), mod));
  }

  // Newton lifting to an idempotent mod ℓ^M; quadratic convergence.
  ZMod two(Int(2), mod), three(Int(3), mod);
  for (int it = 0; it < 64; ++it) {
    GroupRingZl sq = a * a;
    if (sq == a) break;
    a = three * sq - two * (sq * a);
  }
  if (!(a * a == a)) throw consistency_error("idempotent: Newton lift did not converge");
  return a;
}

}  // namespace stickel
