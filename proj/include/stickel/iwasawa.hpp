#pragma once

#include <optional>

#include "stickel/stickelberger.hpp"

namespace stickel {

class TowerContext;
using TowerPtr = std::shared_ptr<const TowerContext>;

/// The cyclotomic ℓ-tower over a base field F = F_m of conductor f₀'·ℓ^{m+1}:
/// G_{F_n} ≅ Δ × Γ/Γ_n with Δ = G_{F₀} of order prime to ℓ, γ normalized so
/// that κ(γ) = 1+ℓ. All Iwasawa arithmetic happens mod (ℓ^M, T^N), T = γ-1.
class TowerContext : public std::enable_shared_from_this<TowerContext> {
 public:
  long ell() const { return ell_; }
  long prec_M() const { return M_; }
  long tdeg_N() const { return N_; }
  long prime_to_ell_conductor() const { return f0p_; }
  long level_offset() const { return m_; }
  const FieldPtr& base() const { return base_; }
  const FieldPtr& delta() const { return delta_; }
  const Int& modulus() const { return mod_; }

  ZMod zmod(Int v) const { return ZMod(std::move(v), mod_); }

  /// κ(δ) mod ℓ^M: the canonical Γ-free lift of δ acts on μ_{ℓ^∞} through the
  /// Teichmüller lift of its residue mod ℓ.
  const Int& kappa(long delta_rep) const { return kappa_.at(delta_->canonical_rep(delta_rep)); }

  /// κ(γ)^i mod ℓ^M.
  Int kappa_gamma_pow(long i) const {
    Int k = pow_mod(Int(1 + ell_), Int(i < 0 ? -i : i), mod_);
    return i < 0 ? mod_inverse(k, mod_) : k;
  }

  long level_conductor(long n) const { return f0p_ * pow_int(Int(ell_), n + 1).get_si(); }

  FieldPtr level_field(long n) const {
    long fn = level_conductor(n);
    long ln = fn / f0p_;
    std::vector<long> gens;
    for (long h : delta_->kernel()) gens.push_back(crt(mod_floor(h, f0p_), f0p_, 1, ln));
    return AbelianField::make(fn, gens);
  }

  /// The group element of G_{F_n} representing γ: 1 mod f₀', 1+ℓ mod ℓ^{n+1}.
  long gamma_rep(long n) const {
    long ln = level_conductor(n) / f0p_;
    return crt(1, f0p_, mod_floor(1 + ell_, ln), ln);
  }

  /// The canonical Γ-free lift of δ into G_{F_n}: Teichmüller at ℓ.
  long delta_lift(long n, long delta_rep, const FieldPtr& Fn) const {
    long d = delta_->canonical_rep(delta_rep);
    long ln = level_conductor(n) / f0p_;
    long w = Int(teichmuller_lift(ell_, Int(d), n + 1) % ln).get_si();
    return Fn->canonical_rep(crt(mod_floor(d, f0p_), f0p_, w, ln));
  }

  /// Splitting of a ∈ G_{F_n} as δ·γ^t.
  std::pair<long, long> decompose(long n, long a, const FieldPtr& Fn) const {
    long ln = level_conductor(n) / f0p_;
    long al = mod_floor(a, ln);
    long w = Int(teichmuller_lift(ell_, Int(al), n + 1) % ln).get_si();
    long principal = Int(Int(al) * mod_inverse_long(w, ln) % ln).get_si();
    long t = 0, cur = 1, g = mod_floor(1 + ell_, ln);
    while (cur != principal) {
      cur = Int(Int(cur) * g % ln).get_si();
      if (++t >= ln) throw consistency_error("TowerContext: gamma discrete log failed");
    }
    long ginv = mod_inverse_long(pow_mod_long(g, t, ln), ln);
    long b = Fn->canonical_rep(crt(mod_floor(a, f0p_), f0p_, Int(Int(al) * ginv % ln).get_si(), ln));
    long d = delta_->canonical_rep(mod_floor(b, delta_->conductor()));
    return {d, t};
  }

  static TowerPtr make(long ell, const FieldPtr& F, long M, long N);

 private:
  TowerContext() = default;

  long ell_, M_, N_, f0p_, m_;
  FieldPtr base_, delta_;
  Int mod_;
  std::map<long, Int> kappa_;
};

inline TowerPtr TowerContext::make(long ell, const FieldPtr& F, long M, long N) {
  if (ell == 2 || !is_prime(ell)) throw precondition_error("make_tower: odd prime required");
  if (M < 1 || N < 1) throw precondition_error("make_tower: positive precision required");
  long f = F->conductor();
  if (f % ell != 0) throw precondition_error("make_tower: ell must divide the conductor");
  if (!is_subfield(make_field(ell, {}), F))
    throw precondition_error("make_tower: F must contain the ell-th cyclotomic field");
  long m = valuation(Int(f), ell) - 1;
  if (valuation(Int(F->order()), ell) != m)
    throw precondition_error("make_tower: non-semisimple tower rejected");

  auto ctx = std::shared_ptr<TowerContext>(new TowerContext());
  ctx->ell_ = ell;
  ctx->M_ = M;
  ctx->N_ = N;
  ctx->m_ = m;
  ctx->base_ = F;
  ctx->mod_ = pow_int(Int(ell), M);
  long lm = pow_int(Int(ell), m).get_si();
  ctx->f0p_ = f / (lm * ell);

  // F0 is the fixed field of the ell-Sylow subgroup of G_F.
  long dorder = F->order() / lm;
  std::vector<long> gens(F->kernel());
  for (long a : F->units()) gens.push_back(pow_mod_long(a, dorder, f));
  ctx->delta_ = AbelianField::reduce_to_exact_conductor(f, gens);
  if (ctx->delta_->conductor() != ctx->f0p_ * ell)
    throw consistency_error("make_tower: fixed field of the ell-Sylow has wrong conductor");
  if (ctx->delta_->order() != dorder)
    throw consistency_error("make_tower: Delta has wrong order");
  if (!(*ctx->level_field(m) == *F))
    throw precondition_error("make_tower: the ell-part of G_F is not the cyclotomic one");

  for (long d : ctx->delta_->elements())
    ctx->kappa_[d] = teichmuller_lift(ell, Int(d), M);
  if (ctx->kappa_.at(ctx->delta_->conjugation()) != ctx->mod_ - 1)
    throw consistency_error("make_tower: kappa(conjugation) != -1");
  return ctx;
}

inline TowerPtr make_tower(long ell, const FieldPtr& F, long M, long N) {
  return TowerContext::make(ell, F, M, N);
}

/// Element of Z/ℓ^M[Δ][T]/(T^N), T = γ-1. The exact flag records that the
/// element is a genuine polynomial of degree < N, i.e. no nonzero term was
/// dropped by the truncation; only exact elements can be reduced to a level.
class IwasawaElement {
 public:
  explicit IwasawaElement(TowerPtr ctx)
      : ctx_(std::move(ctx)), a_(ctx_->tdeg_N(), GroupRingZl(ctx_->delta())), exact_(true) {}

  IwasawaElement(TowerPtr ctx, std::vector<GroupRingZl> coeffs, bool exact = true)
      : ctx_(std::move(ctx)), a_(std::move(coeffs)), exact_(exact) {
    a_.resize(ctx_->tdeg_N(), GroupRingZl(ctx_->delta()));
  }

  static IwasawaElement constant(const TowerPtr& ctx, GroupRingZl c) {
    IwasawaElement e(ctx);
    e.a_[0] = std::move(c);
    return e;
  }

  static IwasawaElement unit(const TowerPtr& ctx) {
    return constant(ctx, GroupRingZl::scalar(ctx->delta(), ctx->zmod(Int(1))));
  }

  /// T itself (requires N >= 2).
  static IwasawaElement tvar(const TowerPtr& ctx) {
    if (ctx->tdeg_N() < 2) throw precondition_error("IwasawaElement: N >= 2 required for T");
    IwasawaElement e(ctx);
    e.a_[1] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(Int(1)));
    return e;
  }

  const TowerPtr& context() const { return ctx_; }
  const std::vector<GroupRingZl>& coeffs() const { return a_; }
  const GroupRingZl& coeff(long k) const { return a_.at(k); }
  bool exact() const { return exact_; }
  IwasawaElement inexact() const { return IwasawaElement(ctx_, a_, false); }

  long degree() const {
    for (long k = static_cast<long>(a_.size()) - 1; k >= 0; --k)
      if (!a_[k].is_zero()) return k;
    return -1;
  }

  bool is_zero() const { return degree() < 0; }

  friend IwasawaElement operator+(IwasawaElement x, const IwasawaElement& y) {
    x.check_same(y);
    for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] = x.a_[k] + y.a_[k];
    x.exact_ = x.exact_ && y.exact_;
    return x;
  }

  friend IwasawaElement operator-(IwasawaElement x, const IwasawaElement& y) {
    x.check_same(y);
    for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] = x.a_[k] - y.a_[k];
    x.exact_ = x.exact_ && y.exact_;
    return x;
  }

  IwasawaElement operator-() const {
    IwasawaElement r(ctx_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    r.exact_ = exact_;
    return r;
  }

  friend IwasawaElement operator*(const IwasawaElement& x, const IwasawaElement& y) {
    x.check_same(y);
    long N = x.ctx_->tdeg_N();
    IwasawaElement r(x.ctx_);
    long dx = x.degree(), dy = y.degree();
    for (long i = 0; i <= dx; ++i) {
      if (x.a_[i].is_zero()) continue;
      for (long j = 0; j <= dy && i + j < N; ++j) r.a_[i + j] = r.a_[i + j] + x.a_[i] * y.a_[j];
    }
    r.exact_ = x.exact_ && y.exact_ && (dx < 0 || dy < 0 || dx + dy < N);
    return r;
  }

  friend IwasawaElement operator*(const ZMod& s, const IwasawaElement& x) {
    IwasawaElement r(x.ctx_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
    r.exact_ = x.exact_;
    return r;
  }

  /// Exact equality of all stored coefficients.
  friend bool operator==(const IwasawaElement& x, const IwasawaElement& y) {
    x.check_same(y);
    return x.a_ == y.a_;
  }

  void check_same(const IwasawaElement& y) const {
    if (ctx_.get() != y.ctx_.get())
      throw precondition_error("IwasawaElement: mixed tower contexts");
  }

 private:
  TowerPtr ctx_;
  std::vector<GroupRingZl> a_;
  bool exact_;
};

/// Truncation-graded congruence: a series tail a_k T^k, k >= N, contributes
/// ℓ^{k-j} at degree j after any mirror substitution, so inexact elements are
/// well defined exactly up to ℓ^{min(M, N-k)} in the degree-k coefficient.
inline bool graded_congruent(const IwasawaElement& x, const IwasawaElement& y) {
  x.check_same(y);
  const auto& ctx = x.context();
  long N = ctx->tdeg_N(), M = ctx->prec_M(), ell = ctx->ell();
  for (long k = 0; k < N; ++k) {
    Int modk = pow_int(Int(ell), std::min(M, N - k));
    GroupRingZl d = x.coeff(k) - y.coeff(k);
    for (auto& [g, c] : d.coeffs())
      if (c.v % modk != 0) return false;
  }
  return true;
}

/// The idempotents (1 ± τ̄)/2 as constant elements.
inline IwasawaElement e_plus(const TowerPtr& ctx) {
  ZMod half = ctx->zmod(Int(2)).inv();
  GroupRingZl c = GroupRingZl::scalar(ctx->delta(), half);
  c.add_term(ctx->delta()->conjugation(), half);
  return IwasawaElement::constant(ctx, c);
}

inline IwasawaElement e_minus(const TowerPtr& ctx) {
  ZMod half = ctx->zmod(Int(2)).inv();
  GroupRingZl c = GroupRingZl::scalar(ctx->delta(), half);
  c.add_term(ctx->delta()->conjugation(), -half);
  return IwasawaElement::constant(ctx, c);
}

namespace detail {

/// Star on Δ-coefficients: Σ α_σ σ ↦ Σ α_σ κ(σ) σ^{-1}.
inline GroupRingZl star(const TowerPtr& ctx, const GroupRingZl& x) {
  GroupRingZl r(ctx->delta());
  for (auto& [g, c] : x.coeffs())
    r.add_term(ctx->delta()->inv(g), ctx->zmod(ctx->kappa(g)) * c);
  return r;
}

/// Twist on Δ-coefficients: Σ α_σ σ ↦ Σ α_σ κ(σ)^i σ.
inline GroupRingZl twist_coeff(const TowerPtr& ctx, const GroupRingZl& x, long i) {
  GroupRingZl r(ctx->delta());
  for (auto& [g, c] : x.coeffs()) {
    Int k = pow_mod(ctx->kappa(g), Int(i < 0 ? -i : i), ctx->modulus());
    if (i < 0) k = mod_inverse(k, ctx->modulus());
    r.add_term(g, ctx->zmod(k) * c);
  }
  return r;
}

/// Evaluate Σ b_k s^k by Horner's rule in the truncated algebra.
inline IwasawaElement substitute(const TowerPtr& ctx, const std::vector<GroupRingZl>& b,
                                 const IwasawaElement& s) {
  IwasawaElement r(ctx);
  for (long k = static_cast<long>(b.size()) - 1; k >= 0; --k)
    r = (r * s + IwasawaElement::constant(ctx, b[k])).inexact();
  return r;
}

}  // namespace detail

/// Mirror involution: a_k ↦ a_k^*, T ↦ κ(γ)(1+T)^{-1} - 1; the geometric
/// series converges since the constant term κ(γ)-1 = ℓ is topologically
/// nilpotent. The image is a series, hence inexact unless the input is
/// constant.
inline IwasawaElement mirror(const IwasawaElement& x) {
  const auto& ctx = x.context();
  long N = ctx->tdeg_N();
  std::vector<GroupRingZl> b;
  for (long k = 0; k <= std::max<long>(x.degree(), 0); ++k)
    b.push_back(detail::star(ctx, x.coeff(k)));
  if (x.degree() <= 0) {
    IwasawaElement r = IwasawaElement::constant(ctx, b[0]);
    return x.exact() ? r : r.inexact();
  }
  Int kg = ctx->kappa_gamma_pow(1);
  IwasawaElement u(ctx);
  std::vector<GroupRingZl> uc(N, GroupRingZl(ctx->delta()));
  uc[0] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(kg - 1));
  for (long k = 1; k < N; ++k)
    uc[k] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(k % 2 ? -kg : kg));
  return detail::substitute(ctx, b, IwasawaElement(ctx, std::move(uc), false));
}

/// Tate twist: a_k ↦ Σ α_σ κ(σ)^i σ, T ↦ (κ(γ)^i - 1) + κ(γ)^i T. The
/// substitution is affine with unit leading coefficient, so exactness and
/// degree are preserved.
inline IwasawaElement tate_twist(const IwasawaElement& x, long i) {
  const auto& ctx = x.context();
  if (i == 0) return x;
  std::vector<GroupRingZl> b;
  for (long k = 0; k <= std::max<long>(x.degree(), 0); ++k)
    b.push_back(detail::twist_coeff(ctx, x.coeff(k), i));
  Int kgi = ctx->kappa_gamma_pow(i);
  std::vector<GroupRingZl> sc(ctx->tdeg_N(), GroupRingZl(ctx->delta()));
  sc[0] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(kgi - 1));
  if (ctx->tdeg_N() > 1) sc[1] = GroupRingZl::scalar(ctx->delta(), ctx->zmod(kgi));
  IwasawaElement r = detail::substitute(ctx, b, IwasawaElement(ctx, std::move(sc)));
  return x.exact() ? IwasawaElement(ctx, r.coeffs(), true) : r;
}

inline IwasawaElement symmetrize(const IwasawaElement& x) { return x + mirror(x); }

/// σ^c_{F_n} read into the Iwasawa algebra: each group element splits as
/// δ·γ^t and (1+T)^t is expanded binomially. Exact when ℓ^n <= N (the level-n
/// polynomial has degree < ℓ^n). A norm-coherence self-check against level
/// n-1 is always run.
inline IwasawaElement coherent_stickelberger(const TowerPtr& ctx, long c, long n) {
  if (n < 0) throw precondition_error("coherent_stickelberger: nonnegative level required");
  long ell = ctx->ell();
  if (c % 2 == 0 || gcd_long(mod_floor(c, ctx->prime_to_ell_conductor() * ell),
                             ctx->prime_to_ell_conductor() * ell) != 1)
    throw precondition_error("coherent_stickelberger: c must be odd and coprime to f");
  FieldPtr Fn = ctx->level_field(n);
  GroupRingQ s = twisted_stickelberger(Fn, c);
  if (n >= 1) {
    FieldPtr Fp = ctx->level_field(n - 1);
    if (!(restrict_ring(Fn, Fp, s) == twisted_stickelberger(Fp, c)))
      throw consistency_error("coherent_stickelberger: norm coherence self-check failed");
  }
  long N = ctx->tdeg_N();
  long ln = pow_int(Int(ell), n).get_si();
  std::vector<GroupRingZl> a(N, GroupRingZl(ctx->delta()));
  for (auto& [g, q] : s.coeffs()) {
    auto [d, t] = ctx->decompose(n, g, Fn);
    ZMod coeff = ctx->zmod(q.get_num());
    for (long k = 0; k <= t && k < N; ++k) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), t, k);
      a[k].add_term(d, ctx->zmod(binom) * coeff);
    }
  }
  return IwasawaElement(ctx, std::move(a), ln <= N);
}

/// Image in Z/ℓ^M[G_{F_n}]: reduce the polynomial mod (1+T)^{ℓ^n} - 1, then
/// substitute T = γ_n - 1 on the group basis. Requires an exact polynomial;
/// a truncated series has no faithful reduction.
inline GroupRingZl reduce_mod_level(const IwasawaElement& x, long n) {
  if (!x.exact())
    throw precondition_error("reduce_mod_level: truncation too coarse to reduce faithfully");
  const auto& ctx = x.context();
  long ell = ctx->ell();
  long ln = pow_int(Int(ell), n).get_si();
  std::vector<GroupRingZl> b(x.coeffs().begin(),
                             x.coeffs().begin() + (std::max<long>(x.degree(), 0) + 1));
  // division by the monic relation (1+T)^{ℓ^n} - 1
  for (long d = static_cast<long>(b.size()) - 1; d >= ln; --d) {
    GroupRingZl lead = b[d];
    if (lead.is_zero()) continue;
    for (long j = 0; j < ln; ++j) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), ln, j);
      if (j == 0) binom -= 1;  // constant term of the relation
      b[d - ln + j] = b[d - ln + j] - ctx->zmod(binom) * lead;
    }
    b[d] = GroupRingZl(ctx->delta());
  }
  FieldPtr Fn = ctx->level_field(n);
  long g = ctx->gamma_rep(n);
  GroupRingZl gamma_minus_1 = GroupRingZl::basis(Fn, g, ctx->zmod(Int(1))) -
                              GroupRingZl::scalar(Fn, ctx->zmod(Int(1)));
  GroupRingZl r(Fn);
  for (long k = std::min<long>(b.size(), ln) - 1; k >= 0; --k) {
    GroupRingZl ck(Fn);
    for (auto& [d, c] : b[k].coeffs()) ck.add_term(ctx->delta_lift(n, d, Fn), c);
    r = r * gamma_minus_1 + ck;
  }
  return r;
}

struct IndexReport {
  std::optional<long> valuation;  // v_ℓ of the lattice index, when certified
  bool certified;
  long precision;      // entries were exact mod ℓ^precision
  long working_level;  // tower level at which the reflection was computed
};

namespace detail {

/// Reflection g ↦ κ(g)g^{-1} at finite level n: κ(g) is the action on
/// ζ_{ℓ^{n+1}}, i.e. the representative itself, so the result matches the
/// infinite-level mirror mod ℓ^{n+1}.
inline GroupRingZl reflect_level(const FieldPtr& Fn, const GroupRingQ& x, long lpow,
                                 const Int& mod) {
  GroupRingZl r(Fn);
  for (auto& [g, q] : x.coeffs())
    r.add_term(Fn->inv(g), ZMod(q.get_num() * mod_floor(g, lpow), mod));
  return r;
}

}  // namespace detail

/// ℓ-valuation of the index of the lattice spanned by the G_{F_n}-translates
/// of the reduced twisted symmetrized Stickelberger elements, for c in the
/// twist set. The mirror is realized at a deeper working level m (the largest
/// one with conductor under the cap), where it is exact mod ℓ^{m+1}; entries
/// are therefore correct mod ℓ^K, K = min(M, m+1), and the elimination tracks
/// how much of that precision the pivots consume.
inline IndexReport ideal_index(const TowerPtr& ctx, long n, const std::vector<long>& twists,
                               long tate_index = 0, long conductor_cap = 200000) {
  if (twists.empty()) return {std::nullopt, false, 0, n};
  long ell = ctx->ell();
  long m = n;
  while (ctx->level_conductor(m + 1) <= conductor_cap) ++m;
  long K = std::min<long>(ctx->prec_M(), m + 1);
  Int modK = pow_int(Int(ell), K);
  long lpow = pow_int(Int(ell), m + 1).get_si();
  FieldPtr Fm = ctx->level_field(m);
  FieldPtr Fn = ctx->level_field(n);

  std::vector<GroupRingZl> gens;
  for (long c : twists) {
    GroupRingQ s = twisted_stickelberger(Fm, c);
    GroupRingZl hat(Fm);
    for (auto& [g, q] : s.coeffs()) hat.add_term(g, ZMod(q.get_num(), modK));
    hat = hat + detail::reflect_level(Fm, s, lpow, modK);
    if (tate_index != 0) {
      GroupRingZl tw(Fm);
      for (auto& [g, c2] : hat.coeffs()) {
        Int k = pow_mod(Int(mod_floor(g, lpow)), Int(tate_index < 0 ? -tate_index : tate_index),
                        modK);
        if (tate_index < 0) k = mod_inverse(k, modK);
        tw.add_term(g, ZMod(k, modK) * c2);
      }
      hat = tw;
    }
    gens.push_back(restrict_ring(Fm, Fn, hat));
  }

  long d = Fn->order();
  std::vector<std::vector<Int>> rows;
  for (auto& x : gens)
    for (long g : Fn->elements()) {
      GroupRingZl t = x.translated(g);
      std::vector<Int> row(d, 0);
      for (auto& [h, c] : t.coeffs()) row[Fn->index_of(h)] = c.v;
      rows.push_back(std::move(row));
    }

  // Hermite-style elimination over Z/ℓ^K with min-valuation pivoting. Each
  // pivot of valuation v costs v digits of precision in the remaining block.
  long total = 0, avail = K;
  size_t top = 0;
  for (long col = 0; col < d; ++col) {
    long best_v = avail;
    size_t best_r = rows.size();
    for (size_t r = top; r < rows.size(); ++r) {
      if (rows[r][col] % modK == 0) continue;
      long v = valuation(Int(rows[r][col] % modK), ell);
      if (v < best_v) { best_v = v; best_r = r; }
    }
    if (best_r == rows.size()) return {std::nullopt, false, K, m};
    std::swap(rows[top], rows[best_r]);
    Int pu = (rows[top][col] % modK) / pow_int(Int(ell), best_v);
    Int pu_inv = mod_inverse(pu, modK);
    for (size_t r = top + 1; r < rows.size(); ++r) {
      Int e = rows[r][col] % modK;
      if (e == 0) continue;
      Int q = e / pow_int(Int(ell), best_v) * pu_inv % modK;
      for (long j = col; j < d; ++j)
        rows[r][j] = (rows[r][j] - q * rows[top][j]) % modK;
    }
    total += best_v;
    avail -= best_v;
    ++top;
  }
  return {total, true, K, m};
}

}  // namespace stickel
