#pragma once

#include "stickel/abelian_field.hpp"
#include "stickel/cyclotomic.hpp"
#include "stickel/dirichlet.hpp"

namespace stickel {

/// Element of Z/ℓ^M, the coefficient ring for ℓ-adic group-ring computations.
struct ZMod {
  Int v;
  Int mod;  // ℓ^M

  ZMod() : v(0), mod(0) {}
  ZMod(Int value, Int modulus) : v(std::move(value)), mod(std::move(modulus)) { reduce(); }

  void reduce() {
    if (mod == 0) return;
    v %= mod;
    if (v < 0) v += mod;
  }

  bool is_zero() const { return v == 0; }

  static void align(ZMod& a, const ZMod& b) {
    if (a.mod == 0) a.mod = b.mod;
    if (b.mod != 0 && a.mod != b.mod)
      throw precondition_error("ZMod: mixed moduli");
  }

  friend ZMod operator+(ZMod a, const ZMod& b) {
    align(a, b);
    a.v += b.v;
    a.reduce();
    return a;
  }
  friend ZMod operator-(ZMod a, const ZMod& b) {
    align(a, b);
    a.v -= b.v;
    a.reduce();
    return a;
  }
  friend ZMod operator*(ZMod a, const ZMod& b) {
    align(a, b);
    a.v *= b.v;
    a.reduce();
    return a;
  }
  ZMod operator-() const { return ZMod(-v, mod); }
  friend bool operator==(const ZMod& a, const ZMod& b) { return a.v == b.v; }

  ZMod inv() const { return ZMod(mod_inverse(v, mod), mod); }
};

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const ZMod& c) { return c.is_zero(); }

/// Finitely supported element of the group ring of G_F; keys are canonical
/// coset representatives, zero coefficients are never stored.
template <class C>
class GroupRingElement {
 public:
  explicit GroupRingElement(FieldPtr field) : field_(std::move(field)) {}

  static GroupRingElement basis(const FieldPtr& F, long rep, C coeff) {
    GroupRingElement e(F);
    e.add_term(rep, std::move(coeff));
    return e;
  }

  static GroupRingElement scalar(const FieldPtr& F, C coeff) {
    return basis(F, F->identity(), std::move(coeff));
  }

  const FieldPtr& field() const { return field_; }
  const std::map<long, C>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  C coeff(long rep) const {
    auto it = c_.find(field_->canonical_rep(rep));
    if (it != c_.end()) return it->second;
    return zero_like();
  }

  void add_term(long rep, C coeff) {
    rep = field_->canonical_rep(rep);
    auto it = c_.find(rep);
    if (it == c_.end()) {
      if (!coeff_is_zero(coeff)) c_.emplace(rep, std::move(coeff));
    } else {
      it->second = it->second + coeff;
      if (coeff_is_zero(it->second)) c_.erase(it);
    }
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    a.check_same(b);
    for (auto& [r, c] : b.c_) a.add_term(r, c);
    return a;
  }

  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    a.check_same(b);
    for (auto& [r, c] : b.c_) a.add_term(r, -c);
    return a;
  }

  GroupRingElement operator-() const {
    GroupRingElement r(field_);
    for (auto& [g, c] : c_) r.c_.emplace(g, -c);
    return r;
  }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_same(b);
    GroupRingElement r(a.field_);
    for (auto& [ga, ca] : a.c_)
      for (auto& [gb, cb] : b.c_) r.add_term(a.field_->mul(ga, gb), ca * cb);
    return r;
  }

  friend GroupRingElement operator*(const C& s, const GroupRingElement& a) {
    GroupRingElement r(a.field_);
    for (auto& [g, c] : a.c_) r.add_term(g, s * c);
    return r;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    a.check_same(b);
    return a.c_ == b.c_;
  }

  /// Translate by a group element.
  GroupRingElement translated(long rep) const {
    GroupRingElement r(field_);
    for (auto& [g, c] : c_) r.add_term(field_->mul(g, rep), c);
    return r;
  }

  /// Image under σ ↦ σ^{-1} on the group basis.
  GroupRingElement inverted() const {
    GroupRingElement r(field_);
    for (auto& [g, c] : c_) r.add_term(field_->inv(g), c);
    return r;
  }

  C augmentation() const {
    C s = zero_like();
    for (auto& [g, c] : c_) s = s + c;
    return s;
  }

  /// Coordinate vector in the order of field()->elements().
  std::vector<C> coordinates() const {
    std::vector<C> out(field_->order(), zero_like());
    for (auto& [g, c] : c_) out[field_->index_of(g)] = c;
    return out;
  }

 private:
  C zero_like() const {
    if constexpr (std::is_same_v<C, ZMod>) {
      if (!c_.empty()) return ZMod(Int(0), c_.begin()->second.mod);
      return ZMod();
    } else {
      return C(0);
    }
  }

  void check_same(const GroupRingElement& o) const {
    if (!(*field_ == *o.field_)) throw precondition_error("GroupRingElement: mixed fields");
  }

  FieldPtr field_;
  std::map<long, C> c_;
};

using GroupRingQ = GroupRingElement<Rat>;
using GroupRingZl = GroupRingElement<ZMod>;

/// Linear extension of the restriction G_F → G_K.
template <class C>
GroupRingElement<C> restrict_ring(const FieldPtr& F, const FieldPtr& K,
                                  const GroupRingElement<C>& x) {
  if (!(*x.field() == *F)) throw precondition_error("restrict_ring: element not over F");
  if (!is_subfield(K, F)) throw precondition_error("restrict_ring: K is not a subfield of F");
  GroupRingElement<C> r(K);
  for (auto& [g, c] : x.coeffs()) r.add_term(mod_floor(g, std::max<long>(K->conductor(), 1)), c);
  return r;
}

/// Linear extension of a character to the group ring: Σ coeff(σ)·χ(σ).
inline Cyclotomic char_eval(const GroupRingQ& x, const DirichletCharacter& chi) {
  if (!(*x.field() == *chi.field()))
    throw precondition_error("char_eval: character and element over different fields");
  Cyclotomic s(chi.order());
  for (auto& [g, c] : x.coeffs()) s = s + c * chi.value(g);
  return s;
}

/// ℓ-adic character evaluation through the Teichmüller embedding (order | ℓ-1).
inline Padic char_eval_padic(const GroupRingQ& x, const DirichletCharacter& chi, long ell,
                             long prec) {
  Padic s = Padic::zero(ell);
  for (auto& [g, c] : x.coeffs())
    s = s + Padic::from_rational(ell, c, prec) * chi.padic_value(g, ell, prec);
  return s;
}

/// Conversion to ℓ-adic coefficients mod ℓ^M; denominators must be prime to ℓ.
inline GroupRingZl to_padic_ring(const GroupRingQ& x, long ell, long M) {
  Int mod = pow_int(Int(ell), M);
  GroupRingZl r(x.field());
  for (auto& [g, c] : x.coeffs()) {
    Int num = c.get_num() % mod;
    r.add_term(g, ZMod(num * mod_inverse(c.get_den(), mod), mod));
  }
  return r;
}

}  // namespace stickel
