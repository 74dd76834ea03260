#pragma once

#include <climits>
#include <optional>

#include "stickel/util.hpp"

namespace stickel {

/// An ℓ-adic number ℓ^v·u carried at explicit precision: the value is known
/// modulo ℓ^{v+prec}. Exact zero has v = +∞ (kInfinity). A value that cancelled
/// below the working precision is stored with u = 0 and v = the absolute
/// precision up to which it is known to vanish.
class Padic {
 public:
  static constexpr long kInfinity = LONG_MAX;

  Padic(long ell, long v, Int u, long prec) : ell_(ell), v_(v), u_(std::move(u)), prec_(prec) {
    check_prime(ell);
    normalize();
  }

  static Padic zero(long ell) {
    check_prime(ell);
    Padic z(ell);
    z.v_ = kInfinity;
    return z;
  }

  static Padic from_int(long ell, const Int& n, long prec) {
    check_prime(ell);
    if (n == 0) return zero(ell);
    long v = valuation(n, ell);
    Int u = n / pow_int(Int(ell), v);
    return Padic(ell, v, u, prec);
  }

  static Padic from_rational(long ell, const Rat& q, long prec) {
    check_prime(ell);
    if (q == 0) return zero(ell);
    long vn = valuation(q.get_num(), ell), vd = valuation(q.get_den(), ell);
    Int num = q.get_num() / pow_int(Int(ell), vn);
    Int den = q.get_den() / pow_int(Int(ell), vd);
    Int mod = pow_int(Int(ell), prec);
    Int u = (num % mod) * mod_inverse(den, mod) % mod;
    return Padic(ell, vn - vd, u, prec);
  }

  long ell() const { return ell_; }
  bool is_exact_zero() const { return v_ == kInfinity; }
  /// True if the value is indistinguishable from zero at its precision.
  bool is_zero() const { return is_exact_zero() || u_ == 0; }

  long val() const {
    if (is_exact_zero()) return kInfinity;
    if (u_ == 0) throw precondition_error("Padic::val: valuation lost to cancellation");
    return v_;
  }

  /// Absolute precision: the value is known modulo ell^{abs_prec}.
  long abs_prec() const {
    if (is_exact_zero()) return kInfinity;
    return u_ == 0 ? v_ : v_ + prec_;
  }

  long rel_prec() const { return is_zero() ? 0 : prec_; }
  const Int& unit() const { return u_; }

  /// Canonical integer lift ℓ^v·u mod ℓ^{abs_prec}; requires v ≥ 0.
  Int lift() const {
    if (is_exact_zero() || u_ == 0) return Int(0);
    if (v_ < 0) throw precondition_error("Padic::lift: negative valuation");
    return pow_int(Int(ell_), v_) * u_;
  }

  Padic operator-() const {
    if (is_zero()) return *this;
    Padic r = *this;
    r.u_ = mod_pow_prec(-u_, prec_);
    return r;
  }

  friend Padic operator+(const Padic& a, const Padic& b) {
    a.check_same(b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    long abs = std::min(a.abs_prec(), b.abs_prec());
    long v0 = std::min(a.u_ == 0 ? a.v_ : a.v_, b.u_ == 0 ? b.v_ : b.v_);
    // Represent both mod ell^{abs - v0} after factoring ell^{v0}.
    if (abs <= v0) return near_zero(a.ell_, abs);
    Int mod = pow_int(Int(a.ell_), abs - v0);
    Int s = (a.scaled(v0, mod) + b.scaled(v0, mod)) % mod;
    if (s == 0) return near_zero(a.ell_, abs);
    long w = valuation(s, a.ell_);
    Int u = (s / pow_int(Int(a.ell_), w)) % pow_int(Int(a.ell_), abs - v0 - w);
    return Padic(a.ell_, v0 + w, u, abs - v0 - w);
  }

  friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

  friend Padic operator*(const Padic& a, const Padic& b) {
    a.check_same(b);
    if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.ell_);
    if (a.u_ == 0 || b.u_ == 0) {
      // Zero-at-precision times anything: only an upper bound on the valuation
      // survives; keep the weakest statement.
      long bound = (a.u_ == 0 ? a.v_ : a.v_) + (b.u_ == 0 ? b.v_ : b.v_);
      return near_zero(a.ell_, bound);
    }
    long prec = std::min(a.prec_, b.prec_);
    return Padic(a.ell_, a.v_ + b.v_, mod_raw(a.u_ * b.u_, a.ell_, prec), prec);
  }

  friend Padic operator/(const Padic& a, const Padic& b) {
    a.check_same(b);
    if (b.is_zero()) throw precondition_error("Padic: division by zero");
    if (a.is_exact_zero()) return zero(a.ell_);
    if (a.u_ == 0) return near_zero(a.ell_, a.v_ - b.v_);
    long prec = std::min(a.prec_, b.prec_);
    Int mod = pow_int(Int(a.ell_), prec);
    return Padic(a.ell_, a.v_ - b.v_, a.u_ * mod_inverse(b.u_, mod) % mod, prec);
  }

  Padic pow(long e) const {
    if (e < 0) {
      Padic one = from_int(ell_, 1, prec_);
      return (one / *this).pow(-e);
    }
    Padic r = from_int(ell_, 1, is_zero() ? 1 : prec_);
    Padic b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Equality at the common precision.
  friend bool operator==(const Padic& a, const Padic& b) {
    a.check_same(b);
    return (a - b).is_zero();
  }

  /// Zero known only modulo ell^abs.
  static Padic zero_at(long ell, long abs) {
    check_prime(ell);
    return near_zero(ell, abs);
  }

  Padic truncated(long prec) const {
    if (is_zero()) return *this;
    return Padic(ell_, v_, u_, std::min(prec, prec_));
  }

  std::string str() const {
    if (is_exact_zero()) return "0";
    if (u_ == 0) return "O(" + std::to_string(ell_) + "^" + std::to_string(v_) + ")";
    return u_.get_str() + "*" + std::to_string(ell_) + "^" + std::to_string(v_) +
           " + O(" + std::to_string(ell_) + "^" + std::to_string(abs_prec()) + ")";
  }

 private:
  explicit Padic(long ell) : ell_(ell), v_(0), u_(0), prec_(0) {}

  static Padic near_zero(long ell, long abs) {
    Padic z(ell);
    z.v_ = abs;
    z.u_ = 0;
    z.prec_ = 0;
    return z;
  }

  static void check_prime(long ell) {
    if (ell == 2 || !is_prime(ell)) throw precondition_error("Padic: odd prime required");
  }

  void check_same(const Padic& o) const {
    if (ell_ != o.ell_) throw precondition_error("Padic: mixed primes");
  }

  static Int mod_raw(const Int& x, long ell, long prec) {
    Int mod = pow_int(Int(ell), prec);
    Int r = x % mod;
    if (r < 0) r += mod;
    return r;
  }

  Int mod_pow_prec(const Int& x, long prec) const { return mod_raw(x, ell_, prec); }

  /// Integer value / ell^{v0} reduced mod the given modulus.
  Int scaled(long v0, const Int& mod) const {
    if (u_ == 0) return Int(0);
    Int x = pow_int(Int(ell_), v_ - v0) * u_ % mod;
    return x;
  }

  void normalize() {
    if (v_ == kInfinity) return;
    if (prec_ < 1) throw precondition_error("Padic: positive precision required");
    Int mod = pow_int(Int(ell_), prec_);
    u_ %= mod;
    if (u_ < 0) u_ += mod;
    if (u_ == 0) {
      v_ = v_ + prec_;  // zero mod ell^{v+prec}
      prec_ = 0;
      return;
    }
    long w = valuation(u_, ell_);
    if (w > 0) {
      u_ /= pow_int(Int(ell_), w);
      v_ += w;
      prec_ -= w;
      u_ %= pow_int(Int(ell_), prec_);
    }
  }

  long ell_;
  long v_;
  Int u_;
  long prec_;
};

/// Teichmüller representative: the root of unity ω with ω^{ℓ-1} = 1 and ω ≡ u mod ℓ.
inline Padic teichmuller(const Padic& u, long prec) {
  if (u.is_zero() || u.val() != 0)
    throw precondition_error("teichmuller: unit argument required");
  long ell = u.ell();
  Int mod = pow_int(Int(ell), prec);
  Int x = u.lift() % mod;
  for (long i = 0; i < prec + 2; ++i) {
    Int y = pow_mod(x, Int(ell), mod);
    if (y == x) break;
    x = y;
  }
  return Padic(ell, 0, x, prec);
}

/// Teichmüller lift of an integer a (coprime to ℓ) as an integer mod ℓ^prec.
inline Int teichmuller_lift(long ell, const Int& a, long prec) {
  Int mod = pow_int(Int(ell), prec);
  Int x = a % mod;
  if (x < 0) x += mod;
  for (long i = 0; i < prec + 2; ++i) {
    Int y = pow_mod(x, Int(ell), mod);
    if (y == x) break;
    x = y;
  }
  return x;
}

/// Iwasawa logarithm: Log_ℓ(ℓ) = 0 and Log_ℓ vanishes on roots of unity, so the
/// result is the usual logarithm series applied to the principal-unit part.
inline Padic iwasawa_log(const Padic& x, long prec) {
  if (x.is_zero()) throw precondition_error("iwasawa_log: nonzero argument required");
  long ell = x.ell();
  long target = prec;
  if (x.rel_prec() > 0) target = std::min(target, x.rel_prec());
  // Guard digits absorb the valuations of the denominators k in the series.
  long kend = 2 * (target + 2);
  long guard = 1;
  while (pow_int(Int(ell), guard) <= kend) ++guard;
  long work = target + guard;

  Int mod = pow_int(Int(ell), work + guard);
  Int u = x.unit() % mod;
  Int omega = teichmuller_lift(ell, u, work + guard);
  Int w = u * mod_inverse(omega, mod) % mod;  // principal unit, ≡ 1 mod ℓ
  Int z = (w - 1) % mod;
  if (z < 0) z += mod;
  if (z == 0) return Padic::zero(ell);

  // Σ (-1)^{k+1} z^k / k; every dropped index satisfies v(z^k/k) ≥ work.
  long vz = valuation(z, ell);
  kend = (work + guard) / std::max<long>(vz, 1) + 1;
  Rat acc(0);
  Int zk(1);
  for (long k = 1; k <= kend; ++k) {
    zk = zk * z % mod;
    Rat term(zk);
    term /= k;
    if (k % 2 == 0) term = -term;
    acc += term;
  }
  Padic out = Padic::from_rational(ell, acc, work);
  if (out.is_exact_zero()) return out;
  // The result is meaningful only modulo ell^target.
  if (out.is_zero() || out.val() >= target) return Padic::zero_at(ell, target);
  return out.truncated(target - out.val());
}

}  // namespace stickel
