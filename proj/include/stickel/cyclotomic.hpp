#pragma once

#include <functional>
#include <map>
#include <mutex>

#include "stickel/util.hpp"

namespace stickel {

namespace poly {

using Poly = std::vector<Rat>;  // coefficient i = coefficient of x^i

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long deg(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

/// Euclidean division; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  if (b.empty()) throw precondition_error("poly::divmod: division by zero");
  trim(a);
  Poly q(a.size(), Rat(0));
  while (deg(a) >= deg(b)) {
    long d = deg(a) - deg(b);
    Rat c = a.back() / b.back();
    q[d] = c;
    for (long i = 0; i <= deg(b); ++i) a[i + d] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

/// Resultant Res(a, b) = lc(a)^{deg b} Π b(α_i) over the roots α_i of a.
inline Rat resultant(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return Rat(0);
  Rat sign(1), scale(1);
  while (true) {
    if (deg(b) == 0) {
      Rat r = sign * scale;
      Rat lead = b[0];
      for (long i = 0; i < deg(a); ++i) r *= lead;
      return r;
    }
    Poly r = divmod(a, b).second;
    if (r.empty()) return Rat(0);
    if ((deg(a) % 2) && (deg(b) % 2)) sign = -sign;
    Rat lead = b.back();
    for (long i = 0; i < deg(a) - deg(r); ++i) scale *= lead;
    a = b;
    b = r;
  }
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g, g monic or zero.
inline std::tuple<Poly, Poly, Poly> ext_gcd(Poly a, Poly b) {
  Poly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
    Poly ns = sub(s0, mul(q, s1)), nt = sub(t0, mul(q, t1));
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (!a.empty() && a.back() != 1) {
    Rat inv = 1 / a.back();
    for (auto& c : a) c *= inv;
    for (auto& c : s0) c *= inv;
    for (auto& c : t0) c *= inv;
  }
  return {a, s0, t0};
}

}  // namespace poly

/// m-th cyclotomic polynomial with integer coefficients, cached.
inline const std::vector<Int>& cyclotomic_polynomial(long m) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Φ_m = (x^m - 1) / Π_{d|m, d<m} Φ_d, built bottom-up via exact division.
  std::function<std::vector<Int>(long)> build = [&](long n) -> std::vector<Int> {
    auto found = cache.find(n);
    if (found != cache.end()) return found->second;
    poly::Poly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    poly::Poly den{Rat(1)};
    for (long d : divisors(n)) {
      if (d == n) continue;
      auto phd = build(d);
      poly::Poly p(phd.size());
      for (size_t i = 0; i < phd.size(); ++i) p[i] = Rat(phd[i]);
      den = poly::mul(den, p);
    }
    auto [q, r] = poly::divmod(num, den);
    if (!r.empty()) throw consistency_error("cyclotomic_polynomial: inexact division");
    std::vector<Int> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i].get_den() != 1) throw consistency_error("cyclotomic_polynomial: non-integer");
      out[i] = q[i].get_num();
    }
    cache[n] = out;
    return out;
  };
  build(m);
  return cache[m];
}

inline poly::Poly cyclotomic_polynomial_q(long m) {
  const auto& z = cyclotomic_polynomial(m);
  poly::Poly p(z.size());
  for (size_t i = 0; i < z.size(); ++i) p[i] = Rat(z[i]);
  return p;
}

/// Element of Q(ζ_m) in the power basis 1, ζ, …, ζ^{φ(m)-1} modulo Φ_m.
class Cyclotomic {
 public:
  explicit Cyclotomic(long m) : m_(m), c_(euler_phi(m), Rat(0)) {
    if (m < 1) throw precondition_error("Cyclotomic: positive order required");
  }

  Cyclotomic(long m, const Rat& r) : Cyclotomic(m) {
    if (!c_.empty()) c_[0] = r;
    else if (r != 0) throw consistency_error("Cyclotomic: empty basis");
  }

  static Cyclotomic from_poly(long m, poly::Poly p) {
    Cyclotomic x(m);
    auto r = poly::divmod(std::move(p), cyclotomic_polynomial_q(m)).second;
    for (size_t i = 0; i < r.size(); ++i) x.c_[i] = r[i];
    return x;
  }

  /// ζ_m^k (k may be negative).
  static Cyclotomic zeta_power(long m, long k) {
    k = mod_floor(k, m);
    poly::Poly p(k + 1, Rat(0));
    p[k] = 1;
    return from_poly(m, std::move(p));
  }

  long order() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (auto& c : c_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Rat rational_part() const {
    if (!is_rational()) throw precondition_error("Cyclotomic: not a rational value");
    return c_.empty() ? Rat(0) : c_[0];
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return from_poly(a.m_, poly::mul(a.as_poly(), b.as_poly()));
  }

  friend Cyclotomic operator*(const Rat& s, const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw precondition_error("Cyclotomic: inverse of zero");
    auto [g, s, t] = poly::ext_gcd(as_poly(), cyclotomic_polynomial_q(m_));
    if (poly::deg(g) != 0) throw consistency_error("Cyclotomic: non-invertible element");
    poly::Poly inv = s;
    Rat scale = 1 / g[0];
    for (auto& c : inv) c *= scale;
    return from_poly(m_, std::move(inv));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return a.c_ == b.c_;
  }

  /// Galois action ζ ↦ ζ^k for k coprime to m.
  Cyclotomic galois(long k) const {
    if (gcd_long(mod_floor(k, m_), m_) != 1)
      throw precondition_error("Cyclotomic::galois: exponent not coprime to order");
    poly::Poly p;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      long e = mod_floor(static_cast<long>(i) * k, m_);
      if (p.size() <= static_cast<size_t>(e)) p.resize(e + 1, Rat(0));
      p[e] += c_[i];
    }
    return from_poly(m_, std::move(p));
  }

  Cyclotomic conj() const { return m_ <= 2 ? *this : galois(m_ - 1); }

  /// Embedding into Q(ζ_L) for m | L via ζ_m ↦ ζ_L^{L/m}.
  Cyclotomic to_order(long L) const {
    if (L % m_ != 0) throw precondition_error("Cyclotomic::to_order: order must be a multiple");
    if (L == m_) return *this;
    long s = L / m_;
    poly::Poly p;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      size_t e = i * s;
      if (p.size() <= e) p.resize(e + 1, Rat(0));
      p[e] += c_[i];
    }
    return from_poly(L, std::move(p));
  }

  /// Product of all Galois conjugates: Res(Φ_m, ·) since Φ_m is monic.
  Rat norm() const {
    if (is_zero()) return Rat(0);
    return poly::resultant(cyclotomic_polynomial_q(m_), as_poly());
  }

  poly::Poly as_poly() const {
    poly::Poly p = c_;
    poly::trim(p);
    return p;
  }

 private:
  void check_same(const Cyclotomic& o) const {
    if (m_ != o.m_) throw precondition_error("Cyclotomic: mixed orders");
  }

  long m_;
  std::vector<Rat> c_;
};

}  // namespace stickel
