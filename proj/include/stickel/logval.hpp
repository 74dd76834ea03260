#pragma once

#include "stickel/padic.hpp"

namespace stickel {

/// The totally ramified local field Q_ℓ(ζ_{ℓ^k}); elements are polynomials in
/// ζ of degree < φ(ℓ^k) with ℓ-adic coefficients, reduced by the relation
/// Σ_{j<ℓ} ζ^{jℓ^{k-1}} = 0 (k = 0 is Q_ℓ itself).
class LocalCyclotomicField {
 public:
  using Elt = std::vector<Padic>;

  LocalCyclotomicField(long ell, long k, long prec) : ell_(ell), k_(k), prec_(prec) {
    if (ell == 2 || !is_prime(ell))
      throw precondition_error("LocalCyclotomicField: odd prime required");
    if (k < 0) throw precondition_error("LocalCyclotomicField: nonnegative level required");
    step_ = k > 0 ? pow_int(Int(ell), k - 1).get_si() : 1;
    deg_ = k > 0 ? step_ * (ell - 1) : 1;
  }

  long ell() const { return ell_; }
  long level() const { return k_; }
  long degree() const { return deg_; }
  long precision() const { return prec_; }

  Elt zero() const { return Elt(deg_, Padic::zero(ell_)); }

  Elt from_rational(const Rat& q) const {
    Elt x = zero();
    x[0] = Padic::from_rational(ell_, q, prec_);
    return x;
  }

  Elt zeta(long power = 1) const {
    long lk = step_ * (k_ > 0 ? ell_ : 1);
    power = mod_floor(power, lk);
    Elt x = zero();
    if (power < deg_) {
      x[power] = Padic::from_int(ell_, 1, prec_);
      return x;
    }
    // ζ^power with deg <= power < ℓ^k: apply the defining relation once
    Elt t(power + 1, Padic::zero(ell_));
    t[power] = Padic::from_int(ell_, 1, prec_);
    reduce(t);
    return t;
  }

  Elt add(const Elt& a, const Elt& b) const {
    Elt r = zero();
    for (long i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
    return r;
  }

  Elt mul(const Elt& a, const Elt& b) const {
    std::vector<Padic> prod(2 * deg_ - 1, Padic::zero(ell_));
    for (long i = 0; i < deg_; ++i) {
      if (a[i].is_exact_zero()) continue;
      for (long j = 0; j < deg_; ++j) prod[i + j] = prod[i + j] + a[i] * b[j];
    }
    reduce(prod);
    return prod;
  }

  bool is_zero(const Elt& a) const {
    for (auto& c : a)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  void reduce(Elt& c) const {
    for (long i = static_cast<long>(c.size()) - 1; i >= deg_; --i) {
      if (c[i].is_exact_zero()) continue;
      if (k_ == 0) {
        c[i - 1] = c[i - 1] + c[i];  // relation ζ = 1
      } else {
        for (long j = 0; j < ell_ - 1; ++j)
          c[i - deg_ + j * step_] = c[i - deg_ + j * step_] - c[i];
      }
      c[i] = Padic::zero(ell_);
    }
    c.resize(deg_, Padic::zero(ell_));
  }

  long ell_, k_, prec_, step_, deg_;
};

/// Norm to Q_ℓ: the determinant of the multiplication-by-x matrix on the
/// power basis, eliminated with minimal-valuation pivoting so the valuation
/// of the result is certified.
inline Padic local_norm(const LocalCyclotomicField& F, const LocalCyclotomicField::Elt& x) {
  if (F.is_zero(x)) throw precondition_error("local_norm: nonzero element required");
  long d = F.degree();
  std::vector<LocalCyclotomicField::Elt> col;
  LocalCyclotomicField::Elt cur = x;
  for (long j = 0; j < d; ++j) {
    col.push_back(cur);
    if (j + 1 < d) cur = F.mul(cur, F.zeta());
  }
  // matrix M[i][j] = coefficient of ζ^i in x·ζ^j
  std::vector<std::vector<Padic>> M(d, std::vector<Padic>(d, Padic::zero(F.ell())));
  for (long j = 0; j < d; ++j)
    for (long i = 0; i < d; ++i) M[i][j] = col[j][i];

  Padic det = Padic::from_int(F.ell(), 1, F.precision());
  for (long c = 0; c < d; ++c) {
    long best = -1;
    for (long r = c; r < d; ++r) {
      if (M[r][c].is_zero()) continue;
      if (best < 0 || M[r][c].val() < M[best][c].val()) best = r;
    }
    if (best < 0) throw precondition_error("local_norm: precision exhausted in elimination");
    if (best != c) {
      std::swap(M[best], M[c]);
      det = -det;
    }
    det = det * M[c][c];
    for (long r = c + 1; r < d; ++r) {
      if (M[r][c].is_zero()) continue;
      Padic q = M[r][c] / M[c][c];
      for (long j = c; j < d; ++j) M[r][j] = M[r][j] - q * M[c][j];
    }
  }
  return det;
}

/// Calibrated degree of the ℓ-adic place of Q_ℓ(ζ_{ℓ^k}): the generator
/// ℓ^{max(k-1,0)}·Log_ℓ(1+ℓ) of the Iwasawa-log image of the local norm
/// group, so that ν̃ maps onto Z_ℓ.
inline Padic place_degree(long ell, long k, long prec) {
  Padic d = iwasawa_log(Padic::from_int(ell, 1 + ell, prec + 1), prec + 1);
  if (k > 1) d = d * Padic::from_int(ell, pow_int(Int(ell), k - 1), prec + 1);
  return d;
}

/// Degree of a finite place p ≠ ℓ: Log_ℓ(p).
inline Padic place_degree_prime(long ell, long p, long prec) {
  if (p == ell) throw precondition_error("place_degree_prime: p must differ from ell");
  return iwasawa_log(Padic::from_int(ell, p, prec + 1), prec + 1);
}

/// Logarithmic valuation of a nonzero rational at a place of Q: the ordinary
/// valuation away from ℓ, and -Log_ℓ(x)/deg at the ℓ-adic place.
inline Padic logval(const Rat& x, long p, long ell, long prec) {
  if (x == 0) throw precondition_error("logval: nonzero argument required");
  if (p != ell) return Padic::from_int(ell, valuation(x, p), prec);
  Padic lx = iwasawa_log(Padic::from_rational(ell, x, prec + 2), prec + 2);
  if (lx.is_zero()) return Padic::zero(ell);
  return -(lx / place_degree(ell, 0, prec + 2)).truncated(prec);
}

/// ν̃ at the ℓ-adic place of Q_ℓ(ζ_{ℓ^k}): -Log_ℓ(N(x))/deg.
inline Padic logval_local(const LocalCyclotomicField& F, const LocalCyclotomicField::Elt& x) {
  Padic n = local_norm(F, x);
  Padic ln = iwasawa_log(n, F.precision());
  if (ln.is_zero()) return Padic::zero(F.ell());
  return -(ln / place_degree(F.ell(), F.level(), F.precision()));
}

struct DegreeZeroTerm {
  long p;        // 0 marks the ℓ-adic place
  long nu;       // ordinary valuation (finite places only)
  Padic value;   // contribution ν̃_p(x)·deg(p)
};

struct DegreeZeroReport {
  bool ok;
  Rat x;
  long ell, M;
  std::vector<DegreeZeroTerm> terms;
  Padic sum;
};

/// Degree-zero invariant of a principal rational: Σ_p ν̃_p(x)·deg(p) ≡ 0 mod
/// ℓ^M, with the ℓ-place term -Log_ℓ(x).
inline DegreeZeroReport degree_zero_check(const Rat& x, long ell, long M) {
  if (x == 0) throw precondition_error("degree_zero_check: nonzero rational required");
  long prec = M + 2;
  DegreeZeroReport rep{false, x, ell, M, {}, Padic::zero(ell)};
  Padic sum = Padic::zero(ell);
  Int num = abs(x.get_num()), den = x.get_den();
  std::map<long, long> vals;
  for (Int t : {num, den}) {
    long sgn = (t == den) ? -1 : 1;
    Int m = t;
    for (long p = 2; Int(p) * p <= m; ++p)
      while (m % p == 0) { m /= p; vals[p] += sgn; }
    if (m > 1) vals[m.get_si()] += sgn;
  }
  for (auto& [p, v] : vals) {
    if (v == 0 || p == ell) continue;
    Padic term = Padic::from_int(ell, v, prec) * place_degree_prime(ell, p, prec);
    rep.terms.push_back({p, v, term});
    sum = sum + term;
  }
  Padic lterm = -iwasawa_log(Padic::from_rational(ell, x, prec), prec);
  rep.terms.push_back({0, 0, lterm});
  sum = sum + lterm;
  rep.sum = sum;
  rep.ok = sum.is_zero() || sum.val() >= M;
  return rep;
}

}  // namespace stickel
