#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace stickel {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation's precondition is violated (caller error).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails (library bug, never expected).
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long pow_mod_long(long base, long exp, long mod) {
  Int b(base), m(mod), r;
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp), m.get_mpz_t());
  return r.get_si();
}

inline Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw precondition_error("mod_inverse: element not invertible");
  return r;
}

inline long mod_inverse_long(long a, long m) {
  return mod_inverse(Int(mod_floor(a, m)), Int(m)).get_si();
}

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw precondition_error("factorize: positive argument required");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto& [p, e] : factorize(n)) {
    size_t sz = out.size();
    long pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long euler_phi(long n) {
  long r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(const Int& n, long p) {
  if (n == 0) throw precondition_error("valuation: zero argument");
  Int m = abs(n), q(p);
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
    m /= q;
    ++v;
  }
  return v;
}

inline long valuation(const Rat& q, long p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

/// Smallest primitive root modulo an odd prime power p^e (or modulo 2, 4).
inline long primitive_root(long m) {
  long phi = euler_phi(m);
  auto qs = prime_divisors(phi);
  for (long g = 2; g < m; ++g) {
    if (gcd_long(g, m) != 1) continue;
    bool ok = true;
    for (long q : qs)
      if (pow_mod_long(g, phi / q, m) == 1) { ok = false; break; }
    if (ok) return g;
  }
  if (m <= 2) return 1;
  throw consistency_error("primitive_root: none found");
}

/// CRT for coprime moduli.
inline long crt(long a1, long m1, long a2, long m2) {
  long m = m1 * m2;
  Int x = Int(a1) + Int(m1) * ((Int(a2 - a1) * mod_inverse(Int(m1), Int(m2))) % m2);
  x %= m;
  if (x < 0) x += m;
  return x.get_si();
}

/// Multiplicative order of a modulo m.
inline long mult_order(long a, long m) {
  if (m == 1) return 1;
  if (gcd_long(mod_floor(a, m), m) != 1)
    throw precondition_error("mult_order: argument not a unit");
  long o = 1, x = mod_floor(a, m);
  while (x != 1) {
    x = Int(Int(x) * a % m).get_si();
    ++o;
  }
  return o;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace stickel
