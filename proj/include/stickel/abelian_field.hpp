#pragma once

#include <memory>
#include <set>
#include <unordered_map>

#include "stickel/util.hpp"

namespace stickel {

class AbelianField;
using FieldPtr = std::shared_ptr<const AbelianField>;

/// An abelian number field presented as (conductor f, kernel subgroup H) inside
/// Q(ζ_f): the field is the fixed field of H, and f is its exact conductor.
class AbelianField {
 public:
  long conductor() const { return f_; }
  const std::vector<long>& kernel() const { return H_; }
  const std::vector<long>& units() const { return units_; }
  /// Canonical coset representatives (smallest positive), sorted: the Galois group.
  const std::vector<long>& elements() const { return reps_; }
  long order() const { return static_cast<long>(reps_.size()); }

  long canonical_rep(long a) const {
    if (f_ == 1) return 1;
    a = mod_floor(a, f_);
    auto it = rep_of_.find(a);
    if (it == rep_of_.end())
      throw precondition_error("AbelianField: residue not coprime to conductor");
    return it->second;
  }

  long index_of(long rep) const { return idx_of_.at(rep); }

  long mul(long a, long b) const {
    if (f_ == 1) return 1;
    return canonical_rep(Int(Int(a) * b % f_).get_si());
  }

  long inv(long a) const {
    if (f_ == 1) return 1;
    return canonical_rep(mod_inverse_long(a, f_));
  }

  long identity() const { return f_ == 1 ? 1 : canonical_rep(1); }
  long conjugation() const { return f_ == 1 ? 1 : canonical_rep(f_ - 1); }
  bool is_imaginary() const { return conjugation() != identity(); }

  bool in_kernel(long a) const {
    if (f_ == 1) return true;
    return std::binary_search(H_.begin(), H_.end(), mod_floor(a, f_));
  }

  friend bool operator==(const AbelianField& a, const AbelianField& b) {
    return a.f_ == b.f_ && a.H_ == b.H_;
  }

  static FieldPtr make(long f, const std::vector<long>& h_gens, bool exact_conductor_check = true);
  static FieldPtr reduce_to_exact_conductor(long f, const std::vector<long>& h_gens);

 private:
  AbelianField() = default;

  long f_ = 1;
  std::vector<long> H_;       // all elements of the kernel subgroup, sorted
  std::vector<long> units_;   // all units mod f, sorted
  std::vector<long> reps_;    // canonical coset representatives, sorted
  std::unordered_map<long, long> rep_of_;  // unit -> canonical representative
  std::unordered_map<long, long> idx_of_;  // representative -> index in reps_
};

namespace detail {

inline std::vector<long> close_subgroup(long f, const std::vector<long>& gens) {
  std::set<long> s{1 % f == 0 ? 1 : 1};  // identity; for f=1 handled by caller
  if (f == 1) return {1};
  s = {1};
  std::vector<long> frontier{1};
  for (long g : gens) {
    long a = mod_floor(g, f);
    if (gcd_long(a, f) != 1)
      throw precondition_error("subgroup generator not coprime to the modulus");
    frontier.push_back(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<long> cur(s.begin(), s.end());
    for (long a : cur)
      for (long g : frontier) {
        long p = Int(Int(a) * g % f).get_si();
        if (s.insert(p).second) changed = true;
      }
  }
  return {s.begin(), s.end()};
}

inline std::vector<long> units_mod(long f) {
  if (f == 1) return {1};
  std::vector<long> u;
  for (long a = 1; a < f; ++a)
    if (gcd_long(a, f) == 1) u.push_back(a);
  return u;
}

}  // namespace detail

inline FieldPtr AbelianField::make(long f, const std::vector<long>& h_gens,
                                   bool exact_conductor_check) {
  if (f < 1) throw precondition_error("make_field: conductor must be positive");
  if (f % 4 == 2) throw precondition_error("make_field: conductor 2 mod 4 is not reduced");
  auto field = std::shared_ptr<AbelianField>(new AbelianField());
  field->f_ = f;
  field->units_ = detail::units_mod(f);
  field->H_ = detail::close_subgroup(f, h_gens);

  if (exact_conductor_check && f > 1) {
    for (long fp : divisors(f)) {
      if (fp == f || fp % 4 == 2) continue;
      bool contained = true;
      for (long a : field->units_) {
        if (a % fp == 1 % fp && !std::binary_search(field->H_.begin(), field->H_.end(), a)) {
          contained = false;
          break;
        }
      }
      if (contained)
        throw precondition_error("make_field: conductor is not exact, true conductor is " +
                                 std::to_string(fp));
    }
  }

  // Canonical representatives: smallest positive integer in each coset.
  for (long a : field->units_) {
    if (field->rep_of_.count(a)) continue;
    long rep = a;
    std::vector<long> coset;
    for (long h : field->H_) {
      long x = Int(Int(a) * h % f).get_si();
      coset.push_back(x);
      rep = std::min(rep, x);
    }
    for (long x : coset) field->rep_of_[x] = rep;
  }
  std::set<long> reps;
  for (auto& [u, r] : field->rep_of_) reps.insert(r);
  field->reps_.assign(reps.begin(), reps.end());
  if (f == 1) field->reps_ = {1};
  for (size_t i = 0; i < field->reps_.size(); ++i) field->idx_of_[field->reps_[i]] = i;
  return field;
}

inline FieldPtr AbelianField::reduce_to_exact_conductor(long f, const std::vector<long>& h_gens) {
  auto H = detail::close_subgroup(f, h_gens);
  auto units = detail::units_mod(f);
  long best = f;
  for (long fp : divisors(f)) {
    if (fp % 4 == 2) continue;
    bool contained = true;
    for (long a : units) {
      if (a % fp == 1 % fp && !std::binary_search(H.begin(), H.end(), a)) {
        contained = false;
        break;
      }
    }
    if (contained) { best = fp; break; }  // divisors() is sorted ascending
  }
  std::vector<long> gens;
  for (long h : H) gens.push_back(mod_floor(h, best));
  return make(best, gens);
}

/// The Galois automorphism of F induced by ζ_f ↦ ζ_f^a.
struct GaloisElement {
  FieldPtr field;
  long rep;

  friend bool operator==(const GaloisElement& a, const GaloisElement& b) {
    return *a.field == *b.field && a.rep == b.rep;
  }
};

inline FieldPtr make_field(long f, const std::vector<long>& h_gens) {
  return AbelianField::make(f, h_gens);
}

inline GaloisElement artin_symbol(const FieldPtr& F, long a) {
  if (F->conductor() > 1 && gcd_long(mod_floor(a, F->conductor()), F->conductor()) != 1)
    throw precondition_error("artin_symbol: argument not coprime to the conductor");
  return GaloisElement{F, F->canonical_rep(a)};
}

inline GaloisElement complex_conjugation(const FieldPtr& F) {
  return GaloisElement{F, F->conjugation()};
}

inline bool is_imaginary(const FieldPtr& F) { return F->is_imaginary(); }

inline bool is_subfield(const FieldPtr& K, const FieldPtr& F) {
  long fK = K->conductor(), fF = F->conductor();
  if (fF % fK != 0) return false;
  for (long h : F->kernel())
    if (!K->in_kernel(mod_floor(h, fK))) return false;
  return true;
}

/// The natural surjection G_F → G_K for K ⊆ F.
inline GaloisElement restrict_to(const FieldPtr& F, const FieldPtr& K, const GaloisElement& g) {
  if (!(*g.field == *F)) throw precondition_error("restrict: element not in G_F");
  if (!is_subfield(K, F)) throw precondition_error("restrict: K is not a subfield of F");
  return GaloisElement{K, K->canonical_rep(mod_floor(g.rep, K->conductor()))};
}

/// All subgroups of G_F containing the trivial one, as sorted element lists of
/// canonical representatives. Used to enumerate the subfields of F.
inline std::vector<std::vector<long>> all_subgroups(const FieldPtr& F) {
  std::set<std::vector<long>> found;
  std::vector<std::vector<long>> queue;
  std::vector<long> triv{F->identity()};
  found.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    auto S = queue.back();
    queue.pop_back();
    for (long g : F->elements()) {
      std::set<long> ext(S.begin(), S.end());
      // close under multiplication by g
      std::vector<long> frontier{g};
      while (!frontier.empty()) {
        long x = frontier.back();
        frontier.pop_back();
        if (!ext.insert(x).second) continue;
        for (long s : std::vector<long>(ext.begin(), ext.end())) {
          long p = F->mul(s, x);
          if (!ext.count(p)) frontier.push_back(p);
        }
      }
      std::vector<long> T(ext.begin(), ext.end());
      if (found.insert(T).second) queue.push_back(T);
    }
  }
  return {found.begin(), found.end()};
}

/// All subfields of F, each with its exact conductor.
inline std::vector<FieldPtr> subfields(const FieldPtr& F) {
  std::vector<FieldPtr> out;
  for (auto& S : all_subgroups(F)) {
    std::vector<long> gens(F->kernel());
    gens.insert(gens.end(), S.begin(), S.end());
    out.push_back(AbelianField::reduce_to_exact_conductor(F->conductor(), gens));
  }
  return out;
}

}  // namespace stickel
