#pragma once

#include <set>
#include <string>
#include <vector>

#include "nomfix/atom.hpp"

namespace nomfix {

/// Transposition of two distinct atoms.
class Swapping {
 public:
  Swapping(Atom left, Atom right);

  const Atom& left() const { return left_; }
  const Atom& right() const { return right_; }

  Atom apply(const Atom& a) const {
    if (a == left_) return right_;
    if (a == right_) return left_;
    return a;
  }

  // (a b) and (b a) are the same transposition.
  friend bool operator==(const Swapping& l, const Swapping& r) {
    return (l.left_ == r.left_ && l.right_ == r.right_) ||
           (l.left_ == r.right_ && l.right_ == r.left_);
  }

 private:
  Atom left_;
  Atom right_;
};

/// A finite permutation stored as a list of swappings. The rightmost swapping
/// acts first: (a b)(b c) maps c to a. Equality is extensional.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Swapping> swappings) : swaps_(std::move(swappings)) {}
  Permutation(std::initializer_list<Swapping> swappings) : swaps_(swappings) {}

  static Permutation identity() { return {}; }
  static Permutation swap(const Atom& a, const Atom& b) { return Permutation{Swapping(a, b)}; }

  const std::vector<Swapping>& swappings() const { return swaps_; }
  bool empty_list() const { return swaps_.empty(); }

  Atom apply(const Atom& a) const;
  Atom apply_inverse(const Atom& a) const;

  /// Atoms mentioned in any swapping.
  std::set<Atom> mentioned() const;

  /// True if the permutation moves no atom.
  bool acts_as_identity() const;

  /// Minimal swapping list for the same action: one block per cycle, cycles
  /// and their members ordered by atom order. Used for printing contexts and
  /// as a canonical comparison key.
  Permutation normalized() const;

  friend bool operator==(const Permutation& l, const Permutation& r);

  /// Total order on actions (compares normalized forms).
  friend bool canonical_less(const Permutation& l, const Permutation& r);

 private:
  std::vector<Swapping> swaps_;
};

Atom apply_perm_atom(const Permutation& p, const Atom& a);
Permutation invert_perm(const Permutation& p);
/// apply(compose(p, q), a) == apply(p, apply(q, a)). Adjacent identical
/// swappings at the junction cancel.
Permutation compose_perm(const Permutation& p, const Permutation& q);
/// r ∘ p ∘ r⁻¹.
Permutation conjugate_perm(const Permutation& p, const Permutation& r);
std::set<Atom> support_perm(const Permutation& p);
std::set<Atom> diff_set(const Permutation& p, const Permutation& q);

}  // namespace nomfix
