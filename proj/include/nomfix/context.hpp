#pragma once

#include <set>
#include <vector>

#include "nomfix/atom.hpp"
#include "nomfix/permutation.hpp"

namespace nomfix {

/// a # X
struct FreshnessConstraint {
  Atom atom;
  Var var;

  friend auto operator<=>(const FreshnessConstraint& l, const FreshnessConstraint& r) {
    if (auto c = l.var <=> r.var; c != 0) return c;
    return l.atom <=> r.atom;
  }
  friend bool operator==(const FreshnessConstraint&, const FreshnessConstraint&) = default;
};

class FreshnessContext {
 public:
  FreshnessContext() = default;
  FreshnessContext(std::initializer_list<FreshnessConstraint> init) : constraints_(init) {}

  void add(const Atom& a, const Var& x) { constraints_.insert({a, x}); }
  bool contains(const Atom& a, const Var& x) const { return constraints_.count({a, x}) != 0; }
  bool empty() const { return constraints_.empty(); }
  std::size_t size() const { return constraints_.size(); }

  const std::set<FreshnessConstraint>& constraints() const { return constraints_; }
  std::set<Atom> restricted(const Var& x) const;

  friend bool operator==(const FreshnessContext&, const FreshnessContext&) = default;

 private:
  std::set<FreshnessConstraint> constraints_;
};

/// Primitive fixed-point constraint π ⋏ X.
struct FixpointConstraint {
  Permutation perm;
  Var var;

  friend bool operator==(const FixpointConstraint& l, const FixpointConstraint& r) {
    return l.var == r.var && l.perm == r.perm;
  }
};

/// Set of primitive fixed-point constraints, deduplicated by permutation
/// action and kept in (variable, canonical permutation) order. Entries whose
/// permutation acts as the identity are dropped.
class FixpointContext {
 public:
  FixpointContext() = default;
  FixpointContext(std::initializer_list<FixpointConstraint> init);

  void add(const Permutation& p, const Var& x);
  void add_all(const FixpointContext& other);
  bool contains(const Permutation& p, const Var& x) const;
  bool empty() const { return constraints_.empty(); }
  std::size_t size() const { return constraints_.size(); }

  const std::vector<FixpointConstraint>& constraints() const { return constraints_; }
  std::vector<Permutation> perms_of(const Var& x) const;

  friend bool operator==(const FixpointContext& l, const FixpointContext& r);

 private:
  std::vector<FixpointConstraint> constraints_;
};

/// Union of the supports of perm(Υ|_X).
std::set<Atom> supp_perm_set(const FixpointContext& ctx, const Var& x);

}  // namespace nomfix
