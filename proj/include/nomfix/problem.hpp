#pragma once

#include <variant>
#include <vector>

#include "nomfix/context.hpp"
#include "nomfix/substitution.hpp"
#include "nomfix/term.hpp"

namespace nomfix {

/// s ≈? t
struct EqConstraint {
  Term lhs;
  Term rhs;
  friend bool operator==(const EqConstraint&, const EqConstraint&) = default;
};

/// π ⋏? t
struct FixConstraint {
  Permutation perm;
  Term target;
  friend bool operator==(const FixConstraint&, const FixConstraint&) = default;

  bool primitive() const { return target.is_susp() && target.perm().empty_list(); }
};

using Constraint = std::variant<EqConstraint, FixConstraint>;

/// Multiset of constraints, kept in queue order.
struct Problem {
  std::vector<Constraint> constraints;

  bool empty() const { return constraints.empty(); }
  friend bool operator==(const Problem&, const Problem&) = default;
};

std::set<Var> problem_vars(const Problem& pr);
std::set<Atom> problem_atoms(const Problem& pr);
Problem apply_subst(const Problem& pr, const Substitution& s);

/// ⟨Φ, σ⟩
struct Solution {
  FixpointContext context;
  Substitution subst;
  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace nomfix
