#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nomfix/problem.hpp"
#include "nomfix/signature.hpp"

namespace nomfix {

enum class FailureKind { clash, occurs, fixpoint_inconsistent, rigid_violation };

std::string failure_name(FailureKind k);

/// Why a normal form is not successful: the first offending constraint.
struct Witness {
  FailureKind kind;
  Constraint constraint;
};

/// One application of a simplification rule.
struct SimplStep {
  std::string rule;
  Constraint consumed;
  std::vector<Constraint> produced;
  std::optional<std::pair<Var, Term>> binding;  // instantiating rules only
};

/// Counters for the termination measure (distinct variables, multiset of
/// constraint sizes or heights).
struct MeasureStats {
  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
};

struct UnifyOptions {
  bool trace = false;
  MeasureStats* stats = nullptr;
  std::string fresh_prefix = kDefaultFreshPrefix;
};

struct UnifyResult {
  std::optional<Solution> solution;
  std::optional<Witness> witness;
  std::vector<SimplStep> steps;  // filled when tracing
  Problem normal_form;

  bool solved() const { return solution.has_value(); }
};

/// One rewrite by the first applicable rule, non-instantiating rules first.
/// Rigid variables are never instantiated. Returns nothing on a normal form.
std::optional<std::pair<Problem, SimplStep>> simplify_step(const Problem& pr, NameGenerator& gen,
                                                           const std::set<Var>& rigid = {});

/// Syntactic unification; every function symbol is read as uninterpreted.
UnifyResult unify(const Problem& pr, const UnifyOptions& opts = {});

/// As above, after checking that `sig` gives every symbol of `pr` no theory.
/// Throws SignatureError otherwise.
UnifyResult unify(const Signature& sig, const Problem& pr, const UnifyOptions& opts = {});

/// Φ and σ of a successful normal form; `steps` must carry the bindings made on
/// the way. Throws std::invalid_argument on a failing normal form.
Solution extract_solution(const Problem& nf, const std::vector<SimplStep>& steps);

/// First reason `nf` is not successful, if any. Remaining constraints on rigid
/// variables must follow from `rigid_ctx`; atoms outside `known_atoms` that are
/// generated count as new and are ignored in that check.
std::optional<Witness> classify_normal_form(const Problem& nf, const std::set<Var>& rigid = {},
                                            const FixpointContext& rigid_ctx = {},
                                            const std::set<Atom>& known_atoms = {});

/// Matching: unification in which variables in `rigid` are never bound.
/// Throws std::invalid_argument when left- and right-hand variables overlap.
UnifyResult match(const Problem& pr, const std::set<Var>& rigid, const FixpointContext& ctx = {},
                  const UnifyOptions& opts = {});

/// Matching with the left-hand-side variables rigid.
UnifyResult match(const Problem& pr, const UnifyOptions& opts = {});

/// Variables of equality left-hand sides, and of right-hand sides.
std::set<Var> lhs_vars(const Problem& pr);
std::set<Var> rhs_vars(const Problem& pr);

/// ⟨Φ1,σ1⟩ ≤ ⟨Φ2,σ2⟩ over `vars`: some σ' has Φ2 ⊢ Xσ1σ' ≈ Xσ2 for X in
/// `vars` and Φ2 ⊢ Φ1σ'. Candidates for σ' come from (C-)matching; generated
/// atoms of Φ1 that s2 does not mention are read as new names.
bool is_more_general(const Signature& sig, const Solution& s1, const Solution& s2,
                     const std::set<Var>& vars);

}  // namespace nomfix
