#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nomfix/unify.hpp"

namespace nomfix {

/// Derivation tree of C-unification. Each node records the rule (and binding,
/// for instantiations) that produced it from its parent; leaves are normal forms.
struct DerivationTree {
  enum class Status { inner, success, fail };

  Problem problem;
  std::string rule;
  std::optional<std::pair<Var, Term>> binding;
  Status status = Status::inner;
  std::optional<Witness> reason;
  std::optional<Solution> solution;
  std::vector<DerivationTree> children;
};

struct CUnifyOptions {
  bool dedup = false;
  unsigned jobs = 1;
  bool keep_tree = true;
  MeasureStats* stats = nullptr;
  std::string fresh_prefix = kDefaultFreshPrefix;
  std::set<Var> rigid;
  FixpointContext rigid_ctx;  // what may be assumed about rigid variables
};

struct CUnifyResult {
  std::vector<Solution> solutions;
  DerivationTree tree;
};

/// All children of one rewrite: two for a C-headed constraint, otherwise at
/// most one. Empty on a normal form. Throws SignatureError on A/AC symbols.
std::vector<std::pair<Problem, SimplStep>> c_simplify_step(const Signature& sig,
                                                           const Problem& pr, NameGenerator& gen,
                                                           const std::set<Var>& rigid = {});

/// Nullopt for a successful leaf, otherwise the failure reason.
std::optional<Witness> classify_leaf(const Problem& pr);

/// Throws SignatureError when `pr` uses A or AC symbols.
CUnifyResult c_unify(const Signature& sig, const Problem& pr, const CUnifyOptions& opts = {});

/// Stable text key used to order solution lists.
std::string canonical_key(const Solution& sol);

}  // namespace nomfix
