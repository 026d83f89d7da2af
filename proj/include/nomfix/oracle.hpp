#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nomfix/problem.hpp"
#include "nomfix/signature.hpp"
#include "nomfix/term.hpp"

namespace nomfix::oracle {

struct PoolSymbol {
  std::string name;
  Theory theory = Theory::none;
  int arity = 1;  // 1: f(t); 2: f(t1, t2)
};

/// Finite grammar for enumeration: leaves are the atoms and (as bare
/// suspensions) the variables; each level adds abstractions over pool atoms,
/// symbol applications and, optionally, pairs.
struct TermPool {
  std::vector<Atom> atoms;
  std::vector<Var> vars;
  std::vector<PoolSymbol> symbols;
  int max_depth = 2;
  bool abstractions = true;
  bool pairs = false;

  Signature signature() const;
  TermPool ground() const;  // same pool without variables
};

/// 3 atoms, 2 variables, depth 2, one symbol per theory class.
TermPool default_pool();

/// Canonical text of a ground term: bound atoms become binding-depth indices,
/// A/AC applications are flattened, C and AC arguments are sorted.
/// Throws std::invalid_argument on non-ground input.
std::string canonical_form(const Signature& sig, const Term& t);

bool ground_alpha_oracle(const Signature& sig, const Term& s, const Term& t);

/// Every term of the pool up to max_depth, each once, in a fixed order.
std::vector<Term> enumerate_terms(const TermPool& pool);

/// Every total map from `vars` into `terms`, in a fixed order. Stops early
/// when `fn` returns false.
void for_each_ground_subst(const std::vector<Var>& vars, const std::vector<Term>& terms,
                           const std::function<bool(const Substitution&)>& fn);

std::vector<Substitution> enumerate_ground_substs(const std::vector<Var>& vars,
                                                  const TermPool& pool);

/// Solution conditions checked with the fixed-point engine: every equation and
/// fixed-point constraint holds under the context after substitution, and the
/// substitution is idempotent on the problem's variables.
bool verify_solution(const Signature& sig, const Problem& pr, const Solution& sol);

struct CompletenessReport {
  bool complete = true;
  std::size_t witnesses = 0;  // ground substitutions that solve the problem
  std::size_t checked = 0;
  std::optional<Substitution> counterexample;
};

/// Every ground substitution from `pool` that solves `pr` must be an instance
/// of some member of `sols`.
CompletenessReport completeness_check(const Signature& sig, const Problem& pr,
                                      const std::vector<Solution>& sols, const TermPool& pool);

}  // namespace nomfix::oracle
