#include "nomfix/problem.hpp"

namespace nomfix {

namespace {

template <class F>
void each_term(const Problem& pr, F&& f) {
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      f(eq->lhs);
      f(eq->rhs);
    } else {
      const auto& fx = std::get<FixConstraint>(c);
      f(fx.target);
    }
  }
}

}  // namespace

std::set<Var> problem_vars(const Problem& pr) {
  std::set<Var> out;
  each_term(pr, [&](const Term& t) { out.merge(free_vars(t)); });
  return out;
}

std::set<Atom> problem_atoms(const Problem& pr) {
  std::set<Atom> out;
  each_term(pr, [&](const Term& t) { out.merge(atoms_of(t)); });
  for (const auto& c : pr.constraints) {
    if (const auto* fx = std::get_if<FixConstraint>(&c)) out.merge(fx->perm.mentioned());
  }
  return out;
}

Problem apply_subst(const Problem& pr, const Substitution& s) {
  Problem out;
  out.constraints.reserve(pr.constraints.size());
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      out.constraints.emplace_back(EqConstraint{apply_subst(eq->lhs, s), apply_subst(eq->rhs, s)});
    } else {
      const auto& fx = std::get<FixConstraint>(c);
      out.constraints.emplace_back(FixConstraint{fx.perm, apply_subst(fx.target, s)});
    }
  }
  return out;
}

}  // namespace nomfix
