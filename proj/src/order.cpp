#include <map>

#include "nomfix/cunify.hpp"
#include "nomfix/fixpoint.hpp"
#include "nomfix/unify.hpp"

namespace nomfix {

namespace {

std::set<Atom> solution_atoms(const Solution& s) {
  std::set<Atom> out;
  for (const auto& c : s.context.constraints()) out.merge(c.perm.mentioned());
  for (const auto& [_, t] : s.subst.bindings()) out.merge(atoms_of(t));
  return out;
}

void avoid_all(NameGenerator& gen, const std::set<Atom>& atoms) {
  for (const auto& a : atoms) gen.avoid(a);
}

}  // namespace

bool is_more_general(const Signature& sig, const Solution& s1, const Solution& s2,
                     const std::set<Var>& vars) {
  // Rename the variables of s1 apart from those of s2.
  std::set<Var> s1_vars;
  for (const auto& x : vars) s1_vars.merge(free_vars(s1.subst.image(x)));
  for (const auto& c : s1.context.constraints()) s1_vars.insert(c.var);
  Substitution rho;
  std::map<Var, Var> renamed;
  for (const auto& v : s1_vars) {
    Var fresh("%" + v.name());
    renamed.emplace(v, fresh);
    rho.bind(v, Term::var(fresh));
  }

  Problem pr;
  std::set<Var> rigid;
  for (const auto& x : vars) {
    const Term rhs = s2.subst.image(x);
    rigid.merge(free_vars(rhs));
    pr.constraints.emplace_back(EqConstraint{apply_subst(s1.subst.image(x), rho), rhs});
  }
  for (const auto& c : s2.context.constraints()) rigid.insert(c.var);

  const auto atoms1 = solution_atoms(s1);
  const auto atoms2 = solution_atoms(s2);

  CUnifyOptions opts;
  opts.rigid = rigid;
  opts.rigid_ctx = s2.context;
  opts.keep_tree = false;
  CUnifyResult candidates = c_unify(sig, pr, opts);

  for (const auto& cand : candidates.solutions) {
    NameGenerator gen;
    avoid_all(gen, atoms1);
    avoid_all(gen, atoms2);
    avoid_all(gen, solution_atoms(cand));

    Substitution sigma = cand.subst;
    // Variables constrained only by Φ1 may be sent anywhere; a new atom is
    // fixed by every permutation of Φ1.
    for (const auto& [v, fresh] : renamed) {
      if (!sigma.binds(fresh) && s2.context.perms_of(fresh).empty()) {
        bool in_image = false;
        for (const auto& x : vars) in_image = in_image || occurs(fresh, apply_subst(s1.subst.image(x), rho));
        if (!in_image) sigma.bind(fresh, Term::atom(gen.fresh()));
      }
    }

    bool ok = true;
    for (const auto& x : vars) {
      const Term l = apply_subst(apply_subst(s1.subst.image(x), rho), sigma);
      if (!check_alpha_fixp(sig, s2.context, l, s2.subst.image(x), gen).holds) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    // Generated atoms of Φ1 unknown to s2 stand for new names.
    FixpointContext ext = s2.context;
    std::vector<std::pair<Permutation, Term>> goals;
    std::set<Var> goal_vars;
    for (const auto& c : s1.context.constraints()) {
      Term target = apply_subst(apply_subst(Term::var(c.var), rho), sigma);
      goal_vars.merge(free_vars(target));
      goals.emplace_back(c.perm, std::move(target));
    }
    for (const auto& a : atoms1) {
      if (!a.is_generated() || atoms2.count(a)) continue;
      const Atom partner = gen.fresh();
      for (const auto& z : goal_vars) ext.add(Permutation::swap(a, partner), z);
    }
    for (const auto& [p, target] : goals) {
      if (!check_fixp(sig, ext, p, target, gen).holds) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace nomfix
