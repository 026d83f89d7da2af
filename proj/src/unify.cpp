#include "nomfix/unify.hpp"

#include <algorithm>
#include <stdexcept>

#include "simplify.hpp"

namespace nomfix {

std::string failure_name(FailureKind k) {
  switch (k) {
    case FailureKind::clash:
      return "clash";
    case FailureKind::occurs:
      return "occurs";
    case FailureKind::fixpoint_inconsistent:
      return "fixpoint-inconsistent";
    case FailureKind::rigid_violation:
      return "rigid-violation";
  }
  return "clash";
}

std::optional<std::pair<Problem, SimplStep>> simplify_step(const Problem& pr, NameGenerator& gen,
                                                           const std::set<Var>& rigid) {
  detail::SimplifyConfig cfg;
  cfg.rigid = &rigid;
  auto children = detail::rewrite(cfg, pr, gen);
  if (children.empty()) return std::nullopt;
  return std::move(children.front());
}

std::optional<Witness> classify_normal_form(const Problem& nf, const std::set<Var>& rigid,
                                            const FixpointContext& rigid_ctx,
                                            const std::set<Atom>& known_atoms) {
  for (const auto& c : nf.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      for (const Term* side : {&eq->lhs, &eq->rhs}) {
        const Term* other = side == &eq->lhs ? &eq->rhs : &eq->lhs;
        if (side->is_susp() && occurs(side->var(), *other)) return Witness{FailureKind::occurs, c};
      }
      for (const Term* side : {&eq->lhs, &eq->rhs}) {
        if (side->is_susp() && rigid.count(side->var())) {
          return Witness{FailureKind::rigid_violation, c};
        }
      }
      return Witness{FailureKind::clash, c};
    }
    const auto& fx = std::get<FixConstraint>(c);
    if (fx.target.is_atom()) return Witness{FailureKind::fixpoint_inconsistent, c};
    if (!fx.primitive()) return Witness{FailureKind::clash, c};
    const Var& x = fx.target.var();
    if (!rigid.count(x)) continue;
    const auto allowed = supp_perm_set(rigid_ctx, x);
    for (const auto& a : support_perm(fx.perm)) {
      if (a.is_generated() && !known_atoms.count(a)) continue;
      if (!allowed.count(a)) return Witness{FailureKind::rigid_violation, c};
    }
  }
  return std::nullopt;
}

Solution extract_solution(const Problem& nf, const std::vector<SimplStep>& steps) {
  if (classify_normal_form(nf)) throw std::invalid_argument("normal form is not successful");
  Solution sol;
  for (const auto& c : nf.constraints) {
    const auto& fx = std::get<FixConstraint>(c);
    sol.context.add(fx.perm, fx.target.var());
  }
  for (const auto& st : steps) {
    if (st.binding) {
      sol.subst = compose_subst(sol.subst, Substitution::single(st.binding->first, st.binding->second));
    }
  }
  return sol;
}

namespace {

UnifyResult run(const Problem& pr, const std::set<Var>& rigid, const FixpointContext& ctx,
                const UnifyOptions& opts) {
  NameGenerator gen(opts.fresh_prefix);
  auto known = problem_atoms(pr);
  for (const auto& c : ctx.constraints()) known.merge(c.perm.mentioned());
  for (const auto& a : known) gen.avoid(a);

  detail::SimplifyConfig cfg;
  cfg.rigid = &rigid;
  UnifyResult res;
  Problem cur = pr;
  Substitution sigma;
  while (true) {
    auto children = detail::rewrite(cfg, cur, gen);
    if (children.empty()) break;
    auto& [next, step] = children.front();
    detail::record_measure(opts.stats, cur, next, false);
    if (step.binding) {
      sigma = compose_subst(sigma, Substitution::single(step.binding->first, step.binding->second));
    }
    if (opts.trace) res.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  res.normal_form = cur;
  res.witness = classify_normal_form(cur, rigid, ctx, known);
  if (!res.witness) {
    Solution sol;
    sol.context = ctx;
    for (const auto& c : cur.constraints) {
      const auto& fx = std::get<FixConstraint>(c);
      sol.context.add(fx.perm, fx.target.var());
    }
    sol.subst = std::move(sigma);
    res.solution = std::move(sol);
  }
  return res;
}

void require_syntactic(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
    case Term::Kind::susp:
      return;
    case Term::Kind::abs:
      require_syntactic(sig, t.body());
      return;
    case Term::Kind::tuple:
      for (const auto& it : t.items()) require_syntactic(sig, it);
      return;
    case Term::Kind::app:
      if (sig.theory(t.symbol()) != Theory::none) {
        throw SignatureError("symbol '" + t.symbol() + "' has theory " +
                             theory_name(sig.theory(t.symbol())) +
                             "; syntactic unification needs uninterpreted symbols (use cunify)");
      }
      require_syntactic(sig, t.arg());
      return;
  }
}

}  // namespace

UnifyResult unify(const Problem& pr, const UnifyOptions& opts) { return run(pr, {}, {}, opts); }

UnifyResult unify(const Signature& sig, const Problem& pr, const UnifyOptions& opts) {
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      require_syntactic(sig, eq->lhs);
      require_syntactic(sig, eq->rhs);
    } else {
      require_syntactic(sig, std::get<FixConstraint>(c).target);
    }
  }
  return unify(pr, opts);
}

std::set<Var> lhs_vars(const Problem& pr) {
  std::set<Var> out;
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) out.merge(free_vars(eq->lhs));
  }
  return out;
}

std::set<Var> rhs_vars(const Problem& pr) {
  std::set<Var> out;
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) out.merge(free_vars(eq->rhs));
  }
  return out;
}

UnifyResult match(const Problem& pr, const std::set<Var>& rigid, const FixpointContext& ctx,
                  const UnifyOptions& opts) {
  const auto l = lhs_vars(pr);
  const auto r = rhs_vars(pr);
  for (const auto& x : l) {
    if (r.count(x)) {
      throw std::invalid_argument("matching problem shares variable " + x.name() +
                                  " between left- and right-hand sides");
    }
  }
  return run(pr, rigid, ctx, opts);
}

UnifyResult match(const Problem& pr, const UnifyOptions& opts) {
  return match(pr, lhs_vars(pr), {}, opts);
}

}  // namespace nomfix
