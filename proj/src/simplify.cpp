#include "simplify.hpp"

#include <algorithm>
#include <functional>

namespace nomfix::detail {

namespace {

struct Alternative {
  std::string rule;
  std::vector<Constraint> produced;
};

Theory theory_of(const SimplifyConfig& cfg, const std::string& symbol) {
  return cfg.sig ? cfg.sig->theory(symbol) : Theory::none;
}

bool is_rigid(const SimplifyConfig& cfg, const Var& x) {
  return cfg.rigid && cfg.rigid->count(x) != 0;
}

void add_new_name_constraints(std::vector<Constraint>& out, const Atom& c1, const Atom& c2,
                              const Term& t) {
  for (const auto& y : free_vars(t)) {
    out.emplace_back(FixConstraint{Permutation::swap(c1, c2), Term::var(y)});
  }
}

// Non-instantiating rules for one constraint. Empty when none applies.
std::vector<Alternative> non_instantiating(const SimplifyConfig& cfg, const Constraint& c,
                                           NameGenerator& gen) {
  if (const auto* fx = std::get_if<FixConstraint>(&c)) {
    const Permutation& p = fx->perm;
    const Term& t = fx->target;
    switch (t.kind()) {
      case Term::Kind::atom:
        if (p.apply(t.as_atom()) == t.as_atom()) return {{"fix-at", {}}};
        return {};
      case Term::Kind::app: {
        if (cfg.c_mode && theory_of(cfg, t.symbol()) == Theory::C) {
          const auto args = t.app_args();
          const Term p0 = act_term(p, args[0]);
          const Term p1 = act_term(p, args[1]);
          return {{"fix-fC1", {EqConstraint{p0, args[0]}, EqConstraint{p1, args[1]}}},
                  {"fix-fC2", {EqConstraint{p0, args[1]}, EqConstraint{p1, args[0]}}}};
        }
        return {{"fix-f", {FixConstraint{p, t.arg()}}}};
      }
      case Term::Kind::tuple: {
        Alternative alt{"fix-tuple", {}};
        for (const auto& it : t.items()) alt.produced.emplace_back(FixConstraint{p, it});
        return {alt};
      }
      case Term::Kind::abs: {
        const Atom c1 = gen.fresh();
        const Atom c2 = gen.fresh();
        Alternative alt{"fix-abs", {}};
        alt.produced.emplace_back(
            FixConstraint{p, act_term(Permutation::swap(t.binder(), c1), t.body())});
        add_new_name_constraints(alt.produced, c1, c2, t.body());
        return {alt};
      }
      case Term::Kind::susp:
        if (t.perm().empty_list()) return {};
        return {{"fix-var",
                 {FixConstraint{conjugate_perm(p, invert_perm(t.perm())).normalized(),
                                Term::var(t.var())}}}};
    }
    return {};
  }

  const auto& eq = std::get<EqConstraint>(c);
  const Term& s = eq.lhs;
  const Term& t = eq.rhs;
  if (s.is_susp() && t.is_susp() && s.var() == t.var()) {
    return {{"eq-var",
             {FixConstraint{compose_perm(invert_perm(t.perm()), s.perm()).normalized(),
                            Term::var(s.var())}}}};
  }
  if (s.kind() != t.kind()) return {};
  switch (s.kind()) {
    case Term::Kind::atom:
      if (s.as_atom() == t.as_atom()) return {{"eq-a", {}}};
      return {};
    case Term::Kind::app: {
      if (s.symbol() != t.symbol()) return {};
      if (cfg.c_mode && theory_of(cfg, s.symbol()) == Theory::C) {
        const auto sa = s.app_args();
        const auto ta = t.app_args();
        return {{"eq-fC1", {EqConstraint{sa[0], ta[0]}, EqConstraint{sa[1], ta[1]}}},
                {"eq-fC2", {EqConstraint{sa[0], ta[1]}, EqConstraint{sa[1], ta[0]}}}};
      }
      return {{"eq-f", {EqConstraint{s.arg(), t.arg()}}}};
    }
    case Term::Kind::tuple: {
      if (s.items().size() != t.items().size()) return {};
      Alternative alt{"eq-tuple", {}};
      for (std::size_t i = 0; i < s.items().size(); ++i) {
        alt.produced.emplace_back(EqConstraint{s.items()[i], t.items()[i]});
      }
      return {alt};
    }
    case Term::Kind::abs: {
      if (s.binder() == t.binder()) return {{"eq-abs1", {EqConstraint{s.body(), t.body()}}}};
      const Atom& a = s.binder();
      const Atom& b = t.binder();
      const Atom c1 = gen.fresh();
      const Atom c2 = gen.fresh();
      Alternative alt{"eq-abs2", {}};
      alt.produced.emplace_back(EqConstraint{s.body(), act_term(Permutation::swap(a, b), t.body())});
      alt.produced.emplace_back(FixConstraint{Permutation::swap(a, c1), t.body()});
      add_new_name_constraints(alt.produced, c1, c2, t.body());
      return {alt};
    }
    case Term::Kind::susp:
      return {};
  }
  return {};
}

struct Instantiation {
  std::string rule;
  Var var;
  Term image;
};

std::optional<Instantiation> instantiating(const SimplifyConfig& cfg, const Constraint& c) {
  const auto* eq = std::get_if<EqConstraint>(&c);
  if (!eq) return std::nullopt;
  auto attempt = [&](const Term& susp, const Term& other,
                     const char* rule) -> std::optional<Instantiation> {
    if (!susp.is_susp() || is_rigid(cfg, susp.var()) || occurs(susp.var(), other)) {
      return std::nullopt;
    }
    return Instantiation{rule, susp.var(), act_term(invert_perm(susp.perm()), other)};
  };
  if (auto i = attempt(eq->lhs, eq->rhs, "eq-inst1")) return i;
  return attempt(eq->rhs, eq->lhs, "eq-inst2");
}

void push_unique(std::vector<Constraint>& v, Constraint c) {
  if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(std::move(c));
}

std::size_t constraint_weight(const Constraint& c, bool heights) {
  const auto w = heights ? term_height : term_size;
  if (const auto* eq = std::get_if<EqConstraint>(&c)) {
    return heights ? std::max(w(eq->lhs), w(eq->rhs)) : w(eq->lhs) + w(eq->rhs);
  }
  return w(std::get<FixConstraint>(c).target);
}

}  // namespace

std::vector<std::pair<Problem, SimplStep>> rewrite(const SimplifyConfig& cfg, const Problem& pr,
                                                   NameGenerator& gen) {
  const auto& cs = pr.constraints;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto alts = non_instantiating(cfg, cs[i], gen);
    if (alts.empty()) continue;
    std::vector<std::pair<Problem, SimplStep>> out;
    for (auto& alt : alts) {
      Problem next;
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j != i) push_unique(next.constraints, cs[j]);
      }
      for (const auto& p : alt.produced) push_unique(next.constraints, p);
      out.emplace_back(std::move(next),
                       SimplStep{alt.rule, cs[i], std::move(alt.produced), std::nullopt});
    }
    return out;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto inst = instantiating(cfg, cs[i]);
    if (!inst) continue;
    const auto s = Substitution::single(inst->var, inst->image);
    Problem rest;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (j != i) rest.constraints.push_back(cs[j]);
    }
    rest = apply_subst(rest, s);
    Problem next;
    for (auto& c : rest.constraints) push_unique(next.constraints, std::move(c));
    std::vector<std::pair<Problem, SimplStep>> out;
    out.emplace_back(std::move(next),
                     SimplStep{inst->rule, cs[i], {}, std::make_pair(inst->var, inst->image)});
    return out;
  }
  return {};
}

ProblemMeasure problem_measure(const Problem& pr, bool heights) {
  ProblemMeasure m{problem_vars(pr).size(), {}};
  for (const auto& c : pr.constraints) {
    if (const auto* fx = std::get_if<FixConstraint>(&c); fx && fx->primitive()) continue;
    m.second.push_back(constraint_weight(c, heights));
  }
  std::sort(m.second.begin(), m.second.end(), std::greater<>());
  return m;
}

bool measure_less(const ProblemMeasure& l, const ProblemMeasure& r) {
  if (l.first != r.first) return l.first < r.first;
  // Multiset order on a total order: compare descending sequences.
  return std::lexicographical_compare(l.second.begin(), l.second.end(), r.second.begin(),
                                      r.second.end());
}

void record_measure(MeasureStats* stats, const Problem& before, const Problem& after,
                    bool heights) {
  if (!stats) return;
  ++stats->steps;
  if (!measure_less(problem_measure(after, heights), problem_measure(before, heights))) {
    ++stats->violations;
  }
}

}  // namespace nomfix::detail
