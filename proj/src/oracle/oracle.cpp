#include "nomfix/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nomfix/fixpoint.hpp"
#include "nomfix/unify.hpp"

namespace nomfix::oracle {

Signature TermPool::signature() const {
  Signature sig;
  for (const auto& s : symbols) sig.declare(s.name, s.theory);
  return sig;
}

TermPool TermPool::ground() const {
  TermPool p = *this;
  p.vars.clear();
  return p;
}

TermPool default_pool() {
  TermPool p;
  p.atoms = {Atom::user("a"), Atom::user("b"), Atom::user("c")};
  p.vars = {Var("X"), Var("Y")};
  p.symbols = {{"f", Theory::none, 1},
               {"h", Theory::A, 2},
               {"+", Theory::C, 2},
               {"or", Theory::AC, 2}};
  p.max_depth = 2;
  return p;
}

namespace {

// Binding depth of each bound atom; innermost binding wins.
using Env = std::map<Atom, std::size_t>;

std::string canon(const Signature& sig, const Term& t, const Env& env, std::size_t depth);

void collect_assoc(const Signature& sig, const std::string& f, const Term& t, const Env& env,
                   std::size_t depth, std::vector<std::string>& out) {
  auto visit = [&](const Term& arg) {
    if (arg.is_app() && arg.symbol() == f) {
      collect_assoc(sig, f, arg.arg(), env, depth, out);
    } else {
      out.push_back(canon(sig, arg, env, depth));
    }
  };
  if (t.is_tuple()) {
    for (const auto& it : t.items()) visit(it);
  } else {
    visit(t);
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

std::string canon(const Signature& sig, const Term& t, const Env& env, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::atom: {
      const Atom& a = t.as_atom();
      if (auto it = env.find(a); it != env.end()) return "@" + std::to_string(it->second);
      return (a.is_generated() ? "g:" : "u:") + a.str();
    }
    case Term::Kind::abs: {
      Env inner = env;
      inner[t.binder()] = depth;
      return "[" + std::to_string(depth) + "]" + canon(sig, t.body(), inner, depth + 1);
    }
    case Term::Kind::tuple: {
      std::vector<std::string> parts;
      for (const auto& it : t.items()) parts.push_back(canon(sig, it, env, depth));
      return "(" + join(parts) + ")";
    }
    case Term::Kind::app: {
      const Theory th = sig.theory(t.symbol());
      std::vector<std::string> parts;
      if (th == Theory::A || th == Theory::AC) {
        collect_assoc(sig, t.symbol(), t.arg(), env, depth, parts);
      } else if (t.arg().is_tuple()) {
        for (const auto& it : t.arg().items()) parts.push_back(canon(sig, it, env, depth));
      } else {
        parts.push_back(canon(sig, t.arg(), env, depth));
      }
      if (th == Theory::C || th == Theory::AC) std::sort(parts.begin(), parts.end());
      // A single argument and a 1-tuple coincide, so no extra marker is needed.
      return t.symbol() + "{" + join(parts) + "}";
    }
    case Term::Kind::susp:
      throw std::invalid_argument("canonical_form needs a ground term");
  }
  return "";
}

}  // namespace

std::string canonical_form(const Signature& sig, const Term& t) { return canon(sig, t, {}, 0); }

bool ground_alpha_oracle(const Signature& sig, const Term& s, const Term& t) {
  return canonical_form(sig, s) == canonical_form(sig, t);
}

std::vector<Term> enumerate_terms(const TermPool& pool) {
  std::vector<Term> leaves;
  for (const auto& a : pool.atoms) leaves.push_back(Term::atom(a));
  for (const auto& x : pool.vars) leaves.push_back(Term::var(x));
  std::vector<Term> level = leaves;
  for (int d = 1; d <= pool.max_depth; ++d) {
    std::vector<Term> next = leaves;
    if (pool.abstractions) {
      for (const auto& a : pool.atoms) {
        for (const auto& t : level) next.push_back(Term::abs(a, t));
      }
    }
    for (const auto& f : pool.symbols) {
      if (f.arity == 1) {
        for (const auto& t : level) next.push_back(Term::app(f.name, t));
      } else {
        for (const auto& l : level) {
          for (const auto& r : level) next.push_back(Term::app(f.name, Term::tuple({l, r})));
        }
      }
    }
    if (pool.pairs) {
      for (const auto& l : level) {
        for (const auto& r : level) next.push_back(Term::tuple({l, r}));
      }
    }
    level = std::move(next);
  }
  return level;
}

void for_each_ground_subst(const std::vector<Var>& vars, const std::vector<Term>& terms,
                           const std::function<bool(const Substitution&)>& fn) {
  if (vars.empty()) {
    fn(Substitution());
    return;
  }
  if (terms.empty()) return;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.bind(vars[i], terms[idx[i]]);
    if (!fn(s)) return;
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++idx[k] < terms.size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

std::vector<Substitution> enumerate_ground_substs(const std::vector<Var>& vars,
                                                  const TermPool& pool) {
  const auto terms = enumerate_terms(pool.ground());
  std::vector<Substitution> out;
  for_each_ground_subst(vars, terms, [&](const Substitution& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool verify_solution(const Signature& sig, const Problem& pr, const Solution& sol) {
  const auto& ctx = sol.context;
  const auto& sigma = sol.subst;
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      if (!check_alpha_fixp(sig, ctx, apply_subst(eq->lhs, sigma), apply_subst(eq->rhs, sigma))) {
        return false;
      }
    } else {
      const auto& fx = std::get<FixConstraint>(c);
      if (!check_fixp(sig, ctx, fx.perm, apply_subst(fx.target, sigma))) return false;
    }
  }
  for (const auto& x : problem_vars(pr)) {
    const Term once = sigma.image(x);
    if (!check_alpha_fixp(sig, ctx, once, apply_subst(once, sigma))) return false;
  }
  return true;
}

CompletenessReport completeness_check(const Signature& sig, const Problem& pr,
                                      const std::vector<Solution>& sols, const TermPool& pool) {
  CompletenessReport rep;
  const auto vset = problem_vars(pr);
  const std::vector<Var> vars(vset.begin(), vset.end());
  const auto terms = enumerate_terms(pool.ground());
  for_each_ground_subst(vars, terms, [&](const Substitution& delta) {
    ++rep.checked;
    const Solution ground{FixpointContext(), delta};
    if (!verify_solution(sig, pr, ground)) return true;
    ++rep.witnesses;
    const bool covered = std::any_of(sols.begin(), sols.end(), [&](const Solution& s) {
      return is_more_general(sig, s, ground, vset);
    });
    if (!covered) {
      rep.complete = false;
      rep.counterexample = delta;
      return false;
    }
    return true;
  });
  return rep;
}

}  // namespace nomfix::oracle
