#include "nomfix/substitution.hpp"

namespace nomfix {

std::optional<Term> Substitution::lookup(const Var& x) const {
  if (auto it = bindings_.find(x); it != bindings_.end()) return it->second;
  return std::nullopt;
}

Term Substitution::image(const Var& x) const {
  if (auto it = bindings_.find(x); it != bindings_.end()) return it->second;
  return Term::var(x);
}

Term apply_subst(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::atom:
      return t;
    case Term::Kind::abs:
      return Term::abs(t.binder(), apply_subst(t.body(), s));
    case Term::Kind::tuple: {
      std::vector<Term> items;
      items.reserve(t.items().size());
      for (const auto& it : t.items()) items.push_back(apply_subst(it, s));
      return Term::tuple(std::move(items));
    }
    case Term::Kind::app:
      return Term::app(t.symbol(), apply_subst(t.arg(), s));
    case Term::Kind::susp:
      if (auto b = s.lookup(t.var())) return act_term(t.perm(), *b);
      return t;
  }
  return t;
}

Substitution compose_subst(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [x, t] : s1.bindings()) out.bind(x, apply_subst(t, s2));
  for (const auto& [x, t] : s2.bindings()) {
    if (!s1.binds(x)) out.bind(x, t);
  }
  return out;
}

}  // namespace nomfix
