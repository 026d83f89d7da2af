#pragma once

#include <map>
#include <optional>
#include <set>

#include "nomfix/term.hpp"

namespace nomfix {

/// Finite map from variables to terms. Application is simultaneous and
/// possibly capturing; idempotence is not enforced here.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Var, Term>> init) : bindings_(init) {}

  static Substitution single(Var x, Term t) {
    Substitution s;
    s.bind(std::move(x), std::move(t));
    return s;
  }

  void bind(Var x, Term t) { bindings_.insert_or_assign(std::move(x), std::move(t)); }
  std::optional<Term> lookup(const Var& x) const;
  bool binds(const Var& x) const { return bindings_.count(x) != 0; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  const std::map<Var, Term>& bindings() const { return bindings_; }

  /// Image of x: its binding, or x itself.
  Term image(const Var& x) const;

  friend bool operator==(const Substitution& l, const Substitution& r) {
    return l.bindings_ == r.bindings_;
  }

 private:
  std::map<Var, Term> bindings_;
};

Term apply_subst(const Term& t, const Substitution& s);

/// t(compose(s1, s2)) == (t s1) s2.
Substitution compose_subst(const Substitution& s1, const Substitution& s2);

}  // namespace nomfix
