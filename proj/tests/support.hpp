#pragma once

#include <algorithm>
#include <cstdint>
#include <regex>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "nomfix/context.hpp"
#include "nomfix/problem.hpp"
#include "nomfix/signature.hpp"
#include "nomfix/term.hpp"
#include "nomfix/text.hpp"

namespace nomfix::testing {

/// Symbols used throughout the tests: + and * commutative, or AC, h
/// associative; anything else parses as an uninterpreted symbol.
inline Signature test_sig() {
  Signature sig(true);
  sig.declare("+", Theory::C);
  sig.declare("*", Theory::C);
  sig.declare("or", Theory::AC);
  sig.declare("h", Theory::A);
  return sig;
}

inline Signature syntactic_sig() { return Signature(true); }

inline Term T(const std::string& text, const Signature& sig = test_sig()) {
  return parse_term(text, sig, ParseOptions{true});
}
inline Permutation P(const std::string& text) { return parse_perm(text, ParseOptions{true}); }
inline Atom A(const std::string& name) { return Atom::user(name); }
inline Var V(const std::string& name) { return Var(name); }

/// Equality and fixed-point constraints of a problem file, in order.
inline Problem PR(const std::string& text, const Signature& sig = test_sig()) {
  const ProblemFile f = parse_problem(text, sig, ParseOptions{true});
  Problem pr;
  for (const auto& c : f.constraints) {
    if (c.kind == ParsedConstraint::Kind::eq) pr.constraints.emplace_back(EqConstraint{c.lhs, c.rhs});
    if (c.kind == ParsedConstraint::Kind::fix) pr.constraints.emplace_back(FixConstraint{c.perm, c.lhs});
  }
  return pr;
}

inline Solution SOL(const std::string& text, const Signature& sig = test_sig()) {
  return parse_solution(text, sig, ParseOptions{true});
}

/// Text equality after some bijective renaming of generated atoms; `canon`
/// maps renamed text to a comparison key.
template <class Canon>
bool texts_equal_up_to_renaming(const std::string& t1, const std::string& t2, Canon canon) {
  static const std::regex gen_atom("#[A-Za-z_]+[0-9]+");
  auto collect = [](const std::string& text) {
    std::vector<std::string> out;
    for (std::sregex_iterator it(text.begin(), text.end(), gen_atom), end; it != end; ++it) {
      if (std::find(out.begin(), out.end(), it->str()) == out.end()) out.push_back(it->str());
    }
    return out;
  };
  const std::vector<std::string> g1 = collect(t1);
  std::vector<std::string> g2 = collect(t2);
  if (g1.size() != g2.size() || g1.size() > 8) return false;
  const auto target = canon(t2);
  std::sort(g2.begin(), g2.end());
  do {
    std::string renamed;
    std::size_t last = 0;
    for (std::sregex_iterator it(t1.begin(), t1.end(), gen_atom), end; it != end; ++it) {
      renamed += t1.substr(last, static_cast<std::size_t>(it->position()) - last);
      const auto idx = std::find(g1.begin(), g1.end(), it->str()) - g1.begin();
      renamed += g2[static_cast<std::size_t>(idx)];
      last = static_cast<std::size_t>(it->position() + it->length());
    }
    renamed += t1.substr(last);
    if (canon(renamed) == target) return true;
  } while (std::next_permutation(g2.begin(), g2.end()));
  return false;
}

/// Equal after some bijective renaming of generated atoms.
inline bool same_up_to_renaming(const Solution& s1, const Solution& s2,
                                const Signature& sig = test_sig()) {
  return texts_equal_up_to_renaming(to_string(s1), to_string(s2),
                                    [&](const std::string& t) { return to_string(SOL(t, sig)); });
}

inline std::uint64_t seed() {
  static const std::uint64_t s = [] {
    const char* env = std::getenv("NOMFIX_SEED");
    return env ? std::strtoull(env, nullptr, 10) : std::uint64_t{20261014};
  }();
  return s;
}

/// Random structures over small fixed alphabets; every draw goes through one
/// mt19937_64 so a seed reproduces a whole run.
class Gen {
 public:
  explicit Gen(std::uint64_t s = seed()) : rng_(s) {}

  struct Shape {
    std::vector<Atom> atoms{A("a"), A("b"), A("c"), A("d")};
    std::vector<Var> vars{V("X"), V("Y")};
    std::vector<std::string> unary{"f", "g"};
    std::vector<std::string> binary{"k", "+", "or"};
    int depth = 3;
    int max_perm = 2;
  };

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(int percent = 50) { return below(100) < percent; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
  }

  Permutation perm(const std::vector<Atom>& atoms, int max_len) {
    std::vector<Swapping> sw;
    const int n = below(max_len + 1);
    for (int i = 0; i < n; ++i) {
      const Atom& x = pick(atoms);
      Atom y = pick(atoms);
      while (y == x) y = pick(atoms);
      sw.emplace_back(x, y);
    }
    return Permutation(std::move(sw));
  }

  Term term(const Shape& sh, int depth) {
    const bool leaf = depth <= 1 || below(4) == 0;
    if (leaf) {
      if (!sh.vars.empty() && coin(40)) return Term::susp(perm(sh.atoms, sh.max_perm), pick(sh.vars));
      return Term::atom(pick(sh.atoms));
    }
    const int unary = static_cast<int>(sh.unary.size());
    const int binary = static_cast<int>(sh.binary.size());
    const int choice = below(2 + unary + binary);
    if (choice == 0) return Term::abs(pick(sh.atoms), term(sh, depth - 1));
    if (choice == 1) return Term::tuple({term(sh, depth - 1), term(sh, depth - 1)});
    if (choice < 2 + unary) return Term::app(sh.unary[static_cast<std::size_t>(choice - 2)], term(sh, depth - 1));
    const std::string& f = sh.binary[static_cast<std::size_t>(choice - 2 - unary)];
    return Term::app(f, Term::tuple({term(sh, depth - 1), term(sh, depth - 1)}));
  }
  Term term(const Shape& sh) { return term(sh, sh.depth); }

  Term ground(Shape sh) {
    sh.vars.clear();
    return term(sh, sh.depth);
  }

  FixpointContext fix_context(const Shape& sh, int max_entries) {
    FixpointContext ctx;
    const int n = below(max_entries + 1);
    for (int i = 0; i < n; ++i) {
      Permutation p = perm(sh.atoms, 2);
      if (!p.acts_as_identity()) ctx.add(p, pick(sh.vars));
    }
    return ctx;
  }

  FreshnessContext fresh_context(const Shape& sh, int max_entries) {
    FreshnessContext ctx;
    const int n = below(max_entries + 1);
    for (int i = 0; i < n; ++i) ctx.add(pick(sh.atoms), pick(sh.vars));
    return ctx;
  }

  /// Copy of t with some subterms replaced by suspensions; t itself may be
  /// permuted first. Used to bias random problems towards solvable ones.
  Term mutate(const Shape& sh, const Term& t, int percent = 20) {
    if (!sh.vars.empty() && coin(percent)) return Term::susp(perm(sh.atoms, sh.max_perm), pick(sh.vars));
    switch (t.kind()) {
      case Term::Kind::abs:
        return Term::abs(t.binder(), mutate(sh, t.body(), percent));
      case Term::Kind::tuple: {
        std::vector<Term> items;
        for (const auto& it : t.items()) items.push_back(mutate(sh, it, percent));
        return Term::tuple(std::move(items));
      }
      case Term::Kind::app: {
        // Keep the argument tuple so commutative symbols stay applied to pairs.
        if (!t.arg().is_tuple()) return Term::app(t.symbol(), mutate(sh, t.arg(), percent));
        std::vector<Term> items;
        for (const auto& it : t.arg().items()) items.push_back(mutate(sh, it, percent));
        return Term::app(t.symbol(), Term::tuple(std::move(items)));
      }
      default:
        return t;
    }
  }

  /// One or two equations, sometimes with a fixed-point constraint.
  Problem problem(const Shape& sh) {
    Problem pr;
    const int n = 1 + below(2);
    for (int i = 0; i < n; ++i) {
      const Term s = term(sh);
      const Term t = coin(70) ? mutate(sh, coin(50) ? act_term(perm(sh.atoms, 1), s) : s) : term(sh);
      pr.constraints.emplace_back(EqConstraint{s, t});
    }
    if (coin(25)) pr.constraints.emplace_back(FixConstraint{perm(sh.atoms, 2), term(sh, 2)});
    return pr;
  }

  /// A ground term that is often, but not always, equivalent to t: binders
  /// renamed, commutative arguments swapped, AC applications reassociated,
  /// and now and then one atom replaced.
  Term variant(const Signature& sig, const Shape& sh, const Term& t) {
    switch (t.kind()) {
      case Term::Kind::atom:
        return coin(3) ? Term::atom(pick(sh.atoms)) : t;
      case Term::Kind::abs: {
        const Term body = variant(sig, sh, t.body());
        const Atom& b = pick(sh.atoms);
        if (b != t.binder() && coin() && is_ground(body) && !occurs_free(b, body)) {
          return Term::abs(b, act_term(Permutation::swap(t.binder(), b), body));
        }
        return Term::abs(t.binder(), body);
      }
      case Term::Kind::tuple: {
        std::vector<Term> items;
        for (const auto& it : t.items()) items.push_back(variant(sig, sh, it));
        return Term::tuple(std::move(items));
      }
      case Term::Kind::app: {
        const Theory th = sig.theory(t.symbol());
        if (!t.arg().is_tuple() || t.arg().items().size() != 2) {
          return Term::app(t.symbol(), variant(sig, sh, t.arg()));
        }
        Term l = variant(sig, sh, t.arg().items()[0]);
        Term r = variant(sig, sh, t.arg().items()[1]);
        if ((th == Theory::C || th == Theory::AC) && coin()) std::swap(l, r);
        if ((th == Theory::A || th == Theory::AC) && coin() && r.is_app() && r.symbol() == t.symbol() &&
            r.arg().is_tuple() && r.arg().items().size() == 2) {
          // f(l, f(x, y)) -> f(f(l, x), y)
          const Term inner = Term::app(t.symbol(), Term::tuple({l, r.arg().items()[0]}));
          return Term::app(t.symbol(), Term::tuple({inner, r.arg().items()[1]}));
        }
        return Term::app(t.symbol(), Term::tuple({l, r}));
      }
      case Term::Kind::susp:
        return t;
    }
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  static bool occurs_free(const Atom& a, const Term& t) {
    switch (t.kind()) {
      case Term::Kind::atom:
        return t.as_atom() == a;
      case Term::Kind::abs:
        return t.binder() != a && occurs_free(a, t.body());
      case Term::Kind::tuple:
        for (const auto& it : t.items()) {
          if (occurs_free(a, it)) return true;
        }
        return false;
      case Term::Kind::app:
        return occurs_free(a, t.arg());
      case Term::Kind::susp:
        return true;
    }
    return true;
  }

 public:

 private:
  std::mt19937_64 rng_;
};

}  // namespace nomfix::testing
