#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nomfix/atom.hpp"
#include "nomfix/permutation.hpp"

namespace nomfix {

struct TermNode;

/// Immutable nominal term: atom, abstraction [a]t, tuple (t1, ..., tn),
/// application f t, or suspension π·X. Copies share structure.
class Term {
 public:
  enum class Kind { atom, abs, tuple, app, susp };

  static Term atom(Atom a);
  static Term abs(Atom binder, Term body);
  /// A one-element tuple is its element; an empty tuple is rejected.
  static Term tuple(std::vector<Term> items);
  static Term app(std::string symbol, Term arg);
  static Term susp(Permutation perm, Var var);
  static Term var(Var v) { return susp(Permutation::identity(), std::move(v)); }

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::atom; }
  bool is_abs() const { return kind() == Kind::abs; }
  bool is_tuple() const { return kind() == Kind::tuple; }
  bool is_app() const { return kind() == Kind::app; }
  bool is_susp() const { return kind() == Kind::susp; }

  // Accessors throw std::bad_variant_access on the wrong kind.
  const Atom& as_atom() const;
  const Atom& binder() const;
  const Term& body() const;
  const std::vector<Term>& items() const;
  const std::string& symbol() const;
  const Term& arg() const;
  const Permutation& perm() const;
  const Var& var() const;

  /// Argument list of an application: the tuple items, or the single argument.
  std::vector<Term> app_args() const;

  const TermNode& node() const { return *node_; }

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

struct AtomTerm {
  Atom atom;
};
struct AbsTerm {
  Atom binder;
  Term body;
};
struct TupleTerm {
  std::vector<Term> items;
};
struct AppTerm {
  std::string symbol;
  Term arg;
};
struct SuspTerm {
  Permutation perm;
  Var var;
};

struct TermNode {
  std::variant<AtomTerm, AbsTerm, TupleTerm, AppTerm, SuspTerm> v;
};

/// Structural equality; suspension permutations compare by action.
bool operator==(const Term& l, const Term& r);

Term act_term(const Permutation& p, const Term& t);

std::set<Var> free_vars(const Term& t);
bool occurs(const Var& x, const Term& t);
bool is_ground(const Term& t);

/// Every atom in the term, including binders and suspension permutations.
std::set<Atom> atoms_of(const Term& t);
bool mentions_generated(const Term& t);

/// Node count: atoms and suspensions are 1, other formers add 1.
std::size_t term_size(const Term& t);
/// Leaves have height 1.
std::size_t term_height(const Term& t);

void avoid_atoms(NameGenerator& gen, const Term& t);
void avoid_atoms(NameGenerator& gen, const Permutation& p);

}  // namespace nomfix
