#include "nomfix/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace nomfix {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

Term Term::atom(Atom a) { return Term(std::make_shared<const TermNode>(TermNode{AtomTerm{std::move(a)}})); }

Term Term::abs(Atom binder, Term body) {
  return Term(std::make_shared<const TermNode>(TermNode{AbsTerm{std::move(binder), std::move(body)}}));
}

Term Term::tuple(std::vector<Term> items) {
  if (items.empty()) throw std::invalid_argument("empty tuple");
  if (items.size() == 1) return std::move(items.front());
  return Term(std::make_shared<const TermNode>(TermNode{TupleTerm{std::move(items)}}));
}

Term Term::app(std::string symbol, Term arg) {
  return Term(std::make_shared<const TermNode>(TermNode{AppTerm{std::move(symbol), std::move(arg)}}));
}

Term Term::susp(Permutation perm, Var var) {
  return Term(std::make_shared<const TermNode>(TermNode{SuspTerm{std::move(perm), std::move(var)}}));
}

Term::Kind Term::kind() const { return static_cast<Kind>(node_->v.index()); }

const Atom& Term::as_atom() const { return std::get<AtomTerm>(node_->v).atom; }
const Atom& Term::binder() const { return std::get<AbsTerm>(node_->v).binder; }
const Term& Term::body() const { return std::get<AbsTerm>(node_->v).body; }
const std::vector<Term>& Term::items() const { return std::get<TupleTerm>(node_->v).items; }
const std::string& Term::symbol() const { return std::get<AppTerm>(node_->v).symbol; }
const Term& Term::arg() const { return std::get<AppTerm>(node_->v).arg; }
const Permutation& Term::perm() const { return std::get<SuspTerm>(node_->v).perm; }
const Var& Term::var() const { return std::get<SuspTerm>(node_->v).var; }

std::vector<Term> Term::app_args() const {
  const Term& a = arg();
  if (a.is_tuple()) return a.items();
  return {a};
}

bool operator==(const Term& l, const Term& r) {
  if (&l.node() == &r.node()) return true;
  if (l.kind() != r.kind()) return false;
  switch (l.kind()) {
    case Term::Kind::atom:
      return l.as_atom() == r.as_atom();
    case Term::Kind::abs:
      return l.binder() == r.binder() && l.body() == r.body();
    case Term::Kind::tuple:
      return l.items() == r.items();
    case Term::Kind::app:
      return l.symbol() == r.symbol() && l.arg() == r.arg();
    case Term::Kind::susp:
      return l.var() == r.var() && l.perm() == r.perm();
  }
  return false;
}

Term act_term(const Permutation& p, const Term& t) {
  if (p.empty_list()) return t;
  return std::visit(
      overloaded{
          [&](const AtomTerm& n) { return Term::atom(p.apply(n.atom)); },
          [&](const AbsTerm& n) { return Term::abs(p.apply(n.binder), act_term(p, n.body)); },
          [&](const TupleTerm& n) {
            std::vector<Term> items;
            items.reserve(n.items.size());
            for (const auto& it : n.items) items.push_back(act_term(p, it));
            return Term::tuple(std::move(items));
          },
          [&](const AppTerm& n) { return Term::app(n.symbol, act_term(p, n.arg)); },
          [&](const SuspTerm& n) { return Term::susp(compose_perm(p, n.perm), n.var); },
      },
      t.node().v);
}

namespace {

void collect_vars(const Term& t, std::set<Var>& out) {
  std::visit(overloaded{
                 [](const AtomTerm&) {},
                 [&](const AbsTerm& n) { collect_vars(n.body, out); },
                 [&](const TupleTerm& n) {
                   for (const auto& it : n.items) collect_vars(it, out);
                 },
                 [&](const AppTerm& n) { collect_vars(n.arg, out); },
                 [&](const SuspTerm& n) { out.insert(n.var); },
             },
             t.node().v);
}

void collect_atoms(const Term& t, std::set<Atom>& out) {
  std::visit(overloaded{
                 [&](const AtomTerm& n) { out.insert(n.atom); },
                 [&](const AbsTerm& n) {
                   out.insert(n.binder);
                   collect_atoms(n.body, out);
                 },
                 [&](const TupleTerm& n) {
                   for (const auto& it : n.items) collect_atoms(it, out);
                 },
                 [&](const AppTerm& n) { collect_atoms(n.arg, out); },
                 [&](const SuspTerm& n) { out.merge(n.perm.mentioned()); },
             },
             t.node().v);
}

}  // namespace

std::set<Var> free_vars(const Term& t) {
  std::set<Var> out;
  collect_vars(t, out);
  return out;
}

bool occurs(const Var& x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      return false;
    case Term::Kind::abs:
      return occurs(x, t.body());
    case Term::Kind::tuple:
      return std::any_of(t.items().begin(), t.items().end(),
                         [&](const Term& it) { return occurs(x, it); });
    case Term::Kind::app:
      return occurs(x, t.arg());
    case Term::Kind::susp:
      return t.var() == x;
  }
  return false;
}

bool is_ground(const Term& t) { return free_vars(t).empty(); }

std::set<Atom> atoms_of(const Term& t) {
  std::set<Atom> out;
  collect_atoms(t, out);
  return out;
}

bool mentions_generated(const Term& t) {
  const auto atoms = atoms_of(t);
  return std::any_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.is_generated(); });
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
    case Term::Kind::susp:
      return 1;
    case Term::Kind::abs:
      return 1 + term_size(t.body());
    case Term::Kind::tuple: {
      std::size_t n = 1;
      for (const auto& it : t.items()) n += term_size(it);
      return n;
    }
    case Term::Kind::app:
      return 1 + term_size(t.arg());
  }
  return 0;
}

std::size_t term_height(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
    case Term::Kind::susp:
      return 1;
    case Term::Kind::abs:
      return 1 + term_height(t.body());
    case Term::Kind::tuple: {
      std::size_t h = 0;
      for (const auto& it : t.items()) h = std::max(h, term_height(it));
      return 1 + h;
    }
    case Term::Kind::app:
      return 1 + term_height(t.arg());
  }
  return 0;
}

void avoid_atoms(NameGenerator& gen, const Term& t) {
  for (const auto& a : atoms_of(t)) gen.avoid(a);
}

void avoid_atoms(NameGenerator& gen, const Permutation& p) {
  for (const auto& a : p.mentioned()) gen.avoid(a);
}

}  // namespace nomfix
