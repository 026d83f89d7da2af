#include "nomfix/signature.hpp"

namespace nomfix {

std::string theory_name(Theory th) {
  switch (th) {
    case Theory::none:
      return "none";
    case Theory::A:
      return "A";
    case Theory::C:
      return "C";
    case Theory::AC:
      return "AC";
  }
  return "none";
}

std::optional<Theory> parse_theory(const std::string& s) {
  if (s == "none") return Theory::none;
  if (s == "A") return Theory::A;
  if (s == "C") return Theory::C;
  if (s == "AC") return Theory::AC;
  return std::nullopt;
}

void Signature::declare(const std::string& symbol, Theory th) {
  auto [it, inserted] = symbols_.emplace(symbol, th);
  if (!inserted && it->second != th) {
    throw SignatureError("symbol '" + symbol + "' declared twice with different theories");
  }
}

Theory Signature::theory(const std::string& symbol) const {
  if (auto it = symbols_.find(symbol); it != symbols_.end()) return it->second;
  if (permissive_) return Theory::none;
  throw SignatureError("undeclared function symbol '" + symbol + "'");
}

bool Signature::has_theory(Theory th) const {
  for (const auto& [_, t] : symbols_) {
    if (t == th) return true;
  }
  return false;
}

void check_well_formed(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
    case Term::Kind::susp:
      return;
    case Term::Kind::abs:
      check_well_formed(sig, t.body());
      return;
    case Term::Kind::tuple:
      for (const auto& it : t.items()) check_well_formed(sig, it);
      return;
    case Term::Kind::app:
      if (sig.theory(t.symbol()) == Theory::C &&
          !(t.arg().is_tuple() && t.arg().items().size() == 2)) {
        throw SignatureError("commutative symbol '" + t.symbol() + "' must be applied to a pair");
      }
      check_well_formed(sig, t.arg());
      return;
  }
}

Term flatten(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
    case Term::Kind::susp:
      return t;
    case Term::Kind::abs:
      return Term::abs(t.binder(), flatten(sig, t.body()));
    case Term::Kind::tuple: {
      std::vector<Term> items;
      for (const auto& it : t.items()) items.push_back(flatten(sig, it));
      return Term::tuple(std::move(items));
    }
    case Term::Kind::app: {
      const Theory th = sig.theory(t.symbol());
      if (th != Theory::A && th != Theory::AC) return Term::app(t.symbol(), flatten(sig, t.arg()));
      std::vector<Term> args;
      for (const auto& a : t.app_args()) {
        Term fa = flatten(sig, a);
        if (fa.is_app() && fa.symbol() == t.symbol()) {
          for (auto& inner : fa.app_args()) args.push_back(std::move(inner));
        } else {
          args.push_back(std::move(fa));
        }
      }
      return Term::app(t.symbol(), Term::tuple(std::move(args)));
    }
  }
  return t;
}

}  // namespace nomfix
