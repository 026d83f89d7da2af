#include "nomfix/translate.hpp"

#include <map>

#include "nomfix/fixpoint.hpp"
#include "nomfix/freshness.hpp"

namespace nomfix {

FixpointContext fresh_to_fixp(const FreshnessContext& ctx, NameGenerator& gen,
                              std::vector<TranslationRecord>* record) {
  for (const auto& c : ctx.constraints()) gen.avoid(c.atom);
  FixpointContext out;
  std::map<FreshnessConstraint, Atom> cache;
  for (const auto& c : ctx.constraints()) {
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, gen.fresh()).first;
    const auto perm = Permutation::swap(c.atom, it->second);
    out.add(perm, c.var);
    if (record) record->push_back({c, {perm, c.var}, it->second});
  }
  return out;
}

FreshnessContext fixp_to_fresh(const FixpointContext& ctx) {
  FreshnessContext out;
  for (const auto& c : ctx.constraints()) {
    for (const auto& a : support_perm(c.perm)) out.add(a, c.var);
  }
  return out;
}

std::pair<FreshnessContext, Substitution> translate_solution_to_fresh(const Solution& sol) {
  return {fixp_to_fresh(sol.context), sol.subst};
}

Solution translate_solution_to_fixp(const FreshnessContext& ctx, const Substitution& s,
                                     NameGenerator& gen) {
  for (const auto& [_, t] : s.bindings()) avoid_atoms(gen, t);
  return {fresh_to_fixp(ctx, gen), s};
}

Verdict fresh_judgement_via_fixp(const Signature& sig, const FreshnessContext& ctx, const Atom& a,
                                 const Term& t, NameGenerator& gen, const CheckOptions& opts) {
  gen.avoid(a);
  avoid_atoms(gen, t);
  FixpointContext fctx = fresh_to_fixp(ctx, gen);
  const Atom c = gen.fresh();
  const Atom c2 = gen.fresh();
  for (const auto& y : free_vars(t)) fctx.add(Permutation::swap(c, c2), y);
  return check_fixp(sig, fctx, Permutation::swap(a, c), t, gen, opts);
}

bool fixp_judgement_via_fresh(const FixpointContext& ctx, const Permutation& p, const Term& t) {
  const FreshnessContext fctx = fixp_to_fresh(ctx);
  for (const auto& b : support_perm(p)) {
    if (b.is_generated()) continue;
    if (!check_fresh(fctx, b, t).holds) return false;
  }
  return true;
}

}  // namespace nomfix
