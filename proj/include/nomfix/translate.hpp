#pragma once

#include <utility>
#include <vector>

#include "nomfix/context.hpp"
#include "nomfix/problem.hpp"
#include "nomfix/signature.hpp"
#include "nomfix/trace.hpp"

namespace nomfix {

/// a # X  ↦  (a c_a) ⋏ X
struct TranslationRecord {
  FreshnessConstraint source;
  FixpointConstraint target;
  Atom generated;
};

/// Each a#X becomes (a c_a)⋏X with its own generated c_a.
FixpointContext fresh_to_fixp(const FreshnessContext& ctx, NameGenerator& gen,
                              std::vector<TranslationRecord>* record = nullptr);

/// Each π⋏X becomes supp(π)#X.
FreshnessContext fixp_to_fresh(const FixpointContext& ctx);

std::pair<FreshnessContext, Substitution> translate_solution_to_fresh(const Solution& sol);
Solution translate_solution_to_fixp(const FreshnessContext& ctx, const Substitution& s,
                                     NameGenerator& gen);

/// Δ ⊢ a # t decided in the fixed-point system: with c, c' new,
/// [Δ]⋏, (c c')⋏var(t) ⊢ (a c) ⋏ t. The second constraint set records that
/// c is new for every variable of t.
Verdict fresh_judgement_via_fixp(const Signature& sig, const FreshnessContext& ctx, const Atom& a,
                                 const Term& t, NameGenerator& gen, const CheckOptions& opts = {});

/// Υ ⊢ π ⋏ t decided in the freshness system: [Υ]# ⊢ b # t for every b in
/// supp(π) that is not a generated atom.
bool fixp_judgement_via_fresh(const FixpointContext& ctx, const Permutation& p, const Term& t);

}  // namespace nomfix
