#pragma once

#include "nomfix/context.hpp"
#include "nomfix/signature.hpp"
#include "nomfix/term.hpp"
#include "nomfix/trace.hpp"

namespace nomfix {

/// Δ ⊢ a # t. The theory of function symbols plays no role.
Verdict check_fresh(const FreshnessContext& ctx, const Atom& a, const Term& t,
                    const CheckOptions& opts = {});

/// Δ ⊢ s ≈ t modulo the theories in `sig`. Inputs are flattened first.
Verdict check_alpha_fresh(const Signature& sig, const FreshnessContext& ctx, const Term& s,
                          const Term& t, const CheckOptions& opts = {});

}  // namespace nomfix
