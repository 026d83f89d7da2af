#pragma once

#include "nomfix/context.hpp"
#include "nomfix/signature.hpp"
#include "nomfix/term.hpp"
#include "nomfix/trace.hpp"

namespace nomfix {

/// Υ ⊢ π ⋏ t modulo the theories in `sig`. New atoms for abstractions come
/// from `gen`, which is first moved past every atom of the inputs. Inputs are
/// flattened first.
Verdict check_fixp(const Signature& sig, const FixpointContext& ctx, const Permutation& p,
                   const Term& t, NameGenerator& gen, const CheckOptions& opts = {});

/// Υ ⊢ s ≈ t modulo the theories in `sig`.
Verdict check_alpha_fixp(const Signature& sig, const FixpointContext& ctx, const Term& s,
                         const Term& t, NameGenerator& gen, const CheckOptions& opts = {});

// Same, with a private generator.
Verdict check_fixp(const Signature& sig, const FixpointContext& ctx, const Permutation& p,
                   const Term& t, const CheckOptions& opts = {});
Verdict check_alpha_fixp(const Signature& sig, const FixpointContext& ctx, const Term& s,
                         const Term& t, const CheckOptions& opts = {});

}  // namespace nomfix
