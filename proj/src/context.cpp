#include "nomfix/context.hpp"

#include <algorithm>

namespace nomfix {

std::set<Atom> FreshnessContext::restricted(const Var& x) const {
  std::set<Atom> out;
  for (const auto& c : constraints_) {
    if (c.var == x) out.insert(c.atom);
  }
  return out;
}

FixpointContext::FixpointContext(std::initializer_list<FixpointConstraint> init) {
  for (const auto& c : init) add(c.perm, c.var);
}

namespace {

bool entry_less(const FixpointConstraint& l, const FixpointConstraint& r) {
  if (l.var != r.var) return l.var < r.var;
  return canonical_less(l.perm, r.perm);
}

}  // namespace

void FixpointContext::add(const Permutation& p, const Var& x) {
  // Id ⋏ X holds under any context.
  if (p.acts_as_identity()) return;
  FixpointConstraint c{p, x};
  auto it = std::lower_bound(constraints_.begin(), constraints_.end(), c, entry_less);
  if (it != constraints_.end() && *it == c) return;
  constraints_.insert(it, std::move(c));
}

void FixpointContext::add_all(const FixpointContext& other) {
  for (const auto& c : other.constraints_) add(c.perm, c.var);
}

bool FixpointContext::contains(const Permutation& p, const Var& x) const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [&](const FixpointConstraint& c) { return c.var == x && c.perm == p; });
}

std::vector<Permutation> FixpointContext::perms_of(const Var& x) const {
  std::vector<Permutation> out;
  for (const auto& c : constraints_) {
    if (c.var == x) out.push_back(c.perm);
  }
  return out;
}

bool operator==(const FixpointContext& l, const FixpointContext& r) {
  return l.constraints_ == r.constraints_;
}

std::set<Atom> supp_perm_set(const FixpointContext& ctx, const Var& x) {
  std::set<Atom> out;
  for (const auto& c : ctx.constraints()) {
    if (c.var == x) out.merge(support_perm(c.perm));
  }
  return out;
}

}  // namespace nomfix
