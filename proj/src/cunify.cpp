#include "nomfix/cunify.hpp"

#include <algorithm>
#include <future>

#include "nomfix/text.hpp"
#include "simplify.hpp"

namespace nomfix {

namespace {

void require_c_signature(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
    case Term::Kind::susp:
      return;
    case Term::Kind::abs:
      require_c_signature(sig, t.body());
      return;
    case Term::Kind::tuple:
      for (const auto& it : t.items()) require_c_signature(sig, it);
      return;
    case Term::Kind::app: {
      const Theory th = sig.theory(t.symbol());
      if (th == Theory::A || th == Theory::AC) {
        throw SignatureError("symbol '" + t.symbol() + "' has theory " + theory_name(th) +
                             "; C-unification supports only uninterpreted and C symbols");
      }
      if (th == Theory::C && !(t.arg().is_tuple() && t.arg().items().size() == 2)) {
        throw SignatureError("commutative symbol '" + t.symbol() + "' must be applied to a pair");
      }
      require_c_signature(sig, t.arg());
      return;
    }
  }
}

void require_c_problem(const Signature& sig, const Problem& pr) {
  for (const auto& c : pr.constraints) {
    if (const auto* eq = std::get_if<EqConstraint>(&c)) {
      require_c_signature(sig, eq->lhs);
      require_c_signature(sig, eq->rhs);
    } else {
      require_c_signature(sig, std::get<FixConstraint>(c).target);
    }
  }
}

constexpr std::uint64_t kForkStride = std::uint64_t{1} << 20;

class Expander {
 public:
  Expander(const Signature& sig, const CUnifyOptions& opts, const std::set<Atom>& known)
      : sig_(sig), opts_(opts), known_(known) {
    cfg_.sig = &sig_;
    cfg_.c_mode = true;
    cfg_.rigid = &opts_.rigid;
  }

  // Appends the solutions of every successful leaf below `pr`, left to right.
  DerivationTree expand(const Problem& pr, const Substitution& sigma, NameGenerator& gen,
                        bool may_fork, MeasureStats* stats, std::vector<Solution>& sols) const {
    DerivationTree node;
    node.problem = pr;
    auto children = detail::rewrite(cfg_, pr, gen);
    if (children.empty()) {
      node.reason = classify_normal_form(pr, opts_.rigid, opts_.rigid_ctx, known_);
      if (node.reason) {
        node.status = DerivationTree::Status::fail;
      } else {
        node.status = DerivationTree::Status::success;
        Solution sol;
        sol.context = opts_.rigid_ctx;
        for (const auto& c : pr.constraints) {
          const auto& fx = std::get<FixConstraint>(c);
          sol.context.add(fx.perm, fx.target.var());
        }
        sol.subst = sigma;
        sols.push_back(sol);
        node.solution = std::move(sol);
      }
      return node;
    }

    for (auto& [next, step] : children) detail::record_measure(stats, pr, next, true);

    // Only single-child rewrites instantiate.
    Substitution next_sigma = sigma;
    if (const auto& b = children.front().second.binding) {
      next_sigma = compose_subst(sigma, Substitution::single(b->first, b->second));
    }

    if (children.size() > 1 && may_fork && opts_.jobs > 1) {
      std::vector<NameGenerator> gens;
      for (std::size_t i = 0; i < children.size(); ++i) gens.push_back(gen.fork(kForkStride));
      std::vector<std::future<std::pair<DerivationTree, std::vector<Solution>>>> futures;
      std::vector<MeasureStats> branch_stats(children.size());
      for (std::size_t i = 0; i < children.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
          std::vector<Solution> local;
          MeasureStats* st = stats ? &branch_stats[i] : nullptr;
          auto tree = expand(children[i].first, next_sigma, gens[i], false, st, local);
          return std::make_pair(std::move(tree), std::move(local));
        }));
      }
      for (std::size_t i = 0; i < futures.size(); ++i) {
        auto [tree, local] = futures[i].get();
        sols.insert(sols.end(), local.begin(), local.end());
        keep(node, std::move(tree), children[i].second);
        if (stats) {
          stats->steps += branch_stats[i].steps;
          stats->violations += branch_stats[i].violations;
        }
      }
      return node;
    }

    const bool branching = children.size() > 1;
    for (auto& [next, step] : children) {
      auto tree = expand(next, next_sigma, gen, may_fork && !branching, stats, sols);
      keep(node, std::move(tree), step);
    }
    return node;
  }

 private:
  void keep(DerivationTree& node, DerivationTree child, const SimplStep& step) const {
    if (!opts_.keep_tree) return;
    child.rule = step.rule;
    child.binding = step.binding;
    node.children.push_back(std::move(child));
  }

  const Signature& sig_;
  const CUnifyOptions& opts_;
  const std::set<Atom>& known_;
  detail::SimplifyConfig cfg_;
};

}  // namespace

std::vector<std::pair<Problem, SimplStep>> c_simplify_step(const Signature& sig,
                                                           const Problem& pr, NameGenerator& gen,
                                                           const std::set<Var>& rigid) {
  require_c_problem(sig, pr);
  detail::SimplifyConfig cfg;
  cfg.sig = &sig;
  cfg.c_mode = true;
  cfg.rigid = &rigid;
  return detail::rewrite(cfg, pr, gen);
}

std::optional<Witness> classify_leaf(const Problem& pr) { return classify_normal_form(pr); }

std::string canonical_key(const Solution& sol) { return to_string(sol); }

CUnifyResult c_unify(const Signature& sig, const Problem& pr, const CUnifyOptions& opts) {
  require_c_problem(sig, pr);
  auto known = problem_atoms(pr);
  for (const auto& c : opts.rigid_ctx.constraints()) known.merge(c.perm.mentioned());
  NameGenerator gen(opts.fresh_prefix);
  for (const auto& a : known) gen.avoid(a);

  CUnifyResult res;
  Expander ex(sig, opts, known);
  res.tree = ex.expand(pr, {}, gen, true, opts.stats, res.solutions);

  std::vector<std::pair<std::string, Solution>> keyed;
  for (auto& s : res.solutions) keyed.emplace_back(canonical_key(s), std::move(s));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  res.solutions.clear();
  const auto vars = problem_vars(pr);
  for (auto& [key, s] : keyed) {
    if (opts.dedup) {
      const bool dup = std::any_of(res.solutions.begin(), res.solutions.end(), [&](const Solution& k) {
        return is_more_general(sig, k, s, vars) && is_more_general(sig, s, k, vars);
      });
      if (dup) continue;
    }
    res.solutions.push_back(std::move(s));
  }
  return res;
}

}  // namespace nomfix
