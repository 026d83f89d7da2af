#include "nomfix/fixpoint.hpp"

#include <algorithm>
#include <utility>

#include "nomfix/text.hpp"

namespace nomfix {

namespace {

bool subset(const std::set<Atom>& a, const std::set<Atom>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// (size, relation) with ⋏ above ≈, compared lexicographically.
using Measure = std::pair<std::size_t, int>;
constexpr int kFixRel = 1;
constexpr int kEqRel = 0;

class FixChecker {
 public:
  FixChecker(const Signature& sig, NameGenerator& gen, JudgementStats* stats)
      : sig_(sig), gen_(gen), stats_(stats) {}

  bool fix(const FixpointContext& ctx, const Permutation& p, const Term& t,
           const Measure* parent, TraceNode* out) {
    const Measure m{term_size(t), kFixRel};
    note(m, parent);
    if (out) out->goal = to_string(p) + " fix " + to_string(t);
    switch (t.kind()) {
      case Term::Kind::atom:
        return finish(out, "fix-a", p.apply(t.as_atom()) == t.as_atom());
      case Term::Kind::susp: {
        const auto conj = conjugate_perm(p, invert_perm(t.perm()));
        return finish(out, "fix-var", subset(support_perm(conj), supp_perm_set(ctx, t.var())));
      }
      case Term::Kind::tuple:
        for (const auto& it : t.items()) {
          if (!fix(ctx, p, it, &m, child(out))) return finish(out, "fix-tuple", false);
        }
        return finish(out, "fix-tuple", true);
      case Term::Kind::abs: {
        const Atom c1 = gen_.fresh();
        const Atom c2 = gen_.fresh();
        const FixpointContext ext = extend(ctx, c1, c2, t.body());
        const Term renamed = act_term(Permutation::swap(t.binder(), c1), t.body());
        return finish(out, "fix-abs", fix(ext, p, renamed, &m, child(out)));
      }
      case Term::Kind::app: {
        const Theory th = sig_.theory(t.symbol());
        if (th == Theory::none || th == Theory::A) {
          return finish(out, "fix-f", fix(ctx, p, t.arg(), &m, child(out)));
        }
        const bool ok = alpha(ctx, act_term(p, t), t, &m, child(out));
        return finish(out, th == Theory::C ? "fix-fC" : "fix-fAC", ok);
      }
    }
    return false;
  }

  bool alpha(const FixpointContext& ctx, const Term& s, const Term& t, const Measure* parent,
             TraceNode* out) {
    const Measure m{std::max(term_size(s), term_size(t)), kEqRel};
    note(m, parent);
    if (out) out->goal = to_string(s) + " ~ " + to_string(t);
    if (s.kind() != t.kind()) return finish(out, "clash", false);
    switch (s.kind()) {
      case Term::Kind::atom:
        return finish(out, "~a", s.as_atom() == t.as_atom());
      case Term::Kind::susp: {
        if (s.var() != t.var()) return finish(out, "~var", false);
        const auto d = compose_perm(invert_perm(t.perm()), s.perm());
        return finish(out, "~var", subset(support_perm(d), supp_perm_set(ctx, s.var())));
      }
      case Term::Kind::tuple:
        return finish(out, "~tuple", pointwise(ctx, s.items(), t.items(), &m, out));
      case Term::Kind::abs: {
        if (s.binder() == t.binder()) {
          return finish(out, "~[a]", alpha(ctx, s.body(), t.body(), &m, child(out)));
        }
        const Atom& a = s.binder();
        const Atom& b = t.binder();
        if (!alpha(ctx, s.body(), act_term(Permutation::swap(a, b), t.body()), &m, child(out))) {
          return finish(out, "~ab", false);
        }
        const Atom c1 = gen_.fresh();
        const Atom c2 = gen_.fresh();
        const FixpointContext ext = extend(ctx, c1, c2, t.body());
        return finish(out, "~ab", fix(ext, Permutation::swap(a, c1), t.body(), &m, child(out)));
      }
      case Term::Kind::app:
        return app(ctx, s, t, m, out);
    }
    return false;
  }

 private:
  bool app(const FixpointContext& ctx, const Term& s, const Term& t, const Measure& m,
           TraceNode* out) {
    if (s.symbol() != t.symbol()) return finish(out, "clash", false);
    const Theory th = sig_.theory(s.symbol());
    const auto sa = s.app_args();
    const auto ta = t.app_args();
    if (th == Theory::none || th == Theory::A || (th == Theory::C && (sa.size() != 2 || ta.size() != 2))) {
      return finish(out, "~f", alpha(ctx, s.arg(), t.arg(), &m, child(out)));
    }
    if (th == Theory::C) {
      for (std::size_t i = 0; i < 2; ++i) {
        TraceNode attempt;
        TraceNode* at = out ? &attempt : nullptr;
        const bool ok =
            alpha(ctx, sa[0], ta[i], &m, child(at)) && alpha(ctx, sa[1], ta[1 - i], &m, child(at));
        if (ok || i == 1) {
          if (out) out->children = std::move(attempt.children);
          return finish(out, "~fC", ok);
        }
      }
      return false;
    }
    return finish(out, "~fAC", ac(ctx, s.symbol(), sa, ta, m, out));
  }

  bool ac(const FixpointContext& ctx, const std::string& f, const std::vector<Term>& sa,
          const std::vector<Term>& ta, const Measure& m, TraceNode* out) {
    if (sa.size() != ta.size()) return false;
    if (sa.size() == 1) return alpha(ctx, sa[0], ta[0], &m, child(out));
    const std::vector<Term> sargs(sa.begin() + 1, sa.end());
    const Term srest = Term::app(f, Term::tuple(sargs));
    for (std::size_t i = 0; i < ta.size(); ++i) {
      TraceNode attempt;
      TraceNode* at = out ? &attempt : nullptr;
      bool ok = alpha(ctx, sa[0], ta[i], &m, child(at));
      if (ok) {
        std::vector<Term> trest;
        for (std::size_t j = 0; j < ta.size(); ++j) {
          if (j != i) trest.push_back(ta[j]);
        }
        // The remainder is itself an AC judgement with its own measure.
        const Term tr = Term::app(f, Term::tuple(trest));
        const Measure rm{std::max(term_size(srest), term_size(tr)), kEqRel};
        note(rm, &m);
        TraceNode* rest = child(at);
        if (rest) rest->goal = to_string(srest) + " ~ " + to_string(tr);
        ok = ac(ctx, f, sargs, trest, rm, rest);
        finish(rest, "~fAC", ok);
      }
      if (ok || i + 1 == ta.size()) {
        if (out) out->children = std::move(attempt.children);
        return ok;
      }
    }
    return false;
  }

  bool pointwise(const FixpointContext& ctx, const std::vector<Term>& l, const std::vector<Term>& r,
                 const Measure* m, TraceNode* out) {
    if (l.size() != r.size()) return false;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!alpha(ctx, l[i], r[i], m, child(out))) return false;
    }
    return true;
  }

  static FixpointContext extend(const FixpointContext& ctx, const Atom& c1, const Atom& c2,
                                const Term& t) {
    const auto vars = free_vars(t);
    if (vars.empty()) return ctx;
    FixpointContext ext = ctx;
    for (const auto& y : vars) ext.add(Permutation::swap(c1, c2), y);
    return ext;
  }

  void note(const Measure& m, const Measure* parent) {
    if (!stats_) return;
    ++stats_->judgements;
    if (!parent) return;
    ++stats_->measure_checks;
    if (!(m < *parent)) ++stats_->measure_violations;
  }

  static TraceNode* child(TraceNode* out) {
    if (!out) return nullptr;
    out->children.emplace_back();
    return &out->children.back();
  }

  static bool finish(TraceNode* out, const char* rule, bool ok) {
    if (out) {
      out->rule = rule;
      out->ok = ok;
    }
    return ok;
  }

  const Signature& sig_;
  NameGenerator& gen_;
  JudgementStats* stats_;
};

void avoid_inputs(NameGenerator& gen, const FixpointContext& ctx) {
  for (const auto& c : ctx.constraints()) avoid_atoms(gen, c.perm);
}

}  // namespace

Verdict check_fixp(const Signature& sig, const FixpointContext& ctx, const Permutation& p,
                   const Term& t, NameGenerator& gen, const CheckOptions& opts) {
  const Term ft = flatten(sig, t);
  avoid_inputs(gen, ctx);
  avoid_atoms(gen, p);
  avoid_atoms(gen, ft);
  FixChecker checker(sig, gen, opts.stats);
  Verdict v;
  if (opts.trace) {
    TraceNode root;
    v.holds = checker.fix(ctx, p, ft, nullptr, &root);
    v.trace = std::move(root);
  } else {
    v.holds = checker.fix(ctx, p, ft, nullptr, nullptr);
  }
  return v;
}

Verdict check_alpha_fixp(const Signature& sig, const FixpointContext& ctx, const Term& s,
                         const Term& t, NameGenerator& gen, const CheckOptions& opts) {
  const Term fs = flatten(sig, s);
  const Term ft = flatten(sig, t);
  avoid_inputs(gen, ctx);
  avoid_atoms(gen, fs);
  avoid_atoms(gen, ft);
  FixChecker checker(sig, gen, opts.stats);
  Verdict v;
  if (opts.trace) {
    TraceNode root;
    v.holds = checker.alpha(ctx, fs, ft, nullptr, &root);
    v.trace = std::move(root);
  } else {
    v.holds = checker.alpha(ctx, fs, ft, nullptr, nullptr);
  }
  return v;
}

Verdict check_fixp(const Signature& sig, const FixpointContext& ctx, const Permutation& p,
                   const Term& t, const CheckOptions& opts) {
  NameGenerator gen;
  return check_fixp(sig, ctx, p, t, gen, opts);
}

Verdict check_alpha_fixp(const Signature& sig, const FixpointContext& ctx, const Term& s,
                         const Term& t, const CheckOptions& opts) {
  NameGenerator gen;
  return check_alpha_fixp(sig, ctx, s, t, gen, opts);
}

}  // namespace nomfix
