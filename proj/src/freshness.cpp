#include "nomfix/freshness.hpp"

#include "nomfix/text.hpp"

namespace nomfix {

namespace {

class FreshChecker {
 public:
  FreshChecker(const Signature* sig, const FreshnessContext& ctx) : sig_(sig), ctx_(ctx) {}

  bool fresh(const Atom& a, const Term& t, TraceNode* out) {
    if (out) out->goal = a.str() + " # " + to_string(t);
    switch (t.kind()) {
      case Term::Kind::atom:
        return finish(out, "#a", a != t.as_atom());
      case Term::Kind::susp:
        return finish(out, "#var", ctx_.contains(t.perm().apply_inverse(a), t.var()));
      case Term::Kind::app:
        return finish(out, "#f", fresh(a, t.arg(), child(out)));
      case Term::Kind::tuple:
        for (const auto& it : t.items()) {
          if (!fresh(a, it, child(out))) return finish(out, "#tuple", false);
        }
        return finish(out, "#tuple", true);
      case Term::Kind::abs:
        if (t.binder() == a) return finish(out, "#[a]", true);
        return finish(out, "#abs", fresh(a, t.body(), child(out)));
    }
    return false;
  }

  bool alpha(const Term& s, const Term& t, TraceNode* out) {
    if (out) out->goal = to_string(s) + " ~ " + to_string(t);
    if (s.kind() != t.kind()) return finish(out, "clash", false);
    switch (s.kind()) {
      case Term::Kind::atom:
        return finish(out, "~a", s.as_atom() == t.as_atom());
      case Term::Kind::susp: {
        if (s.var() != t.var()) return finish(out, "~var", false);
        for (const auto& a : diff_set(s.perm(), t.perm())) {
          if (!ctx_.contains(a, s.var())) return finish(out, "~var", false);
        }
        return finish(out, "~var", true);
      }
      case Term::Kind::tuple: {
        if (s.items().size() != t.items().size()) return finish(out, "~tuple", false);
        for (std::size_t i = 0; i < s.items().size(); ++i) {
          if (!alpha(s.items()[i], t.items()[i], child(out))) return finish(out, "~tuple", false);
        }
        return finish(out, "~tuple", true);
      }
      case Term::Kind::abs: {
        if (s.binder() == t.binder()) return finish(out, "~[a]", alpha(s.body(), t.body(), child(out)));
        const auto swap = Permutation::swap(s.binder(), t.binder());
        const bool ok = alpha(s.body(), act_term(swap, t.body()), child(out)) &&
                        fresh(s.binder(), t.body(), child(out));
        return finish(out, "~ab", ok);
      }
      case Term::Kind::app:
        return app(s, t, out);
    }
    return false;
  }

 private:
  bool app(const Term& s, const Term& t, TraceNode* out) {
    if (s.symbol() != t.symbol()) return finish(out, "clash", false);
    const Theory th = sig_->theory(s.symbol());
    switch (th) {
      case Theory::none:
        return finish(out, "~app", alpha(s.arg(), t.arg(), child(out)));
      case Theory::A: {
        const auto sa = s.app_args();
        const auto ta = t.app_args();
        if (sa.size() != ta.size()) return finish(out, "~A", false);
        for (std::size_t i = 0; i < sa.size(); ++i) {
          if (!alpha(sa[i], ta[i], child(out))) return finish(out, "~A", false);
        }
        return finish(out, "~A", true);
      }
      case Theory::C: {
        const auto sa = s.app_args();
        const auto ta = t.app_args();
        if (sa.size() != 2 || ta.size() != 2) {
          return finish(out, "~app", alpha(s.arg(), t.arg(), child(out)));
        }
        for (std::size_t i = 0; i < 2; ++i) {
          TraceNode attempt;
          TraceNode* at = out ? &attempt : nullptr;
          const bool ok = alpha(sa[0], ta[i], child(at)) && alpha(sa[1], ta[1 - i], child(at));
          if (ok || i == 1) {
            if (out) out->children = std::move(attempt.children);
            return finish(out, "~C", ok);
          }
        }
        return false;
      }
      case Theory::AC:
        return finish(out, "~AC", ac(s.symbol(), s.app_args(), t.app_args(), out));
    }
    return false;
  }

  // Head selection: s0 against some t_i, then the remainders.
  bool ac(const std::string& f, const std::vector<Term>& sa, const std::vector<Term>& ta,
          TraceNode* out) {
    if (sa.size() != ta.size()) return false;
    if (sa.size() == 1) return alpha(sa[0], ta[0], child(out));
    const std::vector<Term> srest(sa.begin() + 1, sa.end());
    for (std::size_t i = 0; i < ta.size(); ++i) {
      TraceNode attempt;
      TraceNode* at = out ? &attempt : nullptr;
      bool ok = alpha(sa[0], ta[i], child(at));
      if (ok) {
        std::vector<Term> trest;
        for (std::size_t j = 0; j < ta.size(); ++j) {
          if (j != i) trest.push_back(ta[j]);
        }
        TraceNode* rest = child(at);
        if (rest) {
          rest->rule = "~AC";
          rest->goal = f + "(...) remainder";
        }
        ok = ac(f, srest, trest, rest);
        if (rest) rest->ok = ok;
      }
      if (ok || i + 1 == ta.size()) {
        if (out) out->children = std::move(attempt.children);
        return ok;
      }
    }
    return false;
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

  const Signature* sig_;
  const FreshnessContext& ctx_;
};

}  // namespace

Verdict check_fresh(const FreshnessContext& ctx, const Atom& a, const Term& t,
                    const CheckOptions& opts) {
  static const Signature permissive(true);
  FreshChecker checker(&permissive, ctx);
  Verdict v;
  if (opts.trace) {
    TraceNode root;
    v.holds = checker.fresh(a, t, &root);
    v.trace = std::move(root);
  } else {
    v.holds = checker.fresh(a, t, nullptr);
  }
  return v;
}

Verdict check_alpha_fresh(const Signature& sig, const FreshnessContext& ctx, const Term& s,
                          const Term& t, const CheckOptions& opts) {
  FreshChecker checker(&sig, ctx);
  const Term fs = flatten(sig, s);
  const Term ft = flatten(sig, t);
  Verdict v;
  if (opts.trace) {
    TraceNode root;
    v.holds = checker.alpha(fs, ft, &root);
    v.trace = std::move(root);
  } else {
    v.holds = checker.alpha(fs, ft, nullptr);
  }
  return v;
}

}  // namespace nomfix
