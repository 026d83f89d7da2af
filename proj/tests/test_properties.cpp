#include <gtest/gtest.h>

#include <sstream>

#include "nomfix/cunify.hpp"
#include "nomfix/fixpoint.hpp"
#include "nomfix/freshness.hpp"
#include "nomfix/oracle.hpp"
#include "nomfix/translate.hpp"
#include "nomfix/unify.hpp"
#include "support.hpp"

using namespace nomfix;
using namespace nomfix::testing;

namespace {

class Props : public ::testing::Test {
 protected:
  void SetUp() override { RecordProperty("NOMFIX_SEED", std::to_string(seed())); }
};

Gen::Shape syntactic_shape() {
  Gen::Shape sh;
  sh.binary = {"k"};
  return sh;
}

Gen::Shape c_shape() {
  Gen::Shape sh;
  sh.binary = {"k", "+"};
  return sh;
}

bool same_action(const Permutation& p, const Permutation& q, const std::vector<Atom>& atoms) {
  for (const auto& a : atoms) {
    if (apply_perm_atom(p, a) != apply_perm_atom(q, a)) return false;
  }
  return true;
}

// Lines of constraints with normalized permutations, sorted.
std::string canon_problem(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const Problem pr = PR(line);
    const Constraint& c = pr.constraints.at(0);
    if (const auto* fx = std::get_if<FixConstraint>(&c)) {
      lines.push_back(to_string(Constraint(FixConstraint{fx->perm.normalized(), fx->target})));
    } else {
      lines.push_back(line);
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string lines_of(const Problem& pr) {
  std::string out;
  for (const auto& c : pr.constraints) out += to_string(c) + "\n";
  return out;
}

Problem reversed(Problem pr) {
  std::reverse(pr.constraints.begin(), pr.constraints.end());
  return pr;
}

Problem non_instantiating_normal_form(const Problem& pr, NameGenerator& gen) {
  const std::set<Var> all = problem_vars(pr);
  Problem cur = pr;
  while (auto step = simplify_step(cur, gen, all)) cur = step->first;
  return cur;
}

}  // namespace

TEST_F(Props, PermutationGroupLaws) {
  Gen g(seed() ^ 0x100);
  const Gen::Shape sh;
  for (int i = 0; i < 500; ++i) {
    const Permutation p = g.perm(sh.atoms, 4);
    const Permutation q = g.perm(sh.atoms, 4);
    const Permutation r = g.perm(sh.atoms, 4);
    EXPECT_TRUE(same_action(compose_perm(compose_perm(p, q), r), compose_perm(p, compose_perm(q, r)), sh.atoms));
    EXPECT_TRUE(compose_perm(p, invert_perm(p)).acts_as_identity());
    EXPECT_TRUE(same_action(p.normalized(), p, sh.atoms));
    EXPECT_EQ(conjugate_perm(p, r), compose_perm(r, compose_perm(p, invert_perm(r))));
  }
}

TEST_F(Props, ActionCommutesWithSubstitution) {
  Gen g(seed() ^ 0x101);
  const Gen::Shape sh;
  for (int i = 0; i < 500; ++i) {
    const Permutation p = g.perm(sh.atoms, 3);
    const Term t = g.term(sh);
    Substitution s;
    for (const auto& v : sh.vars) {
      if (g.coin(70)) s.bind(v, g.term(sh, 2));
    }
    EXPECT_EQ(act_term(p, apply_subst(t, s)), apply_subst(act_term(p, t), s)) << to_string(t);
    EXPECT_EQ(act_term(invert_perm(p), act_term(p, t)), t) << to_string(t);
  }
}

TEST_F(Props, FlattenIdempotent) {
  Gen g(seed() ^ 0x102);
  Gen::Shape sh;
  sh.binary = {"h", "or", "+", "k"};
  sh.depth = 4;
  const Signature sig = test_sig();
  for (int i = 0; i < 500; ++i) {
    const Term t = g.term(sh);
    const Term f = flatten(sig, t);
    EXPECT_EQ(flatten(sig, f), f) << to_string(t);
  }
}

TEST_F(Props, FreshnessEquivariantOnGround) {
  Gen g(seed() ^ 0x103);
  const Gen::Shape sh;
  for (int i = 0; i < 500; ++i) {
    const Term t = g.ground(sh);
    const Atom a = g.pick(sh.atoms);
    const Permutation p = g.perm(sh.atoms, 3);
    EXPECT_EQ(check_fresh({}, a, t).holds, check_fresh({}, apply_perm_atom(p, a), act_term(p, t)).holds)
        << to_string(t);
  }
}

TEST_F(Props, FreshAlphaIsEquivalence) {
  Gen g(seed() ^ 0x104);
  Gen::Shape sh = syntactic_shape();
  sh.depth = 2;
  const Signature sig = syntactic_sig();
  const FreshnessContext delta{{A("a"), V("X")}, {A("b"), V("X")}, {A("c"), V("Y")}};
  int related = 0;
  for (int i = 0; i < 400; ++i) {
    const Term s = g.term(sh);
    const Term t = g.coin() ? act_term(g.perm(sh.atoms, 1), s) : g.term(sh);
    const Term u = g.coin() ? act_term(g.perm(sh.atoms, 1), t) : g.term(sh);
    EXPECT_TRUE(check_alpha_fresh(sig, delta, s, s).holds);
    const bool st = check_alpha_fresh(sig, delta, s, t).holds;
    EXPECT_EQ(st, check_alpha_fresh(sig, delta, t, s).holds) << to_string(s) << " / " << to_string(t);
    if (st && check_alpha_fresh(sig, delta, t, u).holds) {
      ++related;
      EXPECT_TRUE(check_alpha_fresh(sig, delta, s, u).holds) << to_string(s) << " / " << to_string(u);
    }
  }
  EXPECT_GT(related, 10);
}

TEST_F(Props, FixpointCorrectness) {
  Gen g(seed() ^ 0x105);
  Gen::Shape sh;
  sh.binary = {"k", "+", "or"};
  const Signature sig = test_sig();
  for (int i = 0; i < 500; ++i) {
    const FixpointContext ctx = g.fix_context(sh, 3);
    const Permutation p = g.perm(sh.atoms, 2);
    const Term t = g.term(sh);
    EXPECT_EQ(check_fixp(sig, ctx, p, t).holds, check_alpha_fixp(sig, ctx, act_term(p, t), t).holds)
        << to_string(ctx) << " " << to_string(p) << " " << to_string(t);
  }
}

TEST_F(Props, FixpointEquivariance) {
  Gen g(seed() ^ 0x106);
  Gen::Shape sh;
  sh.binary = {"k", "+", "or"};
  const Signature sig = test_sig();
  for (int i = 0; i < 400; ++i) {
    const FixpointContext ctx = g.fix_context(sh, 3);
    const Permutation p = g.perm(sh.atoms, 2);
    const Permutation rho = g.perm(sh.atoms, 2);
    const Term t = g.term(sh);
    const Term u = g.coin() ? act_term(g.perm(sh.atoms, 1), t) : g.term(sh);
    EXPECT_EQ(check_fixp(sig, ctx, p, t).holds,
              check_fixp(sig, ctx, conjugate_perm(p, rho), act_term(rho, t)).holds)
        << to_string(ctx) << " " << to_string(p) << " " << to_string(rho) << " " << to_string(t);
    EXPECT_EQ(check_alpha_fixp(sig, ctx, t, u).holds,
              check_alpha_fixp(sig, ctx, act_term(rho, t), act_term(rho, u)).holds)
        << to_string(ctx) << " " << to_string(rho) << " " << to_string(t) << " " << to_string(u);
  }
}

TEST_F(Props, GroundAgreementAllSignatures) {
  Gen g(seed() ^ 0x107);
  const std::vector<std::vector<std::string>> classes{{"k"}, {"+"}, {"or"}, {"k", "+", "or", "h"}};
  for (const auto& binary : classes) {
    Gen::Shape sh;
    sh.binary = binary;
    const Signature sig = test_sig();
    for (int i = 0; i < 300; ++i) {
      const Term s = g.ground(sh);
      const Term t = g.coin(60) ? g.mutate(Gen::Shape{}, act_term(g.perm(sh.atoms, 1), s), 0) : g.ground(sh);
      const bool o = oracle::ground_alpha_oracle(sig, s, t);
      EXPECT_EQ(check_alpha_fixp(sig, {}, s, t).holds, o) << to_string(s) << " / " << to_string(t);
      EXPECT_EQ(check_alpha_fresh(sig, {}, s, t).holds, o) << to_string(s) << " / " << to_string(t);
    }
  }
}

TEST_F(Props, WellFoundedMeasure) {
  Gen g(seed() ^ 0x108);
  Gen::Shape sh;
  sh.binary = {"k", "+", "or"};
  JudgementStats stats;
  CheckOptions opts;
  opts.stats = &stats;
  for (int i = 0; i < 300; ++i) {
    const FixpointContext ctx = g.fix_context(sh, 3);
    const Term t = g.term(sh);
    check_fixp(test_sig(), ctx, g.perm(sh.atoms, 2), t, opts);
    check_alpha_fixp(test_sig(), ctx, t, g.mutate(sh, t), opts);
  }
  EXPECT_GT(stats.measure_checks, 0u);
  EXPECT_EQ(stats.measure_violations, 0u);
}

TEST_F(Props, GeneratedAtomsStayInternal) {
  Gen g(seed() ^ 0x109);
  const Gen::Shape sh;
  for (int i = 0; i < 200; ++i) {
    const Term t = g.term(sh);
    const Term copy = t;
    const Verdict v = check_fixp(test_sig(), {}, g.perm(sh.atoms, 2), t);
    EXPECT_FALSE(v.trace.has_value());
    EXPECT_FALSE(mentions_generated(t));
    EXPECT_EQ(t, copy);
  }
}

TEST_F(Props, FreshToFixpPreservesJudgements) {
  Gen g(seed() ^ 0x10a);
  const Gen::Shape sh = syntactic_shape();
  const Signature sig = syntactic_sig();
  for (int i = 0; i < 500; ++i) {
    const FreshnessContext delta = g.fresh_context(sh, 3);
    const Atom a = g.pick(sh.atoms);
    const Term t = g.term(sh);
    NameGenerator gen;
    EXPECT_EQ(check_fresh(delta, a, t).holds, fresh_judgement_via_fixp(sig, delta, a, t, gen).holds)
        << to_string(delta) << " " << a.str() << " " << to_string(t);
  }
}

TEST_F(Props, FixpToFreshPreservesJudgements) {
  Gen g(seed() ^ 0x10b);
  const Gen::Shape sh = syntactic_shape();
  const Signature sig = syntactic_sig();
  for (int i = 0; i < 500; ++i) {
    const FixpointContext ctx = g.fix_context(sh, 3);
    const Permutation p = g.perm(sh.atoms, 2);
    const Term t = g.term(sh);
    EXPECT_EQ(check_fixp(sig, ctx, p, t).holds, fixp_judgement_via_fresh(ctx, p, t))
        << to_string(ctx) << " " << to_string(p) << " " << to_string(t);
  }
}

TEST_F(Props, EquationalTranslationFreshToFixp) {
  // Modulo C only the freshness-to-fixed-point direction is preserved:
  // (a b) fixes +(a, b) although a is not fresh for it.
  Gen g(seed() ^ 0x10c);
  const Gen::Shape sh = c_shape();
  const Signature sig = test_sig();
  for (int i = 0; i < 400; ++i) {
    const FreshnessContext delta = g.fresh_context(sh, 3);
    const Atom a = g.pick(sh.atoms);
    const Term t = g.term(sh);
    NameGenerator gen;
    EXPECT_EQ(check_fresh(delta, a, t).holds, fresh_judgement_via_fixp(sig, delta, a, t, gen).holds)
        << to_string(delta) << " " << a.str() << " " << to_string(t);
    const FixpointContext ctx = g.fix_context(sh, 3);
    const Permutation p = g.perm(sh.atoms, 2);
    if (fixp_judgement_via_fresh(ctx, p, t)) {
      EXPECT_TRUE(check_fixp(sig, ctx, p, t).holds) << to_string(ctx) << " " << to_string(p) << " " << to_string(t);
    }
  }
  EXPECT_TRUE(check_fixp(sig, {}, P("(a b)"), T("+(a, b)")).holds);
  EXPECT_FALSE(fixp_judgement_via_fresh({}, P("(a b)"), T("+(a, b)")));
}

TEST_F(Props, UnifySoundAndTerminating) {
  Gen g(seed() ^ 0x10d);
  const Gen::Shape sh = syntactic_shape();
  MeasureStats stats;
  UnifyOptions opts;
  opts.stats = &stats;
  int solved = 0;
  for (int i = 0; i < 400; ++i) {
    const Problem pr = g.problem(sh);
    const UnifyResult r = unify(pr, opts);
    if (!r.solved()) continue;
    ++solved;
    EXPECT_TRUE(oracle::verify_solution(syntactic_sig(), pr, *r.solution))
        << to_string(pr) << "  " << to_string(*r.solution);
    const auto [delta, sigma] = translate_solution_to_fresh(*r.solution);
    for (const auto& c : pr.constraints) {
      if (const auto* eq = std::get_if<EqConstraint>(&c)) {
        EXPECT_TRUE(check_alpha_fresh(syntactic_sig(), delta, apply_subst(eq->lhs, sigma), apply_subst(eq->rhs, sigma)).holds);
      }
    }
  }
  EXPECT_GT(solved, 50);
  EXPECT_EQ(stats.violations, 0u);
}

TEST_F(Props, NonInstantiatingRulesConfluent) {
  Gen g(seed() ^ 0x10e);
  const Gen::Shape sh = syntactic_shape();
  for (int i = 0; i < 300; ++i) {
    Problem pr = g.problem(sh);
    pr.constraints.emplace_back(FixConstraint{g.perm(sh.atoms, 2), g.term(sh)});
    NameGenerator g1;
    NameGenerator g2;
    const Problem n1 = non_instantiating_normal_form(pr, g1);
    const Problem n2 = non_instantiating_normal_form(reversed(pr), g2);
    EXPECT_TRUE(texts_equal_up_to_renaming(lines_of(n1), lines_of(n2), canon_problem))
        << to_string(pr) << "\n" << lines_of(n1) << "---\n" << lines_of(n2);
  }
}

TEST_F(Props, CUnifySoundAndTerminating) {
  Gen g(seed() ^ 0x10f);
  Gen::Shape sh = c_shape();
  sh.depth = 3;
  MeasureStats stats;
  CUnifyOptions opts;
  opts.stats = &stats;
  opts.keep_tree = false;
  int solved = 0;
  for (int i = 0; i < 300; ++i) {
    const Problem pr = g.problem(sh);
    const CUnifyResult r = c_unify(test_sig(), pr, opts);
    if (!r.solutions.empty()) ++solved;
    for (const auto& s : r.solutions) {
      EXPECT_TRUE(oracle::verify_solution(test_sig(), pr, s)) << to_string(pr) << "  " << to_string(s);
    }
  }
  EXPECT_GT(solved, 40);
  EXPECT_EQ(stats.violations, 0u);
}

TEST_F(Props, CBranchesPreserveSolutions) {
  Gen g(seed() ^ 0x110);
  Gen::Shape sh = c_shape();
  sh.depth = 2;
  sh.atoms = {A("a"), A("b")};
  oracle::TermPool pool;
  pool.atoms = {A("a"), A("b")};
  pool.symbols = {{"+", Theory::C, 2}};
  pool.max_depth = 1;
  pool.abstractions = false;
  const auto terms = oracle::enumerate_terms(pool);
  const Signature sig = test_sig();
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Term l = Term::app("+", Term::tuple({g.term(sh), g.term(sh)}));
    const Term r = Term::app("+", Term::tuple({g.term(sh), g.term(sh)}));
    Problem pr;
    if (g.coin(70)) {
      pr.constraints.emplace_back(EqConstraint{l, g.mutate(sh, r, 30)});
    } else {
      pr.constraints.emplace_back(FixConstraint{g.perm(sh.atoms, 1), l});
    }
    NameGenerator gen;
    const auto kids = c_simplify_step(sig, pr, gen);
    if (kids.size() != 2) continue;
    ++checked;
    const std::set<Var> vs = problem_vars(pr);
    oracle::for_each_ground_subst({vs.begin(), vs.end()}, terms, [&](const Substitution& d) {
      const Solution ground{{}, d};
      const bool parent = oracle::verify_solution(sig, pr, ground);
      const bool either = oracle::verify_solution(sig, kids[0].first, ground) ||
                          oracle::verify_solution(sig, kids[1].first, ground);
      EXPECT_EQ(parent, either) << to_string(pr) << "  " << to_string(d);
      return parent == either;
    });
  }
  EXPECT_GT(checked, 50);
}

TEST_F(Props, OracleDeterministic) {
  const auto pool = oracle::default_pool();
  EXPECT_EQ(oracle::enumerate_terms(pool), oracle::enumerate_terms(pool));
  auto small = pool.ground();
  small.max_depth = 1;
  const auto p1 = oracle::enumerate_ground_substs({V("X"), V("Y")}, small);
  const auto p2 = oracle::enumerate_ground_substs({V("X"), V("Y")}, small);
  EXPECT_FALSE(p1.empty());
  EXPECT_EQ(p1, p2);
}
