#include <gtest/gtest.h>

#include "nomfix/fixpoint.hpp"
#include "nomfix/freshness.hpp"
#include "nomfix/translate.hpp"
#include "nomfix/unify.hpp"
#include "support.hpp"

using namespace nomfix;
using namespace nomfix::testing;

namespace {

const Atom c1 = Atom::generated("#c", 1);
const Atom c2 = Atom::generated("#c", 2);

}  // namespace

TEST(Translate, FreshToFixp) {
  NameGenerator gen;
  std::vector<TranslationRecord> record;
  const FixpointContext u = fresh_to_fixp({{A("a"), V("X")}}, gen, &record);
  EXPECT_EQ(u, (FixpointContext{{Permutation::swap(A("a"), Atom::generated("#c", 0)), V("X")}}));
  ASSERT_EQ(record.size(), 1u);
  EXPECT_EQ(record[0].generated, Atom::generated("#c", 0));

  EXPECT_TRUE(fresh_to_fixp({}, gen).empty());

  const FixpointContext two = fresh_to_fixp({{A("a"), V("X")}, {A("b"), V("X")}}, gen);
  ASSERT_EQ(two.size(), 2u);
  const auto& cs = two.constraints();
  const auto s0 = support_perm(cs[0].perm);
  const auto s1 = support_perm(cs[1].perm);
  std::set<Atom> gens;
  for (const auto& s : {s0, s1}) {
    for (const auto& a : s) {
      if (a.is_generated()) gens.insert(a);
    }
  }
  EXPECT_EQ(gens.size(), 2u);
}

TEST(Translate, FixpToFresh) {
  EXPECT_EQ(fixp_to_fresh({{P("(a b)"), V("X")}}),
            (FreshnessContext{{A("a"), V("X")}, {A("b"), V("X")}}));
  EXPECT_TRUE(fixp_to_fresh({{Permutation::identity(), V("X")}}).empty());
  const FixpointContext psi{{Permutation::swap(A("a"), c1), V("W")},
                            {Permutation::swap(c1, c2), V("W")}};
  EXPECT_EQ(fixp_to_fresh(psi), (FreshnessContext{{A("a"), V("W")}, {c1, V("W")}, {c2, V("W")}}));
}

TEST(Translate, SolutionToFresh) {
  const auto [d0, s0] = translate_solution_to_fresh({});
  EXPECT_TRUE(d0.empty());
  EXPECT_TRUE(s0.empty());

  const Solution psi = SOL("{(a #c1) fix W, (#c1 #c2) fix W} |- {X -> (a b)(b c).W, Y -> b}");
  const auto [delta, sigma] = translate_solution_to_fresh(psi);
  EXPECT_EQ(delta, (FreshnessContext{{A("a"), V("W")}, {c1, V("W")}, {c2, V("W")}}));
  EXPECT_EQ(sigma, psi.subst);

  // The translated pair solves the problem in the freshness system.
  const Problem pr = PR("[a] f((X, a)) =? [b] f(((b c).W, (a c).Y))");
  const auto& eq = std::get<EqConstraint>(pr.constraints[0]);
  EXPECT_TRUE(check_alpha_fresh(test_sig(), delta, apply_subst(eq.lhs, sigma),
                                apply_subst(eq.rhs, sigma))
                  .holds);
}

TEST(Translate, SolutionToFixp) {
  NameGenerator gen;
  const Substitution delta{{V("X"), T("f(W)")}};
  const Solution sol = translate_solution_to_fixp({{A("a"), V("W")}}, delta, gen);
  EXPECT_EQ(sol.context,
            (FixpointContext{{Permutation::swap(A("a"), Atom::generated("#c", 0)), V("W")}}));
  EXPECT_EQ(sol.subst, delta);

  const Solution empty = translate_solution_to_fixp({}, {}, gen);
  EXPECT_TRUE(empty.context.empty());
  EXPECT_TRUE(empty.subst.empty());
}

TEST(Translate, RandomSolutionsSurviveTranslation) {
  Gen g(seed() ^ 0x7a);
  Gen::Shape sh;
  sh.binary = {"k"};
  sh.depth = 3;
  int solved = 0;
  for (int i = 0; i < 400 && solved < 60; ++i) {
    const Term s = g.term(sh);
    Term t = g.coin(50) ? act_term(g.perm(sh.atoms, 2), s) : g.term(sh);
    Problem pr;
    pr.constraints.emplace_back(EqConstraint{s, t});
    const UnifyResult r = unify(pr);
    if (!r.solved()) continue;
    ++solved;
    const auto [delta, sigma] = translate_solution_to_fresh(*r.solution);
    EXPECT_TRUE(check_alpha_fresh(syntactic_sig(), delta, apply_subst(s, sigma), apply_subst(t, sigma)).holds)
        << to_string(pr) << "  " << to_string(*r.solution);
    // And back again.
    NameGenerator gen("#d");
    const Solution back = translate_solution_to_fixp(delta, sigma, gen);
    EXPECT_TRUE(check_alpha_fixp(syntactic_sig(), back.context, apply_subst(s, sigma), apply_subst(t, sigma)).holds)
        << to_string(pr) << "  " << to_string(back);
  }
  EXPECT_GT(solved, 20);
}

TEST(Translate, JudgementBridges) {
  NameGenerator gen;
  const Signature sig = syntactic_sig();
  EXPECT_TRUE(fresh_judgement_via_fixp(sig, {{A("a"), V("X")}}, A("a"), T("X"), gen).holds);
  EXPECT_FALSE(fresh_judgement_via_fixp(sig, {}, A("a"), T("X"), gen).holds);
  EXPECT_TRUE(fresh_judgement_via_fixp(sig, {}, A("a"), T("[a]X"), gen).holds);
  EXPECT_TRUE(fixp_judgement_via_fresh({{P("(a b)"), V("X")}}, P("(a b)"), T("f(X)")));
  EXPECT_FALSE(fixp_judgement_via_fresh({{P("(a b)"), V("X")}}, P("(a c)"), T("f(X)")));
}
