#include "indisc/error.hpp"
#include "indisc/satclass.hpp"
#include "indisc/syntax.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace indisc;

namespace {

Formula P(const char* s) { return parse_formula(s); }
using Nats = std::vector<Natural>;

}  // namespace

TEST_CASE("sigma_membership worked examples") {
  Nats I{8, 20, 50};
  auto v = sigma_membership(P("exists y . x < y"), Nats{5}, I);
  CHECK(v.member);
  CHECK(v.j == 8);
  CHECK(v.iblock == Nats{20});
  CHECK(v.star_used.star == P("exists y < z1 . x < y"));

  auto c = sigma_membership(P("0 < 0"), Nats{}, I);
  CHECK_FALSE(c.member);
  CHECK(c.star_used.k == 0);
  CHECK(c.iblock.empty());

  CHECK_FALSE(sigma_membership(P("exists y . y < x"), Nats{0}, I).member);
}

TEST_CASE("sigma_membership errors and guard") {
  Nats I{8, 20, 50};
  CHECK_THROWS_AS(sigma_membership(P("exists y . x < y"), Nats{50}, I), IExhausted);
  CHECK_THROWS_AS(sigma_membership(P("exists y . exists x2 . exists x3 . x1 < y"), Nats{5}, I), IExhausted);
  CHECK_THROWS_AS(sigma_membership(P("x1 < x2"), Nats{5}, I), FormulaError);
  SatOptions strict;
  strict.guard = Guard::Strict;
  // code("0 < 0") = pair(6, 0) = 21 lies between 20 and 50, so j = 50.
  auto s = sigma_membership(P("0 < 0"), Nats{}, I, strict);
  CHECK(s.j == 50);
  CHECK_THROWS_AS(sigma_membership(P("0 = 0 \\/ 0 < 0"), Nats{}, I, strict), IExhausted);
}

TEST_CASE("sigma uses only the free variables to choose j") {
  Nats I{8, 20, 50};
  Assignment a{{VarId::x(1), 5}, {VarId::x(2), 30}};
  CHECK(sigma_membership(P("exists y . x1 < y"), a, I).j == 8);
}

TEST_CASE("verify_nabla") {
  Nats I{8, 20, 50};
  auto r = verify_nabla(P("exists y . x < y"), Nats{5}, I, 100, 100);
  CHECK(r.outcome == NablaOutcome::Agree);
  CHECK(r.direct == Verdict3::True);
  CHECK_FALSE(r.apart.has_value());

  // Dense I breaks apartness for doubling: j = 4, i1 = 6, witness 6 is not below 6.
  auto d = verify_nabla(P("exists y . (x1 + x1) = y"), Nats{3}, Nats{4, 6}, 10, 100);
  CHECK(d.outcome == NablaOutcome::Disagree);
  REQUIRE(d.apart.has_value());
  CHECK_FALSE(*d.apart);

  auto u = verify_nabla(P("exists y . y < 0"), Nats{}, I, 100, 1000);
  CHECK(u.outcome == NablaOutcome::Undetermined);

  // Delta_0 input: star is the identity, so both sides agree.
  auto z = verify_nabla(P("exists y < x1 . (y + y) = x1"), Nats{6}, I, 100, 10);
  CHECK(z.outcome == NablaOutcome::Agree);
}

TEST_CASE("nabla_audit and prenex variant on a diagonal witness") {
  auto fam = testing::criterion_family();
  MineOptions o;
  o.domain = 5000;
  o.size = 7;
  auto w = mine_diagonal(fam, o);
  auto corpus = testing::criterion_corpus(fam, {0, 1, 2, 5, 9}, 60);
  auto rep = nabla_audit(corpus, w.I, w.domain, 1000);
  CHECK(rep.disagree == 0);
  CHECK(rep.agree + rep.undetermined + rep.skipped == corpus.size());

  SatOptions pnf;
  pnf.variant = StarVariant::Prenex;
  for (const auto& item : corpus) {
    CAPTURE(render(item.phi));
    CHECK(sigma_membership(item.phi, item.args, w.I).member == sigma_membership(item.phi, item.args, w.I, pnf).member);
  }
}

TEST_CASE("tarski_audit") {
  auto fam = testing::criterion_family();
  MineOptions o;
  o.domain = 5000;
  o.size = 7;
  auto w = mine_diagonal(fam, o);
  auto corpus = testing::criterion_corpus(fam, {0, 1, 3}, 36);
  auto rep = tarski_audit(corpus, w.I, w.domain);
  CHECK(rep.negation.checked > 0);
  CHECK(rep.negation.passed == rep.negation.checked);
  CHECK(rep.disjunction.same_j_passed == rep.disjunction.same_j);
  CHECK(rep.existential.apart_passed == rep.existential.apart_checked);
  CHECK(rep.existential.checked > 0);

  // Dense witness: the existential clause may fail, and failures are recorded.
  std::vector<CorpusItem> dbl{{P("exists y . (x1 + x1) = y"), {3}}};
  auto bad = tarski_audit(dbl, Nats{4, 6, 7}, 20);
  CHECK(bad.existential.checked == 1);
  CHECK(bad.existential.apart_checked == 0);
}

TEST_CASE("cofinal_stability_audit") {
  Nats I{8, 20, 50, 120};
  std::vector<CorpusItem> delta0{{P("exists y < x1 . (y + y) = x1"), {6}}, {P("0 < x1"), {3}}};
  auto r = cofinal_stability_audit(delta0, I, 2);
  CHECK(r.identical == 2);
  CHECK_THROWS_AS(cofinal_stability_audit(delta0, I, 3), DomainError);

  // A non-diagonal witness can change verdicts on a tail.
  std::vector<CorpusItem> c{{P("exists y . (x1 + x1) = y"), {3}}};
  auto d = cofinal_stability_audit(c, Nats{4, 6, 30, 40}, 2);
  CHECK(d.different == 1);
  CHECK(d.differing_items == std::vector<std::size_t>{0});
}

TEST_CASE("definable_class_check") {
  std::vector<Formula> fam{P("(x1 + x1) = x2"), P("x1 < x2")};
  auto all = definable_class_check(P("x = x"), fam, 30);
  CHECK(all.members.size() == 31);
  CHECK(all.top_decile);
  CHECK(all.indis == std::vector<bool>{false, true});

  // Odd numbers: no doubling pair inside the class.
  auto odd = definable_class_check(P("exists y < x . S(y + y) = x"), fam, 30);
  CHECK(odd.members.size() == 15);
  CHECK(odd.indis == std::vector<bool>{true, true});

  // theta defining a mined set.
  auto w = mine_indiscernibles(fam, MineOptions{40, 4});
  Formula theta = Formula::eq(Term::var(VarId::x(1)), numeral(w.I[0]));
  for (std::size_t i = 1; i < w.I.size(); ++i)
    theta = Formula::disj(theta, Formula::eq(Term::var(VarId::x(1)), numeral(w.I[i])));
  auto mined = definable_class_check(theta, fam, 40);
  CHECK(mined.members == w.I);
  CHECK(mined.indis == std::vector<bool>{true, true});

  CHECK_THROWS_AS(definable_class_check(P("x1 < x2"), fam, 30), FormulaError);
}

TEST_CASE("relativized Indis(theta) sentence agrees with check_indis on I_theta") {
  std::vector<Formula> fam{P("(x1 + x1) = x2"), P("x1 < x2")};
  for (const char* t : {"x = x", "exists y < x . S(y + y) = x", "x < S(S(S(0)))"}) {
    Formula theta = P(t);
    auto rep = definable_class_check(theta, fam, 8);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      CAPTURE(t);
      CHECK(eval_over_expansion(emit_indis_theta_sentence(fam[i], theta), {}, {}, 8) == rep.indis[i]);
    }
  }
}
