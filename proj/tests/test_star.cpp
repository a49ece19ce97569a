#include "indisc/error.hpp"
#include "indisc/corpus.hpp"
#include "indisc/evaluator.hpp"
#include "indisc/star.hpp"
#include "indisc/syntax.hpp"

#include <doctest.h>

using namespace indisc;

namespace {

Formula P(const char* s) { return parse_formula(s); }

// Test-side oracle: the star of `norm` must mirror it node by node, with the
// unbounded exists at nesting level d (0-based) bounded by z_{d+1}.
bool mirrors(const Formula& norm, const Formula& st, std::uint32_t depth) {
  using K = Formula::Kind;
  switch (norm.kind()) {
    case K::Not:
      return st.kind() == K::Not && mirrors(norm.sub(), st.sub(), depth);
    case K::Or:
      return st.kind() == K::Or && mirrors(norm.left(), st.left(), depth) && mirrors(norm.right(), st.right(), depth);
    case K::Exists:
      return st.kind() == K::BddExists && st.var() == norm.var() &&
             st.bound() == Term::var(VarId::z(depth + 1)) && mirrors(norm.body(), st.body(), depth + 1);
    default:
      return norm == st;
  }
}

}  // namespace

TEST_CASE("star: worked examples") {
  auto a = star(P("x1 < x2"));
  CHECK(a.star == P("x1 < x2"));
  CHECK(a.k == 0);

  auto b = star(P("exists y . (x + y) = S(0)"));
  CHECK(b.star == P("exists y < z1 . (x + y) = S(0)"));
  CHECK(b.k == 1);

  auto c = star(P("~ exists y . ~ exists w . y < w"));
  CHECK(c.star == P("~ exists y < z1 . ~ exists w < z2 . y < w"));
  CHECK(c.k == 2);
  CHECK(c.zblock == std::vector<VarId>{VarId::z(1), VarId::z(2)});
}

TEST_CASE("star: disjunction shares the z-block") {
  auto s = star(P("(exists y . y = x1) \\/ ~ exists y . exists x2 . y < x2"));
  CHECK(s.k == 2);
  CHECK(s.star == P("(exists y < z1 . y = x1) \\/ ~ exists y < z1 . exists x2 < z2 . y < x2"));
}

TEST_CASE("star: rejects unsupported input") {
  CHECK_THROWS_AS(star(P("0 = 0 /\\ 0 = 0")), FormulaError);
  CHECK_THROWS_AS(star(P("forall y . y = y")), FormulaError);
  CHECK_THROWS_AS(star(P("exists y < x1 . y = y")), FormulaError);
  CHECK_THROWS_AS(star(P("exists y . y = z1")), FormulaError);
  CHECK_THROWS_AS(star(parse_formula("I(0)", Language::LA_I)), FormulaError);
}

TEST_CASE("shift_fresh") {
  CHECK(shift_fresh(P("z1 < z2"), 1) == P("z2 < z3"));
}

TEST_CASE("to_prenex and star_pnf examples") {
  CHECK(to_prenex(P("x1 < x2 \\/ 0 = 0")) == P("x1 < x2 \\/ 0 = 0"));
  CHECK(to_prenex(P("~ exists y . y < x")) == P("forall y . ~ y < x"));
  CHECK(to_prenex(P("(exists y . y = x) \\/ (exists y . y < x)")) ==
        P("exists y . exists x2 . (y = x1 \\/ x2 < x1)"));
  auto s = star_pnf(P("forall v . exists w . v < w"));
  CHECK(s.star == P("forall v < z1 . exists w < z2 . v < w"));
  CHECK(s.k == 2);
  CHECK(star_pnf(P("0 < x1")).k == 0);
}

TEST_CASE("property: star laws over a generated corpus") {
  for (std::size_t d = 0; d <= 4; ++d) {
    for (const auto& g : generate_corpus(300 + d, d, 60)) {
      Formula n = normalize_connectives(g.formula);
      auto s = star(n);
      CAPTURE(render(n));
      CHECK(is_delta0(s.star));
      CHECK(s.k == exists_depth(n));
      CHECK(mirrors(n, s.star, 0));
      VarSet expected = free_vars(n);
      expected.insert(s.zblock.begin(), s.zblock.end());
      CHECK(free_vars(s.star) == expected);
    }
  }
}

TEST_CASE("property: prenex form is equivalent on [0,20]") {
  for (const auto& g : generate_corpus(11, 2, 80)) {
    Formula n = normalize_connectives(g.formula);
    Formula p = to_prenex(n);
    CAPTURE(render(n));
    CHECK(free_vars(p) == free_vars(n));
    auto vars = free_var_list(n);
    for (unsigned base : {0u, 3u, 11u, 20u}) {
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (base + 5 * i) % 21;
      CHECK(eval_over_expansion(n, a, {}, 20) == eval_over_expansion(p, a, {}, 20));
    }
  }
}
