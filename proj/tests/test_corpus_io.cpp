#include "indisc/error.hpp"
#include "indisc/corpus.hpp"
#include "indisc/json_io.hpp"
#include "indisc/syntax.hpp"

#include <doctest.h>

using namespace indisc;

TEST_CASE("generate_corpus: depth 0 is quantifier-free") {
  auto c = generate_corpus(1, 0, 10);
  REQUIRE(c.size() == 10);
  for (const auto& g : c) {
    CHECK(g.exists_depth == 0);
    CHECK(is_delta0(g.formula));
  }
}

TEST_CASE("generate_corpus: byte-identical for equal seeds") {
  CHECK(format_corpus(generate_corpus(9, 2, 200)) == format_corpus(generate_corpus(9, 2, 200)));
  CHECK(format_corpus(generate_corpus(9, 2, 50)) != format_corpus(generate_corpus(10, 2, 50)));
}

TEST_CASE("generate_corpus: metadata matches and text reparses") {
  auto c = generate_corpus(5, 3, 40);
  auto lines = parse_corpus(format_corpus(c));
  REQUIRE(lines.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(lines[i].formula == c[i].formula);
    CHECK(free_vars(c[i].formula).size() == c[i].arity);
    CHECK(c[i].exists_depth <= 3);
  }
}

TEST_CASE("corpus lines with arguments") {
  auto lines = parse_corpus("# comment\n\nexists y . x1 < y ; 5\nx1 < x2 ; 1, 2\n0 = 0\n");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].args == std::vector<Natural>{5});
  CHECK(lines[0].line_number == 3);
  CHECK(lines[1].args == std::vector<Natural>{1, 2});
  CHECK_FALSE(lines[2].has_args);
}

TEST_CASE("witness JSON roundtrip") {
  std::vector<Formula> fam{parse_formula("x1 < x2"), parse_formula("(x1 + x1) < y")};
  MineOptions o;
  o.domain = 300;
  o.size = 4;
  auto w = mine_diagonal(fam, o);
  Json j = witness_to_json(w);
  auto back = witness_from_json(Json::parse(dump(j)));
  CHECK(back.I == w.I);
  CHECK(back.family == w.family);
  CHECK(back.domain == w.domain);
  CHECK(back.checks == w.checks);
  CHECK(back.h_sizes == w.h_sizes);
  CHECK(dump(witness_to_json(back)) == dump(j));
  CHECK_THROWS_AS(witness_from_json(Json::parse("{\"I\": [1]}")), DomainError);
}

TEST_CASE("large naturals serialize as strings") {
  Natural big = parse_natural("123456789012345678901234567890");
  CHECK(natural_to_json(big).is_string());
  CHECK(natural_from_json(natural_to_json(big)) == big);
  CHECK(natural_to_json(42).is_number());
}
