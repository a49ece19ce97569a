#include "indisc/corpus.hpp"

#include "indisc/syntax.hpp"

#include <random>

namespace indisc {

namespace {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Formula formula(std::size_t depth, std::size_t budget) {
    const std::uint64_t roll = below(100);
    if (budget <= 1 || roll < 30) return atom();
    if (depth > 0 && roll < 65) return quantifier(depth, budget);
    switch (below(4)) {
      case 0: return Formula::negate(formula(depth, budget - 1));
      case 1: return Formula::disj(formula(depth, budget / 2), formula(depth, budget / 2));
      case 2: return Formula::conj(formula(depth, budget / 2), formula(depth, budget / 2));
      default: return Formula::implies(formula(depth, budget / 2), formula(depth, budget / 2));
    }
  }

 private:
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  VarId variable() {
    static const VarId pool[] = {VarId::x(1), VarId::x(2), VarId::x(3), VarId::y()};
    return pool[below(4)];
  }

  Term term(std::size_t depth, const VarId* exclude = nullptr) {
    const std::uint64_t roll = below(10);
    if (depth == 0 || roll < 5) {
      if (roll < 2) return numeral(below(4));
      VarId v = variable();
      if (exclude && v == *exclude) return numeral(1 + below(3));
      return Term::var(v);
    }
    switch (below(3)) {
      case 0: return Term::succ(term(depth - 1, exclude));
      case 1: return Term::add(term(depth - 1, exclude), term(depth - 1, exclude));
      default: return Term::mul(term(depth - 1, exclude), term(depth - 1, exclude));
    }
  }

  Formula atom() {
    Term a = term(2), b = term(2);
    return below(2) ? Formula::eq(a, b) : Formula::lt(a, b);
  }

  Formula quantifier(std::size_t depth, std::size_t budget) {
    VarId v = variable();
    Formula body = formula(depth - 1, budget - 1);
    switch (below(4)) {
      case 0: return Formula::exists(v, body);
      case 1: return Formula::forall(v, body);
      case 2: return Formula::bdd_exists(v, term(1, &v), body);
      default: return Formula::bdd_forall(v, term(1, &v), body);
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace

std::vector<GeneratedFormula> generate_corpus(std::uint64_t seed, std::size_t depth, std::size_t count) {
  Generator gen(seed);
  std::vector<GeneratedFormula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Formula f = gen.formula(depth, 12);
    out.push_back({f, free_vars(f).size(), exists_depth(normalize_connectives(f))});
  }
  return out;
}

std::string format_corpus(const std::vector<GeneratedFormula>& corpus) {
  std::string out;
  for (const auto& g : corpus) {
    out += "# arity=" + std::to_string(g.arity) + " exists_depth=" + std::to_string(g.exists_depth) + "\n";
    out += render(g.formula) + "\n";
  }
  return out;
}

}  // namespace indisc
