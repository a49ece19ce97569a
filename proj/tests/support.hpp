// Shared fixtures for the unit and acceptance tests.
#pragma once

#include "indisc/formula.hpp"
#include "indisc/satclass.hpp"
#include "indisc/syntax.hpp"

#include <random>
#include <vector>

namespace indisc::testing {

/// Random formulas whose free variables are exactly `vars` (in the sense that
/// every one of them occurs), with at most one extra quantifier over x9.
class RandomFormulas {
 public:
  explicit RandomFormulas(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  Formula make(const std::vector<VarId>& vars) {
    Formula f = body(vars, 2, true);
    // Guarantee every variable occurs so the arity is exactly |vars|.
    for (const auto& v : vars)
      if (!free_vars(f).count(v)) f = Formula::disj(f, Formula::lt(Term::var(v), Term::zero()));
    return f;
  }

  std::vector<Natural> increasing_subset(std::size_t max_size, unsigned domain) {
    std::vector<Natural> out;
    for (unsigned v = 0; v <= domain; ++v)
      if (below(3) == 0) out.push_back(v);
    while (out.size() > max_size) out.erase(out.begin() + static_cast<std::ptrdiff_t>(below(out.size())));
    return out;
  }

 private:
  Term term(const std::vector<VarId>& vars, int depth) {
    std::uint64_t r = below(6);
    if (depth == 0 || r < 3) {
      if (r == 0) return numeral(below(3));
      return Term::var(vars[below(vars.size())]);
    }
    if (r == 3) return Term::succ(term(vars, depth - 1));
    if (r == 4) return Term::add(term(vars, depth - 1), term(vars, depth - 1));
    return Term::mul(term(vars, depth - 1), term(vars, depth - 1));
  }

  Formula atom(const std::vector<VarId>& vars) {
    Term a = term(vars, 1), b = term(vars, 1);
    return below(2) ? Formula::lt(a, b) : Formula::eq(a, b);
  }

  Formula body(const std::vector<VarId>& vars, int depth, bool allow_quantifier) {
    std::uint64_t r = below(10);
    if (depth == 0 || r < 4) return atom(vars);
    if (r < 6) return Formula::negate(body(vars, depth - 1, allow_quantifier));
    if (r < 8) return Formula::disj(body(vars, depth - 1, allow_quantifier), body(vars, depth - 1, false));
    if (!allow_quantifier) return atom(vars);
    const VarId w = VarId::x(9);
    auto inner = vars;
    inner.push_back(w);
    Formula b = body(inner, depth - 1, false);
    if (r == 8) return Formula::exists(w, b);
    return Formula::bdd_exists(w, Term::var(vars[below(vars.size())]), b);
  }

  std::mt19937_64 rng_;
};

/// Matrices psi(x1, y) with sublinear or linear least witnesses; every one
/// is satisfiable for each x1, so existential corpus items are true in N.
inline std::vector<Formula> criterion_family() {
  const char* texts[] = {
      "x1 < (y * y)",
      "x1 < ((y * y) * y)",
      "~ (y * y) < x1",
      "(x1 + x1) < (y * y)",
      "x1 < ((y + y) * y)",
      "(x1 < (y * y)) /\\ exists x2 . y < (x2 * x2)",
      "(x1 + x1) < y",
      "(x1 + S(0)) < y",
      "exists x2 . (x1 + y) < (x2 * x2)",
      "(x1 < (y * y)) /\\ exists x2 . x1 < (x2 * (x2 * x2))",
      "~ y < x1",
      "(x1 * x1) < (y * (y * y))",
  };
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t));
  return out;
}

/// For each family member psi: (exists y psi, a), (~ exists y psi, a) and
/// (psi, a, b) for arguments drawn from `args`, until `count` items exist.
inline std::vector<CorpusItem> criterion_corpus(const std::vector<Formula>& family, const std::vector<Natural>& args,
                                                std::size_t count) {
  std::vector<CorpusItem> out;
  for (std::size_t round = 0; out.size() < count; ++round) {
    for (std::size_t t = 0; t < family.size() && out.size() < count; ++t) {
      const Formula& psi = family[t];
      const Natural& a = args[(round + t) % args.size()];
      const Natural& b = args[(round * 3 + t + 1) % args.size()];
      Formula ex = Formula::exists(VarId::y(), psi);
      switch (round % 3) {
        case 0: out.push_back({ex, {a}}); break;
        case 1: out.push_back({Formula::negate(ex), {a}}); break;
        default: out.push_back({psi, {a, b}}); break;
      }
    }
  }
  return out;
}

}  // namespace indisc::testing
