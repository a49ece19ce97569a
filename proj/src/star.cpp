#include "indisc/star.hpp"

#include "indisc/error.hpp"
#include "indisc/syntax.hpp"

#include <algorithm>

namespace indisc {

namespace {

void require_star_input(const Formula& f) {
  if (!is_normalized(f))
    throw FormulaError("star expects only ~, \\/ and exists; normalize first: " + render(f));
  if (mentions_i(f)) throw FormulaError("star is defined on arithmetic formulas without I");
  if (mentions_fresh(f)) throw FormulaError("input already contains a fresh z-variable: " + render(f));
}

StarResult star_rec(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Lt: return {f, 0, {}};
    case K::Not: {
      auto s = star_rec(f.sub());
      return {Formula::negate(std::move(s.star)), s.k, {}};
    }
    case K::Or: {
      auto a = star_rec(f.left());
      auto b = star_rec(f.right());
      return {Formula::disj(std::move(a.star), std::move(b.star)), std::max(a.k, b.k), {}};
    }
    case K::Exists: {
      auto s = star_rec(f.body());
      return {Formula::bdd_exists(f.var(), Term::var(VarId::z(1)), shift_fresh(s.star, 1)), s.k + 1, {}};
    }
    default: throw FormulaError("unexpected connective in star input: " + render(f));
  }
}

std::vector<VarId> zblock(std::size_t k) {
  std::vector<VarId> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(VarId::z(static_cast<std::uint32_t>(i)));
  return out;
}

struct Quant {
  bool exists;
  VarId var;
};

struct Prenex {
  std::vector<Quant> prefix;
  Formula matrix;
};

Prenex pull(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: {
      auto p = pull(f.sub());
      for (auto& q : p.prefix) q.exists = !q.exists;
      // Cancel ~~ so flipped prefixes leave a clean matrix.
      if (p.matrix.kind() == K::Not) return {std::move(p.prefix), p.matrix.sub()};
      return {std::move(p.prefix), Formula::negate(std::move(p.matrix))};
    }
    case K::Or: {
      auto a = pull(f.left());
      auto b = pull(f.right());
      a.prefix.insert(a.prefix.end(), b.prefix.begin(), b.prefix.end());
      return {std::move(a.prefix), Formula::disj(std::move(a.matrix), std::move(b.matrix))};
    }
    case K::Exists: {
      auto p = pull(f.body());
      p.prefix.insert(p.prefix.begin(), Quant{true, f.var()});
      return p;
    }
    default: return {{}, f};
  }
}

// Gives every quantifier a distinct variable that is not free anywhere in the
// formula. Visits quantifiers in pre-order, left to right.
class Renamer {
 public:
  explicit Renamer(const Formula& f) {
    used_ = free_vars(f);
    next_ = max_ordinary_index(f) + 1;
  }

  Formula run(const Formula& f, const std::map<VarId, VarId>& scope) {
    using K = Formula::Kind;
    auto apply_term = [&](const Term& t) {
      std::map<VarId, Term> m;
      for (const auto& [a, b] : scope) m.emplace(a, Term::var(b));
      return substitute(t, m);
    };
    switch (f.kind()) {
      case K::Eq: return Formula::eq(apply_term(f.lhs()), apply_term(f.rhs()));
      case K::Lt: return Formula::lt(apply_term(f.lhs()), apply_term(f.rhs()));
      case K::InI: return Formula::in_i(apply_term(f.term()));
      case K::Not: return Formula::negate(run(f.sub(), scope));
      case K::Or: {
        auto a = run(f.left(), scope);
        return Formula::disj(std::move(a), run(f.right(), scope));
      }
      case K::Exists: {
        VarId v = f.var();
        VarId target = v;
        if (used_.contains(v)) target = VarId::x(next_++);
        used_.insert(target);
        auto inner = scope;
        inner[v] = target;
        return Formula::exists(target, run(f.body(), inner));
      }
      default: throw FormulaError("unexpected connective during prenex renaming");
    }
  }

 private:
  VarSet used_;
  std::uint32_t next_;
};

}  // namespace

Formula shift_fresh(const Formula& f, std::uint32_t offset) {
  std::map<VarId, VarId> mapping;
  for (const auto& v : all_vars(f))
    if (v.is_fresh()) mapping.emplace(v, VarId::z(v.index + offset));
  return rename_all(f, mapping);
}

StarResult star(const Formula& f) {
  require_star_input(f);
  auto r = star_rec(f);
  r.zblock = zblock(r.k);
  return r;
}

Formula to_prenex(const Formula& f) {
  auto g = normalize_connectives(f);
  if (mentions_fresh(g)) throw FormulaError("input already contains a fresh z-variable: " + render(f));
  Renamer renamer(g);
  auto p = pull(renamer.run(g, {}));
  Formula out = p.matrix;
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
    out = it->exists ? Formula::exists(it->var, out) : Formula::forall(it->var, out);
  return out;
}

StarResult star_pnf(const Formula& f) {
  require_star_input(normalize_connectives(f));
  Formula p = to_prenex(f);
  std::vector<std::pair<bool, VarId>> prefix;
  Formula cur = p;
  while (cur.kind() == Formula::Kind::Exists || cur.kind() == Formula::Kind::Forall) {
    prefix.emplace_back(cur.kind() == Formula::Kind::Exists, cur.var());
    cur = cur.body();
  }
  Formula out = cur;
  for (std::size_t i = prefix.size(); i-- > 0;) {
    Term bound = Term::var(VarId::z(static_cast<std::uint32_t>(i + 1)));
    out = prefix[i].first ? Formula::bdd_exists(prefix[i].second, bound, out)
                          : Formula::bdd_forall(prefix[i].second, bound, out);
  }
  return {out, prefix.size(), zblock(prefix.size())};
}

}  // namespace indisc
