#include "indisc/evaluator.hpp"

#include "indisc/error.hpp"
#include "indisc/syntax.hpp"

#include <algorithm>
#include <utility>

namespace indisc {

std::string to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::False: return "false";
    case Verdict3::Unknown: return "unknown";
    case Verdict3::True: return "true";
  }
  return "?";
}

namespace {

enum class Mode { Delta0, Budgeted, Expansion };

using Env = std::vector<std::pair<VarId, Natural>>;

Verdict3 negate(Verdict3 v) {
  if (v == Verdict3::True) return Verdict3::False;
  if (v == Verdict3::False) return Verdict3::True;
  return v;
}

class Engine {
 public:
  Engine(Mode mode, Natural limit, std::span<const Natural> I)
      : mode_(mode), limit_(std::move(limit)), I_(I) {}

  Natural term(const Term& t, const Env& env) const {
    switch (t.kind()) {
      case Term::Kind::Zero: return 0;
      case Term::Kind::Var: return lookup(t.var(), env);
      case Term::Kind::Succ: {
        std::size_t depth = 0;
        const Term* cur = &t;
        while (cur->kind() == Term::Kind::Succ) {
          ++depth;
          cur = &cur->arg();
        }
        return term(*cur, env) + depth;
      }
      case Term::Kind::Add: return term(t.lhs(), env) + term(t.rhs(), env);
      case Term::Kind::Mul: {
        Natural a = term(t.lhs(), env);
        if (a == 0) return 0;
        return a * term(t.rhs(), env);
      }
    }
    return 0;
  }

  Verdict3 formula(const Formula& f, Env& env) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Eq: return to_verdict(term(f.lhs(), env) == term(f.rhs(), env));
      case K::Lt: return to_verdict(term(f.lhs(), env) < term(f.rhs(), env));
      case K::InI: {
        if (mode_ != Mode::Expansion)
          throw EvalError("the I predicate can only be evaluated over an expansion ([0,N], I)");
        Natural v = term(f.term(), env);
        return to_verdict(std::binary_search(I_.begin(), I_.end(), v));
      }
      case K::Not: return negate(formula(f.sub(), env));
      case K::Or: {
        Verdict3 a = formula(f.left(), env);
        if (a == Verdict3::True) return a;
        return std::max(a, formula(f.right(), env));
      }
      case K::And: {
        Verdict3 a = formula(f.left(), env);
        if (a == Verdict3::False) return a;
        return std::min(a, formula(f.right(), env));
      }
      case K::Implies: {
        Verdict3 a = negate(formula(f.left(), env));
        if (a == Verdict3::True) return a;
        return std::max(a, formula(f.right(), env));
      }
      case K::Exists:
      case K::Forall: {
        if (mode_ == Mode::Delta0)
          throw EvalError("unbounded quantifier in a formula evaluated as Delta_0");
        bool ex = f.kind() == K::Exists;
        Verdict3 r = range(f, env, limit_ + 1, ex);
        // A budgeted search that found no decisive instance stays Unknown.
        if (mode_ == Mode::Budgeted && r != (ex ? Verdict3::True : Verdict3::False))
          return Verdict3::Unknown;
        return r;
      }
      case K::BddExists:
      case K::BddForall: {
        Natural bound = term(f.bound(), env);
        if (mode_ == Mode::Expansion && bound > limit_ + 1) bound = limit_ + 1;
        return range(f, env, bound, f.kind() == K::BddExists);
      }
    }
    return Verdict3::Unknown;
  }

 private:
  static const Natural& lookup(const VarId& v, const Env& env) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    throw EvalError("unbound variable " + v.name());
  }

  // Kleene exists/forall over y in [0, end).
  Verdict3 range(const Formula& f, Env& env, const Natural& end, bool exists) const {
    const Verdict3 decisive = exists ? Verdict3::True : Verdict3::False;
    Verdict3 acc = exists ? Verdict3::False : Verdict3::True;
    std::size_t slot = env.size();
    env.emplace_back(f.var(), Natural(0));
    for (Natural y = 0; y < end; ++y) {
      env[slot].second = y;
      Verdict3 v = formula(f.body(), env);
      if (v == decisive) {
        acc = decisive;
        break;
      }
      if (v == Verdict3::Unknown) acc = Verdict3::Unknown;
    }
    env.pop_back();
    return acc;
  }

  Mode mode_;
  Natural limit_;
  std::span<const Natural> I_;
};

Env make_env(const Formula& f, const Assignment& a) {
  for (const auto& v : free_vars(f))
    if (!a.contains(v)) throw EvalError("unbound variable " + v.name());
  Env env;
  env.reserve(a.size() + 8);
  for (const auto& [v, val] : a) env.emplace_back(v, val);
  return env;
}

Env make_env(std::span<const VarId> vars, std::span<const Natural> values) {
  if (vars.size() != values.size())
    throw EvalError("expected " + std::to_string(vars.size()) + " arguments, got " +
                    std::to_string(values.size()));
  Env env;
  env.reserve(vars.size() + 8);
  for (std::size_t i = 0; i < vars.size(); ++i) env.emplace_back(vars[i], values[i]);
  return env;
}

void require_covered(const Formula& f, std::span<const VarId> vars) {
  for (const auto& v : free_vars(f))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw EvalError("free variable " + v.name() + " of " + render(f) + " has no argument slot");
}

}  // namespace

Natural eval_term(const Term& t, const Assignment& a) {
  Env env;
  for (const auto& [v, val] : a) env.emplace_back(v, val);
  return Engine(Mode::Delta0, 0, {}).term(t, env);
}

bool eval_delta0(const Formula& f, const Assignment& a) {
  if (!is_delta0(f)) throw EvalError("formula is not Delta_0: " + render(f));
  Env env = make_env(f, a);
  return Engine(Mode::Delta0, 0, {}).formula(f, env) == Verdict3::True;
}

Verdict3 eval_budgeted(const Formula& f, const Assignment& a, const Natural& budget) {
  Env env = make_env(f, a);
  return Engine(Mode::Budgeted, budget, {}).formula(f, env);
}

void require_in_domain(std::span<const Natural> I, const Natural& domain) {
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] > domain)
      throw DomainError("I is not contained in [0," + domain.str() + "]: contains " + I[i].str());
    if (i > 0 && !(I[i - 1] < I[i])) throw DomainError("I must be strictly increasing");
  }
}

bool eval_over_expansion(const Formula& f, const Assignment& a, std::span<const Natural> I,
                         const Natural& domain) {
  require_in_domain(I, domain);
  Env env = make_env(f, a);
  return Engine(Mode::Expansion, domain, I).formula(f, env) == Verdict3::True;
}

ExpansionEvaluator::ExpansionEvaluator(Formula f, std::vector<VarId> vars, std::vector<Natural> I,
                                       Natural domain)
    : formula_(std::move(f)), vars_(std::move(vars)), I_(std::move(I)), domain_(std::move(domain)) {
  require_in_domain(I_, domain_);
  require_covered(formula_, vars_);
}

bool ExpansionEvaluator::operator()(std::span<const Natural> values) const {
  Env env = make_env(vars_, values);
  return Engine(Mode::Expansion, domain_, I_).formula(formula_, env) == Verdict3::True;
}

std::optional<Natural> ExpansionEvaluator::least_witness(std::span<const Natural> params,
                                                         const Natural& lo) const {
  if (vars_.empty()) throw EvalError("least_witness needs a witness variable slot");
  Env env = make_env(std::span(vars_).first(vars_.size() - 1), params);
  std::size_t slot = env.size();
  env.emplace_back(vars_.back(), Natural(0));
  Engine engine(Mode::Expansion, domain_, I_);
  for (Natural y = lo; y <= domain_; ++y) {
    env[slot].second = y;
    if (engine.formula(formula_, env) == Verdict3::True) return y;
  }
  return std::nullopt;
}

Delta0Evaluator::Delta0Evaluator(Formula f, std::vector<VarId> vars)
    : formula_(std::move(f)), vars_(std::move(vars)) {
  if (!is_delta0(formula_)) throw EvalError("formula is not Delta_0: " + render(formula_));
  require_covered(formula_, vars_);
}

bool Delta0Evaluator::operator()(std::span<const Natural> values) const {
  Env env = make_env(vars_, values);
  return Engine(Mode::Delta0, 0, {}).formula(formula_, env) == Verdict3::True;
}

}  // namespace indisc
