#pragma once

#include "indisc/formula.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indisc {

using Assignment = std::map<VarId, Natural>;

/// Kleene truth values ordered False < Unknown < True.
enum class Verdict3 { False = 0, Unknown = 1, True = 2 };

std::string to_string(Verdict3 v);
inline Verdict3 to_verdict(bool b) { return b ? Verdict3::True : Verdict3::False; }

/// Value of t in N. Throws EvalError on an unbound variable.
Natural eval_term(const Term& t, const Assignment& a);

/// Exact truth of a Delta_0 formula of pure arithmetic. Throws EvalError for
/// unbounded quantifiers, the I predicate, or unbound free variables.
bool eval_delta0(const Formula& f, const Assignment& a);

/// Three-valued truth where unbounded quantifiers search [0, budget]. An
/// unbounded exists with no witness up to the budget is Unknown, never False,
/// so True/False verdicts are always correct in N.
Verdict3 eval_budgeted(const Formula& f, const Assignment& a, const Natural& budget);

/// Truth in the finite structure ([0,N], +, *, S, <, 0, I). Unbounded
/// quantifiers range over [0,N]; a bounded quantifier ranges over values below
/// min(bound, N+1). Term values are exact. Throws DomainError unless I is a
/// strictly increasing subset of [0,N].
bool eval_over_expansion(const Formula& f, const Assignment& a, std::span<const Natural> I,
                         const Natural& domain);

/// Validates that I is strictly increasing and contained in [0,N].
void require_in_domain(std::span<const Natural> I, const Natural& domain);

/// Repeated evaluation of one formula over ([0,N], I) at many argument tuples.
/// Argument i is bound to vars[i]. Thread-safe; each call is independent.
class ExpansionEvaluator {
 public:
  ExpansionEvaluator(Formula f, std::vector<VarId> vars, std::vector<Natural> I, Natural domain);

  bool operator()(std::span<const Natural> values) const;
  /// Least y in [lo, N] such that f holds when the leading vars are bound to
  /// `params` and the last var is bound to y.
  std::optional<Natural> least_witness(std::span<const Natural> params, const Natural& lo = 0) const;

  const Formula& formula() const { return formula_; }
  const Natural& domain() const { return domain_; }

 private:
  Formula formula_;
  std::vector<VarId> vars_;
  std::vector<Natural> I_;
  Natural domain_;
};

/// Repeated Delta_0 evaluation with positional arguments.
class Delta0Evaluator {
 public:
  Delta0Evaluator(Formula f, std::vector<VarId> vars);
  bool operator()(std::span<const Natural> values) const;

 private:
  Formula formula_;
  std::vector<VarId> vars_;
};

}  // namespace indisc
