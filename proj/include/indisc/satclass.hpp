#pragma once

#include "indisc/evaluator.hpp"
#include "indisc/indiscernibles.hpp"
#include "indisc/star.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indisc {

enum class StarVariant { Clause, Prenex };

struct SatOptions {
  Guard guard = Guard::Relaxed;
  StarVariant variant = StarVariant::Clause;
  const GoedelCoding* coding = &default_coding();
};

/// Outcome of procedure (P) for one (phi, a).
struct SatVerdict {
  bool member = false;
  Natural j = 0;
  std::vector<Natural> iblock;  // the k elements of I right above j
  StarResult star_used;
};

/// Raised when I has no element above the arguments (and the code, under
/// Strict) or too few elements above j for the z-block.
class IExhausted : public Error {
 public:
  explicit IExhausted(const std::string& message) : Error("i_exhausted", message) {}
};

/// sigma(<phi, a>): normalize, star, choose j = least element of I above every
/// argument (and above code(phi) under Strict), bind z_s to the s-th element
/// of I above j, and evaluate exactly. `a` must bind every free variable;
/// only the free variables' values influence j.
SatVerdict sigma_membership(const Formula& phi, const Assignment& a, std::span<const Natural> I,
                            const SatOptions& options = {});
/// Positional form: args bind the free variables in canonical order.
SatVerdict sigma_membership(const Formula& phi, std::span<const Natural> args, std::span<const Natural> I,
                            const SatOptions& options = {});

/// Positional binding of the free variables of phi (canonical order).
Assignment bind_args(const Formula& phi, std::span<const Natural> args);

/// Memoized apartness of the existential matrices of formulas, relative to a
/// fixed (I, N). A formula is apart when every unbounded existential
/// subformula exists v . psi of its normal form passes check_apart with v as
/// witness. Thread-safe.
class ApartnessOracle {
 public:
  ApartnessOracle(std::vector<Natural> I, Natural domain) : I_(std::move(I)), domain_(std::move(domain)) {}
  bool formula_apart(const Formula& phi);
  bool matrix_apart(const Formula& psi, const VarId& witness);

 private:
  std::vector<Natural> I_;
  Natural domain_;
  std::mutex mutex_;
  std::map<std::string, bool> cache_;
};

enum class NablaOutcome { Agree, Disagree, Undetermined };
std::string to_string(NablaOutcome o);

struct NablaResult {
  NablaOutcome outcome = NablaOutcome::Undetermined;
  SatVerdict sigma;
  Verdict3 direct = Verdict3::Unknown;
  /// Apartness of the formula's existential matrices; computed on Disagree
  /// (always attached to a disagreement) and otherwise only if requested.
  std::optional<bool> apart;
};

/// Compares sigma_membership with eval_budgeted(phi, a, budget). Apartness is
/// judged over [0, domain]; a private oracle is used when none is supplied.
NablaResult verify_nabla(const Formula& phi, std::span<const Natural> args, std::span<const Natural> I,
                         const Natural& domain, const Natural& budget, const SatOptions& options = {},
                         ApartnessOracle* apartness = nullptr, bool always_report_apartness = false);

struct CorpusItem {
  Formula phi;
  std::vector<Natural> args;
};

struct NablaReport {
  std::vector<NablaResult> items;
  std::size_t agree = 0, disagree = 0, undetermined = 0, skipped = 0;
  std::vector<std::string> skip_reasons;  // per item, empty when evaluated
};

/// verify_nabla over a corpus; items whose (P) cannot run are counted as skipped.
NablaReport nabla_audit(std::span<const CorpusItem> corpus, std::span<const Natural> I, const Natural& domain,
                        const Natural& budget, const SatOptions& options = {});

struct ClauseStats {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t same_j = 0;            // all sides chose the same j
  std::size_t same_j_passed = 0;
  std::size_t apart_checked = 0;     // existential: matrix passes check_apart
  std::size_t apart_passed = 0;
  std::vector<std::string> failures;  // rendered (formula, args) of failing instances
};

struct TarskiReport {
  ClauseStats negation, disjunction, existential;
  std::size_t instances = 0;  // size of the audited closure
  std::size_t skipped = 0;    // instances where (P) could not run
};

/// Checks the Tarski conditions for S(x) := sigma_membership(x) on the corpus
/// and its closure under immediate subformulas. The existential clause is
///   S(exists v psi, a) <-> exists b < i1 . S(psi, a b)
/// where i1 is the first element of I above the (P)-guard j of (exists v psi, a);
/// the closure adds psi at (a, b*) with b* the least such b, else 0.
TarskiReport tarski_audit(std::span<const CorpusItem> corpus, std::span<const Natural> I, const Natural& domain,
                          const SatOptions& options = {});

struct CofinalReport {
  std::size_t tail_start = 0;
  std::size_t identical = 0, different = 0, skipped = 0;
  std::vector<std::size_t> differing_items;
};

/// Compares sigma_membership under I and under the tail I[tail_start..].
/// Throws DomainError if the tail has fewer than 2 elements.
CofinalReport cofinal_stability_audit(std::span<const CorpusItem> corpus, std::span<const Natural> I,
                                      std::size_t tail_start, const SatOptions& options = {});

struct DefinableClassReport {
  std::vector<Natural> members;  // I_theta
  bool top_decile = false;       // U-analogue: max(I_theta) >= 0.9 N
  std::vector<bool> indis;       // H-analogue, per family member
};

/// I_theta = {m <= N : theta(m)} and Indis_phi over I_theta for each phi.
DefinableClassReport definable_class_check(const Formula& theta, std::span<const Formula> family,
                                           const Natural& domain);

}  // namespace indisc
