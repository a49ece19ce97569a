#pragma once

#include "indisc/error.hpp"
#include "indisc/formula.hpp"
#include "indisc/goedel.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indisc {

/// Strict applies the code guard of procedure (P) and of Indis-circ verbatim;
/// Relaxed drops it, which is sound for standard formulas.
enum class Guard { Strict, Relaxed };

std::string to_string(Guard g);
Guard parse_guard(std::string_view s);

// ---------------------------------------------------------------------------
// Scheme sentences
//
// Argument order of a formula is the canonical order of its free variables
// (x1 < x2 < ... < y). Emitted sentences use fresh ordinary variables above
// every index occurring in the input and are closed L_A(I) sentences.

/// forall x1..xn in I, forall y1..yn in I:
///   (x1<..<xn /\ y1<..<yn) -> (phi(x) <-> phi(y)).  Requires phi in Form_n, n >= 1.
Formula emit_indis_sentence(const Formula& phi, std::size_t n);

/// As above with the extra antecedent code(phi) < x1 /\ code(phi) < y1.
Formula emit_indis_circ_sentence(const Formula& phi, const GoedelCoding& coding = default_coding());

/// forall i in I, forall j in I: i < j -> forall x1..xn < i (exists y phi -> exists y < j phi).
/// The witness variable is the last argument. Requires arity >= 2.
Formula emit_apart_sentence(const Formula& phi);

/// forall i in I, forall j-bar, k-bar in [I]^r: (i < j1 /\ i < k1) ->
///   forall x1..xn < i (phi(x, i, j-bar) <-> phi(x, i, k-bar)).  Requires phi in Form_{n+1+r}, r >= 1.
Formula emit_indis_plus_sentence(const Formula& phi, std::size_t n, std::size_t r);

/// The pure-arithmetic relativization of Indis_phi to the class defined by the
/// unary formula theta:  forall x1..x2n [(x1<..<xn /\ x_{n+1}<..<x_{2n} /\ theta(x_1) /\ ..)
///   -> (phi(x1..xn) <-> phi(x_{n+1}..x_{2n}))].
Formula emit_indis_theta_sentence(const Formula& phi, const Formula& theta);

/// Truth of a closed L_A(I) sentence in ([0,N], I).
bool check_scheme(const Formula& sentence, std::span<const Natural> I, const Natural& domain);

// ---------------------------------------------------------------------------
// Direct checkers (tuple loops; agree with check_scheme on the emitted sentences)

/// Every increasing arity-tuple from I has the same truth value. With
/// `code_guard`, only tuples whose first element exceeds it are compared.
bool check_indis(const Formula& phi, std::span<const Natural> I, const Natural& domain,
                 const std::optional<Natural>& code_guard = std::nullopt);
bool check_apart(const Formula& phi, std::span<const Natural> I, const Natural& domain);
/// Apartness with an explicit argument list whose last entry is the witness;
/// the list must cover the free variables. Zero parameters are allowed.
bool check_apart(const Formula& phi, const std::vector<VarId>& vars, std::span<const Natural> I,
                 const Natural& domain);
bool check_indis_plus(const Formula& phi, std::size_t n, std::size_t r, std::span<const Natural> I,
                      const Natural& domain);

// ---------------------------------------------------------------------------
// Ramsey thinning

/// Canonical truth pattern of a tuple; equal keys iff equal patterns.
using ColoringKey = std::vector<bool>;
/// Must be thread-safe: batches are colored in parallel.
using Coloring = std::function<ColoringKey(std::span<const Natural>)>;

class InsufficientRamseyRoom : public Error {
 public:
  InsufficientRamseyRoom(const std::string& message, std::vector<Natural> best)
      : Error("insufficient_ramsey_room", message), best_(std::move(best)) {}
  const std::vector<Natural>& best() const { return best_; }

 private:
  std::vector<Natural> best_;
};

class GuardUnreachable : public Error {
 public:
  explicit GuardUnreachable(const std::string& message) : Error("guard_unreachable", message) {}
};

/// A subset of `candidates` (sorted) all of whose increasing arity-tuples share
/// one ColoringKey, of size >= target. Arity 2 with at most 64 candidates is
/// solved exactly (maximum size, then least key, then lexicographically least);
/// otherwise the proof-following greedy thinning is used: take the least
/// candidate, keep the majority color class of tuples through it (ties: least
/// key), recurse, and finally keep the picks of one key: the earliest-starting
/// key with at least `target` picks, or the most frequent key when target is 0
/// or no key has enough.
/// Throws InsufficientRamseyRoom carrying the best set found.
std::vector<Natural> ramsey_monochromatic(std::span<const Natural> candidates, std::size_t arity,
                                          const Coloring& color, std::size_t target);

// ---------------------------------------------------------------------------
// Mining

struct SchemeCheck {
  std::string scheme;  // "indis", "indis_circ", "apart", "indis_plus"
  std::size_t formula = 0;
  bool pass = false;

  bool operator==(const SchemeCheck&) const = default;
};

struct MineOptions {
  Natural domain = 100;
  std::size_t size = 4;
  Guard guard = Guard::Relaxed;
  /// Diagonal thinning is applied at the first `param_bound` chain positions
  /// (0 means every position).
  std::size_t param_bound = 0;
  std::size_t plus_r = 1;
  /// [0,N] is used whole when N+1 <= dense_limit; otherwise the candidate pool
  /// is a geometric grid of at most pool_size points in [0,N].
  std::size_t dense_limit = 1024;
  std::size_t pool_size = 128;
};

struct IndiscernibleWitness {
  std::vector<Natural> I;
  std::vector<Formula> family;
  Natural domain = 0;
  Guard guard = Guard::Relaxed;
  bool diagonal = false;
  std::size_t param_bound = 0;
  std::size_t plus_r = 1;
  std::vector<SchemeCheck> checks;
  std::vector<std::size_t> h_sizes;  // construction trace
  std::vector<Natural> codes;        // code of each family member

  /// Result of a recorded check, if that check was run.
  std::optional<bool> passed(std::string_view scheme, std::size_t formula) const;
  /// Finite stand-in for unboundedness: max(I) >= 0.9 N.
  bool reaches_top_decile() const;
};

std::vector<Natural> candidate_pool(const MineOptions& options);

/// Thins the pool by every family member in order (H0 ⊇ H1 ⊇ ...), then
/// extracts i_0 = least element >= guard_0 and i_{s+1} = least element above
/// max(i_s, guard_s), where guard_s is the code of the s-th member under Strict
/// and 0 under Relaxed. The result always passes the indiscernibility checks.
IndiscernibleWitness mine_indiscernibles(std::span<const Formula> family, const MineOptions& options);

/// As mine_indiscernibles, and additionally thins above each chain element by
/// the diagonal coloring f(j) = {x < i : phi(x, i, j)} and picks each next
/// element above every witness needed for apartness. Apartness and diagonal
/// indiscernibility are reported per formula, not assumed.
IndiscernibleWitness mine_diagonal(std::span<const Formula> family, const MineOptions& options);

/// Recomputes every scheme check applicable to the witness.
std::vector<SchemeCheck> recheck(const IndiscernibleWitness& w);

}  // namespace indisc
