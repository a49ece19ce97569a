#pragma once

#include "indisc/natural.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace indisc {

/// Variables live in two disjoint namespaces. Ordinary variables are x1, x2, ...
/// with index 0 reserved for the distinguished variable `y`. Fresh variables
/// z1, z2, ... belong to the star transformation and never occur in user input.
enum class Namespace : std::uint8_t { Ordinary = 0, Fresh = 1 };

struct VarId {
  Namespace ns = Namespace::Ordinary;
  std::uint32_t index = 0;

  static constexpr VarId x(std::uint32_t i) { return {Namespace::Ordinary, i}; }
  static constexpr VarId y() { return {Namespace::Ordinary, 0}; }
  static constexpr VarId z(std::uint32_t i) { return {Namespace::Fresh, i}; }

  bool is_fresh() const { return ns == Namespace::Fresh; }
  std::string name() const;

  bool operator==(const VarId&) const = default;

  // Canonical order: x1 < x2 < ... < y < z1 < z2 < ...
  std::strong_ordering operator<=>(const VarId& o) const {
    if (auto c = ns <=> o.ns; c != 0) return c;
    return sort_key() <=> o.sort_key();
  }

 private:
  std::uint64_t sort_key() const {
    return (ns == Namespace::Ordinary && index == 0) ? std::uint64_t{1} << 40 : index;
  }
};

using VarSet = std::set<VarId>;

enum class Language { LA, LA_I };

class Term {
 public:
  enum class Kind : std::uint8_t { Zero, Var, Succ, Add, Mul };

  Term();  // the constant 0
  static Term zero() { return Term(); }
  static Term var(VarId v);
  static Term succ(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);

  Kind kind() const;
  const VarId& var() const;
  const Term& arg() const;  // Succ
  const Term& lhs() const;  // Add / Mul
  const Term& rhs() const;

  bool contains(const VarId& v) const;
  void collect_vars(VarSet& out) const;
  std::size_t size() const;

  bool operator==(const Term& o) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind : std::uint8_t {
    Eq, Lt, InI, Not, Or, And, Implies, Exists, Forall, BddExists, BddForall
  };

  static Formula eq(Term a, Term b);
  static Formula lt(Term a, Term b);
  static Formula in_i(Term t);
  static Formula negate(Formula f);
  static Formula disj(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(const Formula& a, const Formula& b);  // sugar: conj of two implications
  static Formula exists(VarId v, Formula body);
  static Formula forall(VarId v, Formula body);
  /// Throws FormulaError when `bound` mentions `v`.
  static Formula bdd_exists(VarId v, Term bound, Formula body);
  static Formula bdd_forall(VarId v, Term bound, Formula body);

  Kind kind() const;
  bool is_atomic() const;
  bool is_quantifier() const;
  bool is_bounded_quantifier() const;

  const Term& lhs() const;    // Eq / Lt
  const Term& rhs() const;
  const Term& term() const;   // InI
  const Formula& sub() const; // Not
  const Formula& left() const;
  const Formula& right() const;
  const VarId& var() const;   // quantifiers
  const Term& bound() const;  // bounded quantifiers
  const Formula& body() const;

  bool operator==(const Formula& o) const;

 private:
  struct Node;
  static std::shared_ptr<Node> make_node(Kind k);
  Formula() = default;  // only for Node's child slots
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

VarSet free_vars(const Formula& f);
VarSet free_vars(const Term& t);
/// Free variables in canonical order (the argument order of Form_n members).
std::vector<VarId> free_var_list(const Formula& f);
/// Every variable occurring in f, bound or free.
VarSet all_vars(const Formula& f);

bool is_delta0(const Formula& f);
bool mentions_i(const Formula& f);
bool mentions_fresh(const Formula& f);
/// Largest ordinary index occurring anywhere in f (0 when none).
std::uint32_t max_ordinary_index(const Formula& f);

/// Rewrites And/Implies/Forall and both bounded forms into Eq/Lt/InI/Not/Or/Exists.
Formula normalize_connectives(const Formula& f);
bool is_normalized(const Formula& f);

/// Maximum nesting depth of unbounded Exists nodes.
std::size_t exists_depth(const Formula& f);
std::size_t node_count(const Formula& f);

/// S^n(0).
Term numeral(const Natural& n);
/// A term of depth O(log n) with value n, built by binary Horner expansion over
/// S(S(0)). Used where S^n(0) would be too deep to handle (code guards).
Term compact_numeral(const Natural& n);

/// Simultaneous substitution of free variables by terms. The caller guarantees
/// the substituted terms contain no variable bound in f.
Formula substitute(const Formula& f, const std::map<VarId, Term>& sigma);
Term substitute(const Term& t, const std::map<VarId, Term>& sigma);
/// Renames every occurrence (free or bound) of the mapped variables.
Formula rename_all(const Formula& f, const std::map<VarId, VarId>& mapping);

}  // namespace indisc
