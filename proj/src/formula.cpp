#include "indisc/formula.hpp"

#include "indisc/error.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace indisc {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty natural");
  Natural n = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a natural: " + std::string(text));
    n = n * 10 + (c - '0');
  }
  return n;
}

std::string VarId::name() const {
  if (ns == Namespace::Fresh) return "z" + std::to_string(index);
  if (index == 0) return "y";
  return "x" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  Kind kind = Kind::Zero;
  VarId var{};
  Term a;
  Term b;
  std::size_t size = 1;
};

Term::Term() : node_(nullptr) {}

Term Term::var(VarId v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = v;
  return Term(std::move(n));
}

Term Term::succ(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Succ;
  n->size = 1 + t.size();
  n->a = std::move(t);
  return Term(std::move(n));
}

Term Term::add(Term x, Term y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->size = 1 + x.size() + y.size();
  n->a = std::move(x);
  n->b = std::move(y);
  return Term(std::move(n));
}

Term Term::mul(Term x, Term y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->size = 1 + x.size() + y.size();
  n->a = std::move(x);
  n->b = std::move(y);
  return Term(std::move(n));
}

// A null node is the constant 0; this keeps default-constructed Terms cheap.
Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::Zero; }
const VarId& Term::var() const { assert(kind() == Kind::Var); return node_->var; }
const Term& Term::arg() const { assert(kind() == Kind::Succ); return node_->a; }
const Term& Term::lhs() const { return node_->a; }
const Term& Term::rhs() const { return node_->b; }
std::size_t Term::size() const { return node_ ? node_->size : 1; }

bool Term::contains(const VarId& v) const {
  switch (kind()) {
    case Kind::Zero: return false;
    case Kind::Var: return node_->var == v;
    case Kind::Succ: return node_->a.contains(v);
    default: return node_->a.contains(v) || node_->b.contains(v);
  }
}

void Term::collect_vars(VarSet& out) const {
  const Term* t = this;
  while (t->kind() == Kind::Succ) t = &t->arg();
  switch (t->kind()) {
    case Kind::Zero: return;
    case Kind::Var: out.insert(t->var()); return;
    default:
      t->lhs().collect_vars(out);
      t->rhs().collect_vars(out);
  }
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Zero: return true;
    case Kind::Var: return var() == o.var();
    case Kind::Succ: return arg() == o.arg();
    default: return lhs() == o.lhs() && rhs() == o.rhs();
  }
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind = Kind::Eq;
  VarId var{};
  Term t1;
  Term t2;
  Formula f1;
  Formula f2;
};

std::shared_ptr<Formula::Node> Formula::make_node(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

Formula Formula::eq(Term a, Term b) {
  auto n = make_node(Kind::Eq);
  n->t1 = std::move(a);
  n->t2 = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::lt(Term a, Term b) {
  auto n = make_node(Kind::Lt);
  n->t1 = std::move(a);
  n->t2 = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::in_i(Term t) {
  auto n = make_node(Kind::InI);
  n->t1 = std::move(t);
  return Formula(std::move(n));
}

Formula Formula::negate(Formula f) {
  auto n = make_node(Kind::Not);
  n->f1 = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = make_node(Kind::Or);
  n->f1 = std::move(a);
  n->f2 = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = make_node(Kind::And);
  n->f1 = std::move(a);
  n->f2 = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula a, Formula b) {
  auto n = make_node(Kind::Implies);
  n->f1 = std::move(a);
  n->f2 = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::iff(const Formula& a, const Formula& b) {
  return conj(implies(a, b), implies(b, a));
}

Formula Formula::exists(VarId v, Formula body) {
  auto n = make_node(Kind::Exists);
  n->var = v;
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::forall(VarId v, Formula body) {
  auto n = make_node(Kind::Forall);
  n->var = v;
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::bdd_exists(VarId v, Term bound, Formula body) {
  if (bound.contains(v))
    throw FormulaError("bound term of a bounded quantifier mentions its variable " + v.name());
  auto n = make_node(Kind::BddExists);
  n->var = v;
  n->t1 = std::move(bound);
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::bdd_forall(VarId v, Term bound, Formula body) {
  if (bound.contains(v))
    throw FormulaError("bound term of a bounded quantifier mentions its variable " + v.name());
  auto n = make_node(Kind::BddForall);
  n->var = v;
  n->t1 = std::move(bound);
  n->f1 = std::move(body);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_atomic() const {
  auto k = kind();
  return k == Kind::Eq || k == Kind::Lt || k == Kind::InI;
}

bool Formula::is_quantifier() const {
  auto k = kind();
  return k == Kind::Exists || k == Kind::Forall || k == Kind::BddExists || k == Kind::BddForall;
}

bool Formula::is_bounded_quantifier() const {
  return kind() == Kind::BddExists || kind() == Kind::BddForall;
}

const Term& Formula::lhs() const { return node_->t1; }
const Term& Formula::rhs() const { return node_->t2; }
const Term& Formula::term() const { return node_->t1; }
const Term& Formula::bound() const { return node_->t1; }
const VarId& Formula::var() const { return node_->var; }

const Formula& Formula::sub() const { return node_->f1; }
const Formula& Formula::left() const { return node_->f1; }
const Formula& Formula::right() const { return node_->f2; }
const Formula& Formula::body() const { return node_->f1; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Eq:
    case Kind::Lt: return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::InI: return term() == o.term();
    case Kind::Not: return sub() == o.sub();
    case Kind::Or:
    case Kind::And:
    case Kind::Implies: return left() == o.left() && right() == o.right();
    case Kind::Exists:
    case Kind::Forall: return var() == o.var() && body() == o.body();
    case Kind::BddExists:
    case Kind::BddForall:
      return var() == o.var() && bound() == o.bound() && body() == o.body();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Queries

VarSet free_vars(const Term& t) {
  VarSet out;
  t.collect_vars(out);
  return out;
}

namespace {

void collect_free(const Formula& f, VarSet& bound, VarSet& out) {
  auto add_term = [&](const Term& t) {
    VarSet vs;
    t.collect_vars(vs);
    for (const auto& v : vs)
      if (!bound.contains(v)) out.insert(v);
  };
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
      add_term(f.lhs());
      add_term(f.rhs());
      return;
    case Formula::Kind::InI: add_term(f.term()); return;
    case Formula::Kind::Not: collect_free(f.sub(), bound, out); return;
    case Formula::Kind::Or:
    case Formula::Kind::And:
    case Formula::Kind::Implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Formula::Kind::BddExists:
    case Formula::Kind::BddForall:
      add_term(f.bound());
      [[fallthrough]];
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool inserted = bound.insert(f.var()).second;
      collect_free(f.body(), bound, out);
      if (inserted) bound.erase(f.var());
      return;
    }
  }
}

template <class Fn>
bool any_node(const Formula& f, const Fn& pred) {
  if (pred(f)) return true;
  switch (f.kind()) {
    case Formula::Kind::Not: return any_node(f.sub(), pred);
    case Formula::Kind::Or:
    case Formula::Kind::And:
    case Formula::Kind::Implies: return any_node(f.left(), pred) || any_node(f.right(), pred);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
    case Formula::Kind::BddExists:
    case Formula::Kind::BddForall: return any_node(f.body(), pred);
    default: return false;
  }
}

}  // namespace

VarSet free_vars(const Formula& f) {
  VarSet bound, out;
  collect_free(f, bound, out);
  return out;
}

std::vector<VarId> free_var_list(const Formula& f) {
  auto s = free_vars(f);
  return {s.begin(), s.end()};
}

VarSet all_vars(const Formula& f) {
  VarSet out;
  any_node(f, [&](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::Eq:
      case Formula::Kind::Lt:
        g.lhs().collect_vars(out);
        g.rhs().collect_vars(out);
        break;
      case Formula::Kind::InI: g.term().collect_vars(out); break;
      case Formula::Kind::BddExists:
      case Formula::Kind::BddForall:
        g.bound().collect_vars(out);
        out.insert(g.var());
        break;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: out.insert(g.var()); break;
      default: break;
    }
    return false;
  });
  return out;
}

bool is_delta0(const Formula& f) {
  return !any_node(f, [](const Formula& g) {
    return g.kind() == Formula::Kind::Exists || g.kind() == Formula::Kind::Forall;
  });
}

bool mentions_i(const Formula& f) {
  return any_node(f, [](const Formula& g) { return g.kind() == Formula::Kind::InI; });
}

bool mentions_fresh(const Formula& f) {
  for (const auto& v : all_vars(f))
    if (v.is_fresh()) return true;
  return false;
}

std::uint32_t max_ordinary_index(const Formula& f) {
  std::uint32_t m = 0;
  for (const auto& v : all_vars(f))
    if (!v.is_fresh()) m = std::max(m, v.index);
  return m;
}

bool is_normalized(const Formula& f) {
  return !any_node(f, [](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::And:
      case Formula::Kind::Implies:
      case Formula::Kind::Forall:
      case Formula::Kind::BddExists:
      case Formula::Kind::BddForall: return true;
      default: return false;
    }
  });
}

Formula normalize_connectives(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Lt:
    case K::InI: return f;
    case K::Not: return Formula::negate(normalize_connectives(f.sub()));
    case K::Or: return Formula::disj(normalize_connectives(f.left()), normalize_connectives(f.right()));
    case K::And:
      return Formula::negate(Formula::disj(Formula::negate(normalize_connectives(f.left())),
                                           Formula::negate(normalize_connectives(f.right()))));
    case K::Implies:
      return Formula::disj(Formula::negate(normalize_connectives(f.left())),
                           normalize_connectives(f.right()));
    case K::Exists: return Formula::exists(f.var(), normalize_connectives(f.body()));
    case K::Forall:
      return Formula::negate(
          Formula::exists(f.var(), Formula::negate(normalize_connectives(f.body()))));
    case K::BddExists: {
      // exists v (v < t /\ body)
      auto guard = Formula::lt(Term::var(f.var()), f.bound());
      auto conj = Formula::negate(Formula::disj(Formula::negate(guard),
                                                Formula::negate(normalize_connectives(f.body()))));
      return Formula::exists(f.var(), conj);
    }
    case K::BddForall: {
      // ~ exists v (v < t /\ ~body)
      auto guard = Formula::lt(Term::var(f.var()), f.bound());
      auto conj = Formula::negate(Formula::disj(Formula::negate(guard),
                                                normalize_connectives(f.body())));
      return Formula::negate(Formula::exists(f.var(), conj));
    }
  }
  return f;
}

std::size_t exists_depth(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return exists_depth(f.sub());
    case K::Or:
    case K::And:
    case K::Implies: return std::max(exists_depth(f.left()), exists_depth(f.right()));
    case K::Exists: return 1 + exists_depth(f.body());
    case K::Forall:
    case K::BddExists:
    case K::BddForall: return exists_depth(f.body());
    default: return 0;
  }
}

std::size_t node_count(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Lt: return 1 + f.lhs().size() + f.rhs().size();
    case K::InI: return 1 + f.term().size();
    case K::Not: return 1 + node_count(f.sub());
    case K::Or:
    case K::And:
    case K::Implies: return 1 + node_count(f.left()) + node_count(f.right());
    case K::BddExists:
    case K::BddForall: return 2 + f.bound().size() + node_count(f.body());
    default: return 2 + node_count(f.body());
  }
}

Term numeral(const Natural& n) {
  Term t;
  for (Natural i = 0; i < n; ++i) t = Term::succ(std::move(t));
  return t;
}

Term compact_numeral(const Natural& n) {
  if (n < 4) return numeral(n);
  Term two = Term::succ(Term::succ(Term::zero()));
  Term half = compact_numeral(n / 2);
  Term doubled = Term::mul(two, std::move(half));
  if (n % 2 == 1) return Term::succ(std::move(doubled));
  return doubled;
}

Term substitute(const Term& t, const std::map<VarId, Term>& sigma) {
  switch (t.kind()) {
    case Term::Kind::Zero: return t;
    case Term::Kind::Var: {
      auto it = sigma.find(t.var());
      return it == sigma.end() ? t : it->second;
    }
    case Term::Kind::Succ: return Term::succ(substitute(t.arg(), sigma));
    case Term::Kind::Add: return Term::add(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
    case Term::Kind::Mul: return Term::mul(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
  }
  return t;
}

Formula substitute(const Formula& f, const std::map<VarId, Term>& sigma) {
  using K = Formula::Kind;
  if (sigma.empty()) return f;
  switch (f.kind()) {
    case K::Eq: return Formula::eq(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case K::Lt: return Formula::lt(substitute(f.lhs(), sigma), substitute(f.rhs(), sigma));
    case K::InI: return Formula::in_i(substitute(f.term(), sigma));
    case K::Not: return Formula::negate(substitute(f.sub(), sigma));
    case K::Or: return Formula::disj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case K::And: return Formula::conj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case K::Implies:
      return Formula::implies(substitute(f.left(), sigma), substitute(f.right(), sigma));
    default: break;
  }
  // Quantifier: the bound variable shadows any mapping for it.
  auto inner = sigma;
  inner.erase(f.var());
  switch (f.kind()) {
    case K::Exists: return Formula::exists(f.var(), substitute(f.body(), inner));
    case K::Forall: return Formula::forall(f.var(), substitute(f.body(), inner));
    case K::BddExists:
      return Formula::bdd_exists(f.var(), substitute(f.bound(), sigma), substitute(f.body(), inner));
    case K::BddForall:
      return Formula::bdd_forall(f.var(), substitute(f.bound(), sigma), substitute(f.body(), inner));
    default: return f;
  }
}

Formula rename_all(const Formula& f, const std::map<VarId, VarId>& mapping) {
  using K = Formula::Kind;
  std::map<VarId, Term> terms;
  for (const auto& [from, to] : mapping) terms.emplace(from, Term::var(to));
  auto rv = [&](const VarId& v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  switch (f.kind()) {
    case K::Eq: return Formula::eq(substitute(f.lhs(), terms), substitute(f.rhs(), terms));
    case K::Lt: return Formula::lt(substitute(f.lhs(), terms), substitute(f.rhs(), terms));
    case K::InI: return Formula::in_i(substitute(f.term(), terms));
    case K::Not: return Formula::negate(rename_all(f.sub(), mapping));
    case K::Or: return Formula::disj(rename_all(f.left(), mapping), rename_all(f.right(), mapping));
    case K::And: return Formula::conj(rename_all(f.left(), mapping), rename_all(f.right(), mapping));
    case K::Implies:
      return Formula::implies(rename_all(f.left(), mapping), rename_all(f.right(), mapping));
    case K::Exists: return Formula::exists(rv(f.var()), rename_all(f.body(), mapping));
    case K::Forall: return Formula::forall(rv(f.var()), rename_all(f.body(), mapping));
    case K::BddExists:
      return Formula::bdd_exists(rv(f.var()), substitute(f.bound(), terms),
                                 rename_all(f.body(), mapping));
    case K::BddForall:
      return Formula::bdd_forall(rv(f.var()), substitute(f.bound(), terms),
                                 rename_all(f.body(), mapping));
  }
  return f;
}

}  // namespace indisc
