#include "indisc/indiscernibles.hpp"

#include "indisc/evaluator.hpp"
#include "indisc/parallel.hpp"
#include "indisc/syntax.hpp"

#include <algorithm>
#include <atomic>

namespace indisc {

std::string to_string(Guard g) { return g == Guard::Strict ? "strict" : "relaxed"; }

Guard parse_guard(std::string_view s) {
  if (s == "strict") return Guard::Strict;
  if (s == "relaxed") return Guard::Relaxed;
  throw DomainError("guard must be 'strict' or 'relaxed', got '" + std::string(s) + "'");
}

namespace {

class FreshVars {
 public:
  explicit FreshVars(const Formula& f) : next_(max_ordinary_index(f) + 1) {}
  FreshVars(const Formula& f, const Formula& g)
      : next_(std::max(max_ordinary_index(f), max_ordinary_index(g)) + 1) {}
  VarId next() { return VarId::x(next_++); }
  std::vector<VarId> block(std::size_t n) {
    std::vector<VarId> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
  }

 private:
  std::uint32_t next_;
};

std::vector<VarId> require_arity(const Formula& phi, std::size_t expected, const char* what) {
  if (mentions_i(phi)) throw FormulaError(std::string(what) + ": formula must be in pure arithmetic");
  auto vars = free_var_list(phi);
  if (vars.size() != expected)
    throw FormulaError(std::string(what) + ": arity mismatch, formula has " +
                       std::to_string(vars.size()) + " free variables, expected " +
                       std::to_string(expected));
  return vars;
}

Formula instantiate(const Formula& phi, const std::vector<VarId>& from, const std::vector<VarId>& to) {
  std::map<VarId, Term> sigma;
  for (std::size_t i = 0; i < from.size(); ++i) sigma.emplace(from[i], Term::var(to[i]));
  return substitute(phi, sigma);
}

Formula conj_all(std::vector<Formula> parts) {
  if (parts.empty()) return Formula::eq(Term::zero(), Term::zero());
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

std::vector<Formula> increasing(const std::vector<VarId>& vs) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    out.push_back(Formula::lt(Term::var(vs[i]), Term::var(vs[i + 1])));
  return out;
}

// forall v in I . body, innermost variable last.
Formula forall_in_i(const std::vector<VarId>& vs, Formula body) {
  for (std::size_t i = vs.size(); i-- > 0;)
    body = Formula::forall(vs[i], Formula::implies(Formula::in_i(Term::var(vs[i])), body));
  return body;
}

Formula forall_below(const std::vector<VarId>& vs, const VarId& bound, Formula body) {
  for (std::size_t i = vs.size(); i-- > 0;) body = Formula::bdd_forall(vs[i], Term::var(bound), body);
  return body;
}

Formula indis_core(const Formula& phi, std::size_t n, const std::optional<Natural>& code) {
  auto vars = require_arity(phi, n, "Indis");
  if (n == 0) throw FormulaError("Indis: arity must be at least 1");
  FreshVars fresh(phi);
  auto xs = fresh.block(n);
  auto ys = fresh.block(n);
  auto ante = increasing(xs);
  for (auto& f : increasing(ys)) ante.push_back(f);
  if (code) {
    Term c = compact_numeral(*code);
    ante.push_back(Formula::lt(c, Term::var(xs[0])));
    ante.push_back(Formula::lt(c, Term::var(ys[0])));
  }
  Formula body = Formula::iff(instantiate(phi, vars, xs), instantiate(phi, vars, ys));
  if (!ante.empty()) body = Formula::implies(conj_all(ante), body);
  auto all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  return forall_in_i(all, body);
}

// Enumerates increasing k-combinations of indices [0, n).
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Calls fn on every tuple in [0, bound)^n whose maximum is >= lo, in
// lexicographic order.
template <class Fn>
void for_each_tuple_band(std::size_t n, const Natural& lo, const Natural& bound, Fn&& fn) {
  std::vector<Natural> t(n, Natural(0));
  if (n == 0) {
    if (lo == 0) fn(t);
    return;
  }
  if (bound == 0) return;
  while (true) {
    if (*std::max_element(t.begin(), t.end()) >= lo) fn(t);
    std::size_t i = n;
    while (i > 0) {
      ++t[i - 1];
      if (t[i - 1] < bound) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace

Formula emit_indis_sentence(const Formula& phi, std::size_t n) { return indis_core(phi, n, std::nullopt); }

Formula emit_indis_circ_sentence(const Formula& phi, const GoedelCoding& coding) {
  return indis_core(phi, free_vars(phi).size(), coding.code(phi));
}

Formula emit_apart_sentence(const Formula& phi) {
  auto vars = free_var_list(phi);
  if (vars.size() < 2) throw FormulaError("Apart: arity must be at least 2");
  require_arity(phi, vars.size(), "Apart");
  FreshVars fresh(phi);
  VarId i = fresh.next();
  VarId j = fresh.next();
  auto xs = fresh.block(vars.size() - 1);
  VarId y = fresh.next();
  auto args = xs;
  args.push_back(y);
  Formula inst = instantiate(phi, vars, args);
  Formula body = Formula::implies(Formula::exists(y, inst), Formula::bdd_exists(y, Term::var(j), inst));
  body = forall_below(xs, i, body);
  body = Formula::implies(Formula::lt(Term::var(i), Term::var(j)), body);
  return forall_in_i({i, j}, body);
}

Formula emit_indis_plus_sentence(const Formula& phi, std::size_t n, std::size_t r) {
  if (r == 0) throw FormulaError("Indis+: r must be at least 1");
  auto vars = require_arity(phi, n + 1 + r, "Indis+");
  FreshVars fresh(phi);
  VarId i = fresh.next();
  auto js = fresh.block(r);
  auto ks = fresh.block(r);
  auto xs = fresh.block(n);
  auto args_j = xs;
  args_j.push_back(i);
  args_j.insert(args_j.end(), js.begin(), js.end());
  auto args_k = xs;
  args_k.push_back(i);
  args_k.insert(args_k.end(), ks.begin(), ks.end());
  Formula body = Formula::iff(instantiate(phi, vars, args_j), instantiate(phi, vars, args_k));
  body = forall_below(xs, i, body);
  auto ante = increasing(js);
  for (auto& f : increasing(ks)) ante.push_back(f);
  ante.push_back(Formula::lt(Term::var(i), Term::var(js[0])));
  ante.push_back(Formula::lt(Term::var(i), Term::var(ks[0])));
  body = Formula::implies(conj_all(ante), body);
  std::vector<VarId> all{i};
  all.insert(all.end(), js.begin(), js.end());
  all.insert(all.end(), ks.begin(), ks.end());
  return forall_in_i(all, body);
}

Formula emit_indis_theta_sentence(const Formula& phi, const Formula& theta) {
  auto vars = free_var_list(phi);
  if (vars.empty()) throw FormulaError("Indis(theta): arity must be at least 1");
  require_arity(phi, vars.size(), "Indis(theta)");
  auto tvars = require_arity(theta, 1, "theta");
  std::size_t n = vars.size();
  FreshVars fresh(phi, theta);
  auto xs = fresh.block(2 * n);
  std::vector<VarId> first(xs.begin(), xs.begin() + n), second(xs.begin() + n, xs.end());
  auto ante = increasing(first);
  for (auto& f : increasing(second)) ante.push_back(f);
  for (const auto& v : xs) ante.push_back(instantiate(theta, tvars, {v}));
  Formula body = Formula::implies(conj_all(ante),
                                  Formula::iff(instantiate(phi, vars, first), instantiate(phi, vars, second)));
  for (std::size_t k = xs.size(); k-- > 0;) body = Formula::forall(xs[k], body);
  return body;
}

bool check_scheme(const Formula& sentence, std::span<const Natural> I, const Natural& domain) {
  if (!free_vars(sentence).empty()) throw FormulaError("scheme check needs a closed sentence: " + render(sentence));
  return eval_over_expansion(sentence, {}, I, domain);
}

bool check_indis(const Formula& phi, std::span<const Natural> I, const Natural& domain,
                 const std::optional<Natural>& code_guard) {
  require_in_domain(I, domain);
  auto vars = free_var_list(phi);
  if (vars.empty()) return true;
  std::vector<Natural> pool;
  for (const auto& v : I)
    if (!code_guard || v > *code_guard) pool.push_back(v);
  auto combos = combinations(pool.size(), vars.size());
  if (combos.size() < 2) return true;
  ExpansionEvaluator eval(phi, vars, {}, domain);
  std::vector<char> truth(combos.size());
  parallel_for(combos.size(), [&](std::size_t c) {
    std::vector<Natural> args;
    for (auto idx : combos[c]) args.push_back(pool[idx]);
    truth[c] = eval(args);
  });
  return std::all_of(truth.begin(), truth.end(), [&](char t) { return t == truth[0]; });
}

bool check_apart(const Formula& phi, std::span<const Natural> I, const Natural& domain) {
  auto vars = free_var_list(phi);
  if (vars.size() < 2) throw FormulaError("Apart: arity must be at least 2");
  return check_apart(phi, vars, I, domain);
}

bool check_apart(const Formula& phi, const std::vector<VarId>& vars, std::span<const Natural> I,
                 const Natural& domain) {
  require_in_domain(I, domain);
  if (vars.empty()) throw FormulaError("Apart: a witness variable is required");
  if (mentions_i(phi)) throw FormulaError("Apart: formula must be in pure arithmetic");
  if (I.size() < 2) return true;
  const std::size_t n = vars.size() - 1;
  ExpansionEvaluator eval(phi, vars, {}, domain);
  // The binding constraint for a parameter tuple is the least i in I above all
  // its components, paired with the next element j.
  for (std::size_t s = 0; s + 1 < I.size(); ++s) {
    Natural lo = s == 0 ? Natural(0) : I[s - 1];
    const Natural& j = I[s + 1];
    std::vector<std::vector<Natural>> tuples;
    for_each_tuple_band(n, lo, I[s], [&](const std::vector<Natural>& t) { tuples.push_back(t); });
    std::atomic<bool> ok{true};
    parallel_for(tuples.size(), [&](std::size_t k) {
      if (!ok.load(std::memory_order_relaxed)) return;
      auto w = eval.least_witness(tuples[k]);
      if (w && *w >= j) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool check_indis_plus(const Formula& phi, std::size_t n, std::size_t r, std::span<const Natural> I,
                      const Natural& domain) {
  require_in_domain(I, domain);
  if (r == 0) throw FormulaError("Indis+: r must be at least 1");
  auto vars = require_arity(phi, n + 1 + r, "Indis+");
  ExpansionEvaluator eval(phi, vars, {}, domain);
  for (std::size_t p = 0; p < I.size(); ++p) {
    const Natural& pivot = I[p];
    std::span<const Natural> above = I.subspan(p + 1);
    auto combos = combinations(above.size(), r);
    if (combos.size() < 2) continue;
    std::vector<std::vector<Natural>> params;
    for_each_tuple_band(n, 0, pivot, [&](const std::vector<Natural>& t) { params.push_back(t); });
    if (params.empty()) continue;
    std::vector<ColoringKey> keys(combos.size());
    parallel_for(combos.size(), [&](std::size_t c) {
      ColoringKey key(params.size());
      std::vector<Natural> args(n + 1 + r);
      for (std::size_t q = 0; q < params.size(); ++q) {
        std::copy(params[q].begin(), params[q].end(), args.begin());
        args[n] = pivot;
        for (std::size_t t = 0; t < r; ++t) args[n + 1 + t] = above[combos[c][t]];
        key[q] = eval(args);
      }
      keys[c] = std::move(key);
    });
    for (const auto& k : keys)
      if (k != keys[0]) return false;
  }
  return true;
}

}  // namespace indisc
