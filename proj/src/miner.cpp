#include "indisc/indiscernibles.hpp"

#include "indisc/evaluator.hpp"
#include "indisc/parallel.hpp"
#include "indisc/syntax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace indisc {

std::optional<bool> IndiscernibleWitness::passed(std::string_view scheme, std::size_t formula) const {
  for (const auto& c : checks)
    if (c.scheme == scheme && c.formula == formula) return c.pass;
  return std::nullopt;
}

bool IndiscernibleWitness::reaches_top_decile() const {
  return !I.empty() && I.back() * 10 >= domain * 9;
}

std::vector<Natural> candidate_pool(const MineOptions& options) {
  const Natural& n = options.domain;
  std::vector<Natural> pool;
  if (n + 1 <= options.dense_limit) {
    for (Natural v = 0; v <= n; ++v) pool.push_back(v);
    return pool;
  }
  if (options.pool_size < 2) throw DomainError("pool size must be at least 2");
  // Geometric grid 0, 1, ..., N: dense near 0, where small elements are
  // needed for the chain, and sparse near N.
  const long double log_n = std::log(n.convert_to<long double>());
  pool.push_back(0);
  for (std::size_t t = 0; t < options.pool_size - 1; ++t) {
    long double v = std::floor(std::exp(log_n * static_cast<long double>(t) /
                                         static_cast<long double>(options.pool_size - 2)));
    Natural p(v);
    if (p > n) p = n;
    if (p > pool.back()) pool.push_back(p);
  }
  if (pool.back() != n) pool.push_back(n);
  return pool;
}

namespace {

struct Member {
  Formula phi;
  std::vector<VarId> vars;
  ExpansionEvaluator eval;
};

std::vector<Member> prepare(std::span<const Formula> family, const MineOptions& options) {
  if (family.empty()) throw DomainError("family is empty");
  if (options.size < 1) throw DomainError("size must be at least 1");
  std::vector<Member> out;
  for (const auto& phi : family) {
    if (mentions_i(phi)) throw FormulaError("family formulas must be in pure arithmetic: " + render(phi));
    auto vars = free_var_list(phi);
    out.push_back({phi, vars, ExpansionEvaluator(phi, vars, {}, options.domain)});
  }
  return out;
}

IndiscernibleWitness start_witness(std::span<const Formula> family, const MineOptions& options,
                                   bool diagonal) {
  IndiscernibleWitness w;
  w.family.assign(family.begin(), family.end());
  w.domain = options.domain;
  w.guard = options.guard;
  w.diagonal = diagonal;
  w.param_bound = options.param_bound == 0 ? options.size : options.param_bound;
  w.plus_r = options.plus_r;
  for (const auto& phi : family) w.codes.push_back(default_coding().code(phi));
  if (options.guard == Guard::Strict)
    for (std::size_t t = 0; t < w.codes.size(); ++t)
      if (w.codes[t] >= options.domain)
        throw GuardUnreachable("code of family formula " + std::to_string(t) + " (" + to_string(w.codes[t]) +
                               ") is not below N = " + to_string(options.domain) + "; use --guard relaxed");
  return w;
}

Natural guard_at(const IndiscernibleWitness& w, std::size_t s) {
  if (w.guard == Guard::Strict && s < w.codes.size()) return w.codes[s];
  return 0;
}

// Thins H by each member in turn (H0 ⊇ H1 ⊇ ...).
std::vector<Natural> thin_family(std::vector<Natural> H, const std::vector<Member>& members,
                                 IndiscernibleWitness& w, std::size_t room) {
  for (const auto& m : members) {
    if (!m.vars.empty()) {
      const ExpansionEvaluator& eval = m.eval;
      Coloring color = [&eval](std::span<const Natural> t) { return ColoringKey{eval(t)}; };
      H = ramsey_monochromatic(H, m.vars.size(), color, room);
    }
    w.h_sizes.push_back(H.size());
  }
  return H;
}

const Natural* least_above(const std::vector<Natural>& H, const Natural& bound, bool inclusive) {
  auto it = inclusive ? std::lower_bound(H.begin(), H.end(), bound) : std::upper_bound(H.begin(), H.end(), bound);
  return it == H.end() ? nullptr : &*it;
}

void finish(IndiscernibleWitness& w) {
  w.checks = recheck(w);
  for (const auto& c : w.checks)
    if ((c.scheme == "indis" || c.scheme == "indis_circ") && !c.pass)
      throw std::logic_error("mined set failed " + c.scheme + " for family formula " + std::to_string(c.formula));
}

// Running maximum, over parameter tuples below i, of the least witness of phi.
class WitnessProfile {
 public:
  explicit WitnessProfile(const Member& m) : m_(m), n_(m.vars.size() - 1) {}

  const Natural& advance_to(const Natural& i) {
    if (i <= done_) return max_;
    std::vector<std::vector<Natural>> tuples;
    enumerate(done_, i, tuples);
    std::vector<std::optional<Natural>> found(tuples.size());
    parallel_for(tuples.size(), [&](std::size_t k) { found[k] = m_.eval.least_witness(tuples[k]); });
    for (const auto& f : found)
      if (f && *f > max_) max_ = *f;
    done_ = i;
    return max_;
  }

 private:
  // Tuples in [0, hi)^n whose maximum is >= lo.
  void enumerate(const Natural& lo, const Natural& hi, std::vector<std::vector<Natural>>& out) const {
    std::vector<Natural> t(n_, Natural(0));
    if (n_ == 0) {
      if (lo == 0) out.push_back(t);
      return;
    }
    while (true) {
      if (*std::max_element(t.begin(), t.end()) >= lo) out.push_back(t);
      std::size_t k = n_;
      while (k > 0) {
        ++t[k - 1];
        if (t[k - 1] < hi) break;
        t[k - 1] = 0;
        --k;
      }
      if (k == 0) return;
    }
  }

  const Member& m_;
  std::size_t n_;
  Natural done_ = 0;
  Natural max_ = 0;
};

std::vector<std::vector<Natural>> tuples_below(std::size_t n, const Natural& bound) {
  std::vector<std::vector<Natural>> out;
  std::vector<Natural> t(n, Natural(0));
  if (n == 0) return {t};
  if (bound == 0) return out;
  while (true) {
    out.push_back(t);
    std::size_t k = n;
    while (k > 0) {
      ++t[k - 1];
      if (t[k - 1] < bound) break;
      t[k - 1] = 0;
      --k;
    }
    if (k == 0) return out;
  }
}

}  // namespace

IndiscernibleWitness mine_indiscernibles(std::span<const Formula> family, const MineOptions& options) {
  auto members = prepare(family, options);
  IndiscernibleWitness w = start_witness(family, options, false);
  std::vector<Natural> H = thin_family(candidate_pool(options), members, w, options.size);

  const Natural* cur = least_above(H, guard_at(w, 0), true);
  for (std::size_t s = 0; cur && w.I.size() < options.size; ++s) {
    w.I.push_back(*cur);
    if (w.I.size() < options.size) cur = least_above(H, std::max(*cur, guard_at(w, s)), false);
  }
  if (w.I.size() < options.size)
    throw InsufficientRamseyRoom("only " + std::to_string(w.I.size()) + " of " + std::to_string(options.size) +
                                     " elements could be extracted from a homogeneous set of size " +
                                     std::to_string(H.size()),
                                 w.I);
  finish(w);
  return w;
}

IndiscernibleWitness mine_diagonal(std::span<const Formula> family, const MineOptions& options) {
  if (options.plus_r < 1) throw DomainError("r must be at least 1");
  auto members = prepare(family, options);
  IndiscernibleWitness w = start_witness(family, options, true);
  std::vector<Natural> H = thin_family(candidate_pool(options), members, w, options.size);

  std::vector<WitnessProfile> profiles;
  for (const auto& m : members)
    if (m.vars.size() >= 2) profiles.emplace_back(m);

  const std::size_t r = options.plus_r;
  const Natural* pick = least_above(H, guard_at(w, 0), true);
  if (!pick) throw InsufficientRamseyRoom("no element of the homogeneous set is above the first guard", {});
  Natural cur = *pick;
  for (std::size_t s = 0;; ++s) {
    w.I.push_back(cur);
    if (w.I.size() == options.size) break;

    if (s < w.param_bound) {
      auto split = std::upper_bound(H.begin(), H.end(), cur);
      std::vector<Natural> above(split, H.end());
      for (const auto& m : members) {
        if (m.vars.size() < 1 + r) continue;
        const std::size_t n = m.vars.size() - 1 - r;
        auto params = tuples_below(n, cur);
        const ExpansionEvaluator& eval = m.eval;
        const Natural pivot = cur;
        Coloring color = [&, pivot, n](std::span<const Natural> js) {
          ColoringKey key(params.size());
          std::vector<Natural> args(n + 1 + r);
          for (std::size_t q = 0; q < params.size(); ++q) {
            std::copy(params[q].begin(), params[q].end(), args.begin());
            args[n] = pivot;
            std::copy(js.begin(), js.end(), args.begin() + static_cast<std::ptrdiff_t>(n + 1));
            key[q] = eval(args);
          }
          return key;
        };
        above = ramsey_monochromatic(above, r, color, 0);
      }
      H.erase(split, H.end());
      H.insert(H.end(), above.begin(), above.end());
      w.h_sizes.push_back(H.size());
    }

    Natural floor = std::max(cur, guard_at(w, s));
    Natural apart = floor;
    for (auto& p : profiles) apart = std::max(apart, p.advance_to(cur));
    const Natural* next = least_above(H, apart, false);
    if (!next) next = least_above(H, floor, false);  // apartness will be reported as failed
    if (!next)
      throw InsufficientRamseyRoom("chain stopped at " + std::to_string(w.I.size()) + " of " +
                                       std::to_string(options.size) + " elements",
                                   w.I);
    cur = *next;
  }
  finish(w);
  return w;
}

std::vector<SchemeCheck> recheck(const IndiscernibleWitness& w) {
  std::vector<SchemeCheck> out;
  for (std::size_t t = 0; t < w.family.size(); ++t) {
    const Formula& phi = w.family[t];
    const std::size_t arity = free_vars(phi).size();
    if (arity == 0) continue;
    if (w.guard == Guard::Strict)
      out.push_back({"indis_circ", t, check_indis(phi, w.I, w.domain, default_coding().code(phi))});
    else
      out.push_back({"indis", t, check_indis(phi, w.I, w.domain)});
    if (!w.diagonal) continue;
    if (arity >= 2) out.push_back({"apart", t, check_apart(phi, w.I, w.domain)});
    if (arity >= 1 + w.plus_r)
      out.push_back({"indis_plus", t, check_indis_plus(phi, arity - 1 - w.plus_r, w.plus_r, w.I, w.domain)});
  }
  return out;
}

}  // namespace indisc
