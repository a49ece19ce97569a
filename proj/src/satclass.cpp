#include "indisc/satclass.hpp"

#include "indisc/parallel.hpp"
#include "indisc/syntax.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace indisc {

namespace {

// Star and coding work that depends only on the formula.
struct Prepared {
  Formula phi;
  VarSet fv;
  StarResult star;
  std::optional<Natural> code;
};

Prepared prepare(const Formula& phi, const SatOptions& options) {
  if (mentions_i(phi)) throw FormulaError("sigma_membership: formula must be in pure arithmetic");
  Prepared p{phi, free_vars(phi), {}, std::nullopt};
  Formula norm = normalize_connectives(phi);
  p.star = options.variant == StarVariant::Clause ? star(norm) : star_pnf(norm);
  if (options.guard == Guard::Strict) p.code = options.coding->code(phi);
  return p;
}

Assignment restrict(const Assignment& a, const VarSet& vars) {
  Assignment out;
  for (const auto& v : vars) {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("no value for free variable " + v.name());
    out.emplace(v, it->second);
  }
  return out;
}

SatVerdict run(const Prepared& p, const Assignment& a, std::span<const Natural> I) {
  Assignment env = restrict(a, p.fv);
  std::optional<Natural> lower;
  for (const auto& [v, value] : env)
    if (!lower || value > *lower) lower = value;
  if (p.code && (!lower || *p.code > *lower)) lower = p.code;
  auto it = lower ? std::upper_bound(I.begin(), I.end(), *lower) : I.begin();
  if (it == I.end())
    throw IExhausted("no element of I lies above " + (lower ? to_string(*lower) : std::string("nothing")));
  const std::size_t idx = static_cast<std::size_t>(it - I.begin());
  if (idx + p.star.k >= I.size())
    throw IExhausted("need " + std::to_string(p.star.k) + " elements of I above j = " + to_string(*it) +
                     ", found " + std::to_string(I.size() - idx - 1));
  SatVerdict v;
  v.j = *it;
  for (std::size_t s = 0; s < p.star.k; ++s) {
    v.iblock.push_back(I[idx + 1 + s]);
    env[p.star.zblock[s]] = I[idx + 1 + s];
  }
  v.star_used = p.star;
  v.member = eval_delta0(p.star.star, env);
  return v;
}

std::string describe(const Formula& f, const Assignment& a) {
  std::string out = render(f) + " @ (";
  bool first = true;
  for (const auto& [v, value] : a) {
    if (!first) out += ", ";
    first = false;
    out += v.name() + "=" + to_string(value);
  }
  return out + ")";
}

void collect_existentials(const Formula& f, std::vector<std::pair<Formula, VarId>>& out) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      collect_existentials(f.sub(), out);
      break;
    case Formula::Kind::Or:
      collect_existentials(f.left(), out);
      collect_existentials(f.right(), out);
      break;
    case Formula::Kind::Exists:
      out.emplace_back(f.body(), f.var());
      collect_existentials(f.body(), out);
      break;
    default:
      break;
  }
}

void tally(ClauseStats& st, bool pass, bool same_j, const std::string& what) {
  ++st.checked;
  if (pass) ++st.passed;
  if (same_j) {
    ++st.same_j;
    if (pass) ++st.same_j_passed;
  }
  if (!pass) st.failures.push_back(what);
}

}  // namespace

Assignment bind_args(const Formula& phi, std::span<const Natural> args) {
  auto vars = free_var_list(phi);
  if (vars.size() != args.size())
    throw FormulaError("arity mismatch: " + render(phi) + " has " + std::to_string(vars.size()) +
                       " free variables, got " + std::to_string(args.size()) + " arguments");
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], args[i]);
  return a;
}

SatVerdict sigma_membership(const Formula& phi, const Assignment& a, std::span<const Natural> I,
                            const SatOptions& options) {
  return run(prepare(phi, options), a, I);
}

SatVerdict sigma_membership(const Formula& phi, std::span<const Natural> args, std::span<const Natural> I,
                            const SatOptions& options) {
  return sigma_membership(phi, bind_args(phi, args), I, options);
}

bool ApartnessOracle::matrix_apart(const Formula& psi, const VarId& witness) {
  const std::string key = render(psi) + " | " + witness.name();
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::vector<VarId> vars;
  for (const auto& v : free_var_list(psi))
    if (v != witness) vars.push_back(v);
  vars.push_back(witness);
  bool result = check_apart(psi, vars, I_, domain_);
  std::lock_guard lock(mutex_);
  cache_.emplace(key, result);
  return result;
}

bool ApartnessOracle::formula_apart(const Formula& phi) {
  std::vector<std::pair<Formula, VarId>> matrices;
  collect_existentials(normalize_connectives(phi), matrices);
  for (const auto& [psi, v] : matrices)
    if (!matrix_apart(psi, v)) return false;
  return true;
}

std::string to_string(NablaOutcome o) {
  switch (o) {
    case NablaOutcome::Agree: return "agree";
    case NablaOutcome::Disagree: return "disagree";
    case NablaOutcome::Undetermined: return "undetermined";
  }
  return "?";
}

NablaResult verify_nabla(const Formula& phi, std::span<const Natural> args, std::span<const Natural> I,
                         const Natural& domain, const Natural& budget, const SatOptions& options,
                         ApartnessOracle* apartness, bool always_report_apartness) {
  Assignment a = bind_args(phi, args);
  NablaResult r;
  r.sigma = sigma_membership(phi, a, I, options);
  r.direct = eval_budgeted(phi, a, budget);
  if (r.direct == Verdict3::Unknown)
    r.outcome = NablaOutcome::Undetermined;
  else
    r.outcome = (r.direct == Verdict3::True) == r.sigma.member ? NablaOutcome::Agree : NablaOutcome::Disagree;
  if (r.outcome == NablaOutcome::Disagree || always_report_apartness) {
    std::optional<ApartnessOracle> local;
    if (!apartness) apartness = &local.emplace(std::vector<Natural>(I.begin(), I.end()), domain);
    r.apart = apartness->formula_apart(phi);
  }
  return r;
}

NablaReport nabla_audit(std::span<const CorpusItem> corpus, std::span<const Natural> I, const Natural& domain,
                        const Natural& budget, const SatOptions& options) {
  NablaReport rep;
  rep.items.resize(corpus.size());
  rep.skip_reasons.resize(corpus.size());
  ApartnessOracle oracle(std::vector<Natural>(I.begin(), I.end()), domain);
  parallel_for(corpus.size(), [&](std::size_t i) {
    try {
      rep.items[i] = verify_nabla(corpus[i].phi, corpus[i].args, I, domain, budget, options, &oracle);
    } catch (const IExhausted& e) {
      rep.skip_reasons[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!rep.skip_reasons[i].empty()) {
      ++rep.skipped;
      continue;
    }
    switch (rep.items[i].outcome) {
      case NablaOutcome::Agree: ++rep.agree; break;
      case NablaOutcome::Disagree: ++rep.disagree; break;
      case NablaOutcome::Undetermined: ++rep.undetermined; break;
    }
  }
  return rep;
}

TarskiReport tarski_audit(std::span<const CorpusItem> corpus, std::span<const Natural> I, const Natural& domain,
                          const SatOptions& options) {
  TarskiReport rep;
  ApartnessOracle oracle(std::vector<Natural>(I.begin(), I.end()), domain);
  std::map<std::string, Prepared> prepared;
  auto prep = [&](const Formula& f) -> const Prepared& {
    std::string key = render(f);
    auto it = prepared.find(key);
    if (it == prepared.end()) it = prepared.emplace(key, prepare(f, options)).first;
    return it->second;
  };

  std::deque<std::pair<Formula, Assignment>> work;
  std::set<std::string> seen;
  auto push = [&](const Formula& f, const Assignment& a) {
    Assignment r = restrict(a, free_vars(f));
    if (seen.insert(describe(f, r)).second) work.emplace_back(f, std::move(r));
  };
  for (const auto& item : corpus) push(normalize_connectives(item.phi), bind_args(item.phi, item.args));

  while (!work.empty()) {
    auto [f, a] = std::move(work.front());
    work.pop_front();
    ++rep.instances;
    try {
      SatVerdict s = run(prep(f), a, I);
      switch (f.kind()) {
        case Formula::Kind::Not: {
          SatVerdict c = run(prep(f.sub()), a, I);
          tally(rep.negation, s.member == !c.member, s.j == c.j, describe(f, a));
          push(f.sub(), a);
          break;
        }
        case Formula::Kind::Or: {
          SatVerdict l = run(prep(f.left()), a, I);
          SatVerdict r = run(prep(f.right()), a, I);
          tally(rep.disjunction, s.member == (l.member || r.member), s.j == l.j && s.j == r.j, describe(f, a));
          push(f.left(), a);
          push(f.right(), a);
          break;
        }
        case Formula::Kind::Exists: {
          const Natural& bound = s.iblock.front();
          const Prepared& body = prep(f.body());
          std::optional<Natural> found;
          Assignment ab = a;
          for (Natural b = 0; b < bound && !found; ++b) {
            ab[f.var()] = b;
            if (run(body, ab, I).member) found = b;
          }
          bool pass = s.member == found.has_value();
          tally(rep.existential, pass, true, describe(f, a));
          if (oracle.matrix_apart(f.body(), f.var())) {
            ++rep.existential.apart_checked;
            if (pass) ++rep.existential.apart_passed;
          }
          ab[f.var()] = found.value_or(0);
          push(f.body(), ab);
          break;
        }
        default:
          break;
      }
    } catch (const IExhausted&) {
      ++rep.skipped;
    }
  }
  return rep;
}

CofinalReport cofinal_stability_audit(std::span<const CorpusItem> corpus, std::span<const Natural> I,
                                      std::size_t tail_start, const SatOptions& options) {
  if (tail_start >= I.size() || I.size() - tail_start < 2)
    throw DomainError("tail starting at index " + std::to_string(tail_start) + " has fewer than 2 elements");
  std::span<const Natural> tail = I.subspan(tail_start);
  enum class Cmp : char { Same, Differ, Skip };
  std::vector<Cmp> cmp(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    try {
      Prepared p = prepare(corpus[i].phi, options);
      Assignment a = bind_args(corpus[i].phi, corpus[i].args);
      cmp[i] = run(p, a, I).member == run(p, a, tail).member ? Cmp::Same : Cmp::Differ;
    } catch (const IExhausted&) {
      cmp[i] = Cmp::Skip;
    }
  });
  CofinalReport rep;
  rep.tail_start = tail_start;
  for (std::size_t i = 0; i < cmp.size(); ++i) {
    if (cmp[i] == Cmp::Same) ++rep.identical;
    if (cmp[i] == Cmp::Skip) ++rep.skipped;
    if (cmp[i] == Cmp::Differ) {
      ++rep.different;
      rep.differing_items.push_back(i);
    }
  }
  return rep;
}

DefinableClassReport definable_class_check(const Formula& theta, std::span<const Formula> family,
                                           const Natural& domain) {
  if (mentions_i(theta)) throw FormulaError("theta must be in pure arithmetic");
  auto vars = free_var_list(theta);
  if (vars.size() != 1) throw FormulaError("theta must have exactly one free variable: " + render(theta));
  if (domain > 10'000'000) throw DomainError("domain too large to enumerate theta: " + to_string(domain));
  const auto n = domain.convert_to<std::size_t>();
  ExpansionEvaluator eval(theta, vars, {}, domain);
  std::vector<char> holds(n + 1);
  parallel_for(n + 1, [&](std::size_t m) {
    Natural v = m;
    holds[m] = eval(std::span(&v, 1));
  });
  DefinableClassReport rep;
  for (std::size_t m = 0; m <= n; ++m)
    if (holds[m]) rep.members.push_back(m);
  rep.top_decile = !rep.members.empty() && rep.members.back() * 10 >= domain * 9;
  for (const auto& phi : family) rep.indis.push_back(check_indis(phi, rep.members, domain));
  return rep;
}

}  // namespace indisc
