// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "indisc/corpus.hpp"
#include "indisc/json_io.hpp"
#include "indisc/parallel.hpp"
#include "indisc/satclass.hpp"
#include "indisc/star.hpp"
#include "indisc/syntax.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace indisc;

namespace {

// Pinned limits.
constexpr double kAc1Seconds = 5.0;
constexpr double kAc2Seconds = 60.0;
constexpr std::uint64_t kCorpusSeed = 2024;
constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kCorpusDepth = 4;
constexpr unsigned kDomain = 100000;
constexpr unsigned kBudget = 10000;
constexpr std::size_t kWitnessSize = 9;
constexpr std::size_t kNablaCases = 300;
constexpr std::size_t kRandomTriples = 500;

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("AC%d %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Test-side k: nesting of unbounded exists with max at disjunctions.
std::size_t expected_k(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not: return expected_k(f.sub());
    case K::Or: return std::max(expected_k(f.left()), expected_k(f.right()));
    case K::Exists: return 1 + expected_k(f.body());
    default: return 0;
  }
}

// Node-by-node mirror with exists at level d bounded by z_{d+1}.
bool mirrors(const Formula& n, const Formula& s, std::uint32_t d) {
  using K = Formula::Kind;
  switch (n.kind()) {
    case K::Not: return s.kind() == K::Not && mirrors(n.sub(), s.sub(), d);
    case K::Or: return s.kind() == K::Or && mirrors(n.left(), s.left(), d) && mirrors(n.right(), s.right(), d);
    case K::Exists:
      return s.kind() == K::BddExists && s.var() == n.var() && s.bound() == Term::var(VarId::z(d + 1)) &&
             mirrors(n.body(), s.body(), d + 1);
    default: return n == s;
  }
}

void ac1() {
  auto t0 = std::chrono::steady_clock::now();
  auto corpus = generate_corpus(kCorpusSeed, kCorpusDepth, kCorpusSize);
  std::size_t ok = 0;
  for (const auto& g : corpus) {
    Formula n = normalize_connectives(g.formula);
    auto s = star(n);
    ok += is_delta0(s.star) && s.k == expected_k(n) && mirrors(n, s.star, 0);
  }
  double t = seconds_since(t0);
  report(1, ok == corpus.size() && t < kAc1Seconds,
         "star laws " + std::to_string(ok) + "/" + std::to_string(corpus.size()) + " in " + fmt(t) + " s (limit " +
             fmt(kAc1Seconds) + ")");
}

struct Pipeline {
  IndiscernibleWitness witness;
  std::vector<CorpusItem> corpus;
};

// Arguments for the corpus: every value below the third-from-last element of
// I, thinned to a spread of at most 25 values.
std::vector<Natural> argument_pool(const std::vector<Natural>& I) {
  const Natural limit = I[I.size() - 3];
  std::vector<Natural> all;
  for (Natural v = 0; v < limit; ++v) all.push_back(v);
  std::vector<Natural> out;
  const std::size_t step = std::max<std::size_t>(1, all.size() / 25);
  for (std::size_t i = 0; i < all.size(); i += step) out.push_back(all[i]);
  return out;
}

Pipeline build_pipeline() {
  auto fam = testing::criterion_family();
  MineOptions o;
  o.domain = kDomain;
  o.size = kWitnessSize;
  Pipeline p{mine_diagonal(fam, o), {}};
  p.corpus = testing::criterion_corpus(fam, argument_pool(p.witness.I), kNablaCases);
  return p;
}

std::string pipeline_report(const Pipeline& p) {
  Json j;
  j["witness"] = witness_to_json(p.witness);
  j["nabla"] = nabla_report_to_json(nabla_audit(p.corpus, p.witness.I, p.witness.domain, kBudget), p.corpus);
  j["tarski"] = tarski_report_to_json(tarski_audit(p.corpus, p.witness.I, p.witness.domain));
  j["cofinal"] = cofinal_report_to_json(cofinal_stability_audit(p.corpus, p.witness.I, 1));
  return dump(j);
}

void ac2(const Pipeline& p, double mine_seconds) {
  auto t0 = std::chrono::steady_clock::now();
  bool apart_all = true;
  for (std::size_t t = 0; t < p.witness.family.size(); ++t) apart_all &= p.witness.passed("apart", t) == true;
  auto rep = nabla_audit(p.corpus, p.witness.I, p.witness.domain, kBudget);
  double t = mine_seconds + seconds_since(t0);
  const std::size_t decided = rep.agree + rep.disagree;
  const std::size_t evaluated = decided + rep.undetermined;
  bool pass = apart_all && p.corpus.size() == kNablaCases && rep.skipped == 0 && rep.disagree == 0 && decided > 0 &&
              t < kAc2Seconds;
  report(2, pass,
         "apart for all 12: " + std::string(apart_all ? "yes" : "no") + "; agree " + std::to_string(rep.agree) + "/" +
             std::to_string(decided) + " decided, undetermined rate " +
             fmt(evaluated ? 100.0 * static_cast<double>(rep.undetermined) / static_cast<double>(evaluated) : 0.0) +
             "%, skipped " + std::to_string(rep.skipped) + "; " + fmt(t) + " s (limit " + fmt(kAc2Seconds) + ")");
}

void ac3() {
  // The {4,6} counterexample scaled by 10: j = 40, i1 = 60, witness 2*30 = 60.
  Formula psi = parse_formula("(x1 + x1) = y");
  std::vector<Natural> I{40, 60};
  bool apart = check_apart(psi, I, 100);
  auto r = verify_nabla(Formula::exists(VarId::y(), psi), std::vector<Natural>{30}, I, 100, kBudget);
  bool pass = !apart && r.outcome == NablaOutcome::Disagree && r.apart == false;
  report(3, pass,
         "I={40,60}, a=30: check_apart=" + std::string(apart ? "pass" : "fail") + ", nabla=" + to_string(r.outcome));
}

void ac4(const Pipeline& p) {
  auto rep = tarski_audit(p.corpus, p.witness.I, p.witness.domain);
  bool pass = rep.negation.checked > 0 && rep.negation.passed == rep.negation.checked &&
              rep.disjunction.checked > 0 && rep.disjunction.passed == rep.disjunction.checked &&
              rep.existential.apart_checked > 0 && rep.existential.apart_passed == rep.existential.apart_checked;
  auto frac = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  report(4, pass,
         "closure " + std::to_string(rep.instances) + " instances; negation " +
             frac(rep.negation.passed, rep.negation.checked) + ", disjunction " +
             frac(rep.disjunction.passed, rep.disjunction.checked) + " (same-j " +
             frac(rep.disjunction.same_j_passed, rep.disjunction.same_j) + "), existential on apart matrices " +
             frac(rep.existential.apart_passed, rep.existential.apart_checked) + " (all " +
             frac(rep.existential.passed, rep.existential.checked) + ")");
}

void ac5(const std::vector<IndiscernibleWitness>& witnesses) {
  std::size_t checked = 0, kept = 0;
  for (const auto& w : witnesses) {
    for (std::size_t cut = 1; cut + 2 <= w.I.size(); ++cut) {
      IndiscernibleWitness t = w;
      t.I.erase(t.I.begin(), t.I.begin() + static_cast<std::ptrdiff_t>(cut));
      for (const auto& c : recheck(t)) {
        if (w.passed(c.scheme, c.formula) != true) continue;
        ++checked;
        kept += c.pass;
      }
    }
  }
  report(5, checked > 0 && kept == checked,
         std::to_string(kept) + "/" + std::to_string(checked) + " passing checks survive every tail cut across " +
             std::to_string(witnesses.size()) + " witnesses");
}

void ac6(const Pipeline& p) {
  std::size_t identical = 0, different = 0, skipped = 0;
  for (std::size_t start = 1; start + 2 <= p.witness.I.size(); ++start) {
    auto r = cofinal_stability_audit(p.corpus, p.witness.I, start);
    identical += r.identical;
    different += r.different;
    skipped += r.skipped;
  }
  report(6, different == 0 && identical > 0,
         "identical " + std::to_string(identical) + ", different " + std::to_string(different) +
             ", no room on tail " + std::to_string(skipped));
}

void ac7() {
  testing::RandomFormulas gen(777);
  const VarId x1 = VarId::x(1), x2 = VarId::x(2), y = VarId::y();
  std::size_t agree = 0;
  for (std::size_t trial = 0; trial < kRandomTriples; ++trial) {
    const unsigned n = 5 + static_cast<unsigned>(gen.below(6));
    auto I = gen.increasing_subset(5, n);
    bool same = false;
    switch (trial % 4) {
      case 0: {
        Formula phi = gen.make({x1, x2});
        same = check_indis(phi, I, n) == check_scheme(emit_indis_sentence(phi, 2), I, n);
        break;
      }
      case 1: {
        Formula phi = gen.make({x1, y});
        same = check_apart(phi, I, n) == check_scheme(emit_apart_sentence(phi), I, n);
        break;
      }
      case 2: {
        Formula phi = gen.make({x1, y});
        same = check_indis_plus(phi, 0, 1, I, n) == check_scheme(emit_indis_plus_sentence(phi, 0, 1), I, n);
        break;
      }
      default: {
        Formula phi = gen.make({x1});
        same = check_indis(phi, I, n, goedel_encode(phi)) == check_scheme(emit_indis_circ_sentence(phi), I, n);
        break;
      }
    }
    agree += same;
  }
  report(7, agree == kRandomTriples,
         "direct vs emitted agreement " + std::to_string(agree) + "/" + std::to_string(kRandomTriples));
}

void ac8(const Pipeline& p) {
  SatOptions pnf;
  pnf.variant = StarVariant::Prenex;
  std::size_t same = 0;
  for (const auto& item : p.corpus)
    same += sigma_membership(item.phi, item.args, p.witness.I).member ==
            sigma_membership(item.phi, item.args, p.witness.I, pnf).member;
  report(8, same == p.corpus.size(),
         "clause vs prenex membership identical " + std::to_string(same) + "/" + std::to_string(p.corpus.size()));
}

void ac9() {
  set_thread_limit(1);
  std::string a = pipeline_report(build_pipeline());
  set_thread_limit(8);
  std::string b = pipeline_report(build_pipeline());
  set_thread_limit(0);
  report(9, a == b, "reports with 1 and 8 threads are " + std::string(a == b ? "byte-identical" : "different") +
                        " (" + std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main() {
  auto guarded = [](int id, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
  };

  guarded(1, ac1);

  Pipeline p;
  double mine_seconds = 0;
  bool have_pipeline = false;
  try {
    auto t0 = std::chrono::steady_clock::now();
    p = build_pipeline();
    mine_seconds = seconds_since(t0);
    have_pipeline = true;
  } catch (const std::exception& e) {
    for (int id : {2, 4, 6, 8}) report(id, false, std::string("pipeline failed: ") + e.what());
  }
  if (have_pipeline) guarded(2, [&] { ac2(p, mine_seconds); });
  guarded(3, ac3);
  if (have_pipeline) guarded(4, [&] { ac4(p); });
  guarded(5, [&] {
    std::vector<IndiscernibleWitness> ws;
    if (have_pipeline) ws.push_back(p.witness);
    auto fam = testing::criterion_family();
    MineOptions o;
    o.domain = 5000;
    o.size = 8;
    ws.push_back(mine_indiscernibles(fam, o));
    ws.push_back(mine_diagonal(fam, o));
    std::vector<Formula> small{parse_formula("(x1 + x1) = x2"), parse_formula("x1 < x2"),
                               parse_formula("(x + x1) < x2")};
    o.domain = 500;
    o.size = 6;
    ws.push_back(mine_indiscernibles(small, o));
    ws.push_back(mine_diagonal(small, o));
    ac5(ws);
  });
  if (have_pipeline) guarded(6, [&] { ac6(p); });
  guarded(7, ac7);
  if (have_pipeline) guarded(8, [&] { ac8(p); });
  guarded(9, ac9);

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
