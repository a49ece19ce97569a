// indisc: command-line front end.
//
// Exit status: 0 success, 1 domain error (JSON {error, message} on stderr),
// 2 usage error.

#include "indisc/corpus.hpp"
#include "indisc/evaluator.hpp"
#include "indisc/goedel.hpp"
#include "indisc/indiscernibles.hpp"
#include "indisc/json_io.hpp"
#include "indisc/satclass.hpp"
#include "indisc/star.hpp"
#include "indisc/syntax.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace indisc;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + out);
  f << text;
}

std::vector<Natural> parse_list(const std::string& s) {
  std::vector<Natural> out;
  std::string tok;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!tok.empty()) out.push_back(parse_natural(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  return out;
}

Language parse_language(const std::string& s) { return s == "la_i" ? Language::LA_I : Language::LA; }

std::vector<CorpusLine> formulas_from(const std::string& formula, const std::string& in, Language lang) {
  if (!formula.empty()) return parse_corpus(formula, lang);
  if (!in.empty()) return read_corpus_file(in, lang);
  throw DomainError("either --formula or --in is required");
}

std::vector<Formula> read_family(const std::string& path) {
  std::vector<Formula> fam;
  for (const auto& line : read_corpus_file(path)) fam.push_back(line.formula);
  return fam;
}

std::vector<CorpusItem> read_items(const std::string& path) {
  std::vector<CorpusItem> items;
  for (const auto& line : read_corpus_file(path)) {
    const std::size_t arity = free_vars(line.formula).size();
    if (line.args.size() != arity)
      throw DomainError("corpus line " + std::to_string(line.line_number) + ": expected " + std::to_string(arity) +
                        " arguments, got " + std::to_string(line.args.size()));
    items.push_back({line.formula, line.args});
  }
  return items;
}

IndiscernibleWitness read_witness(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw DomainError("cannot parse witness " + path + ": " + e.what());
  }
  return witness_from_json(j);
}

SatOptions sat_options(const std::string& guard, const std::string& variant) {
  SatOptions o;
  o.guard = parse_guard(guard);
  o.variant = variant == "prenex" ? StarVariant::Prenex : StarVariant::Clause;
  return o;
}

Json checks_json(const std::vector<SchemeCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back(Json{{"scheme", c.scheme}, {"formula", c.formula}, {"pass", c.pass}});
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indiscernibles and partial satisfaction classes at desk scale"};
  app.require_subcommand(1);

  std::string formula, in, out, language = "la";

  auto* parse = app.add_subcommand("parse", "Parse formulas and report code, arity and classification");
  parse->add_option("--formula", formula, "Formula text");
  parse->add_option("--in", in, "Corpus file");
  parse->add_option("--out", out, "Output file (default stdout)");
  parse->add_option("--language", language, "la or la_i")->check(CLI::IsMember({"la", "la_i"}));

  std::string variant = "clause";
  auto* star_cmd = app.add_subcommand("star", "Apply the star transformation");
  star_cmd->add_option("--formula", formula, "Formula text");
  star_cmd->add_option("--in", in, "Corpus file");
  star_cmd->add_option("--out", out, "Output file (default stdout)");
  star_cmd->add_option("--variant", variant, "clause or prenex")->check(CLI::IsMember({"clause", "prenex"}));

  std::string args, mode = "delta0", ilist, budget = "1000", domain = "100";
  auto* eval = app.add_subcommand("eval", "Evaluate a formula");
  eval->add_option("--formula", formula, "Formula text")->required();
  eval->add_option("--args", args, "Comma-separated values for the free variables, canonical order");
  eval->add_option("--mode", mode, "delta0, budget or expansion")
      ->check(CLI::IsMember({"delta0", "budget", "expansion"}));
  eval->add_option("--budget", budget, "Search budget W for unbounded quantifiers");
  eval->add_option("--domain", domain, "N for expansion mode");
  eval->add_option("--I", ilist, "Comma-separated I for expansion mode");

  std::string family, guard = "relaxed";
  std::size_t size = 4, param_bound = 0, plus_r = 1, pool_size = 128;
  bool diagonal = false;
  auto* mine = app.add_subcommand("mine", "Mine an indiscernible witness for a formula family");
  mine->add_option("--family", family, "Family file, one formula per line")->required();
  mine->add_option("--domain", domain, "N")->required();
  mine->add_option("--size", size, "m = |I|")->required();
  mine->add_option("--guard", guard, "strict or relaxed")->check(CLI::IsMember({"strict", "relaxed"}));
  mine->add_flag("--diagonal", diagonal, "Diagonal mining with apartness-aware chain");
  mine->add_option("--param-bound", param_bound, "Chain positions that receive diagonal thinning (0: all)");
  mine->add_option("--r", plus_r, "Tuple length r of the diagonal scheme");
  mine->add_option("--pool-size", pool_size, "Geometric candidate pool size for large N");
  mine->add_option("--out", out, "Output file (default stdout)");

  std::string witness;
  auto* check = app.add_subcommand("check", "Re-verify the scheme checks recorded in a witness");
  check->add_option("--witness", witness, "Witness JSON")->required();
  check->add_option("--out", out, "Output file (default stdout)");

  std::string corpus, audit = "nabla";
  std::size_t tail_start = 1;
  auto* sat = app.add_subcommand("satclass", "Run a satisfaction-class audit");
  sat->add_option("--witness", witness, "Witness JSON")->required();
  sat->add_option("--corpus", corpus, "Corpus file: formula ; args")->required();
  sat->add_option("--audit", audit, "nabla, tarski or cofinal")
      ->check(CLI::IsMember({"nabla", "tarski", "cofinal"}));
  sat->add_option("--budget", budget, "Budget W for direct truth");
  sat->add_option("--guard", guard, "strict or relaxed")->check(CLI::IsMember({"strict", "relaxed"}));
  sat->add_option("--variant", variant, "clause or prenex")->check(CLI::IsMember({"clause", "prenex"}));
  sat->add_option("--tail-start", tail_start, "Index where the cofinal tail begins");
  sat->add_option("--out", out, "Output file (default stdout)");

  std::string theta;
  auto* definable = app.add_subcommand("definable", "Indiscernibility of a definable class I_theta");
  definable->add_option("--theta", theta, "Unary formula")->required();
  definable->add_option("--family", family, "Family file")->required();
  definable->add_option("--domain", domain, "N")->required();
  definable->add_option("--out", out, "Output file (default stdout)");

  auto* report = app.add_subcommand("report", "Witness re-check plus every audit in one report");
  report->add_option("--witness", witness, "Witness JSON")->required();
  report->add_option("--corpus", corpus, "Corpus file")->required();
  report->add_option("--budget", budget, "Budget W for direct truth");
  report->add_option("--guard", guard, "strict or relaxed")->check(CLI::IsMember({"strict", "relaxed"}));
  report->add_option("--tail-start", tail_start, "Index where the cofinal tail begins");
  report->add_option("--out", out, "Output file (default stdout)");

  std::uint64_t seed = 1;
  std::size_t depth = 2, count = 10;
  auto* gen = app.add_subcommand("gen", "Generate a reproducible formula corpus");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--depth", depth, "Maximum quantifier nesting")->check(CLI::Range(0, 8));
  gen->add_option("--count", count, "Number of formulas");
  gen->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*parse) {
      Json records = Json::array();
      for (const auto& line : formulas_from(formula, in, parse_language(language))) {
        Json r;
        r["line"] = line.line_number;
        r["formula"] = render(line.formula);
        r["code"] = natural_to_json(goedel_encode(line.formula));
        Json fv = Json::array();
        for (const auto& v : free_var_list(line.formula)) fv.push_back(v.name());
        r["free_vars"] = fv;
        r["exists_depth"] = exists_depth(normalize_connectives(line.formula));
        r["delta0"] = is_delta0(line.formula);
        records.push_back(r);
      }
      emit(dump(records), out);
    } else if (*star_cmd) {
      Json records = Json::array();
      for (const auto& line : formulas_from(formula, in, Language::LA)) {
        Formula norm = normalize_connectives(line.formula);
        StarResult s = variant == "prenex" ? star_pnf(norm) : star(norm);
        Json r;
        r["formula"] = render(line.formula);
        r["star"] = render(s.star);
        r["k"] = s.k;
        Json z = Json::array();
        for (const auto& v : s.zblock) z.push_back(v.name());
        r["zblock"] = z;
        r["delta0"] = is_delta0(s.star);
        records.push_back(r);
      }
      emit(dump(records), out);
    } else if (*eval) {
      Formula f = parse_formula(formula, mode == "expansion" ? Language::LA_I : Language::LA);
      auto values = parse_list(args);
      auto vars = free_var_list(f);
      if (values.size() != vars.size())
        throw DomainError("expected " + std::to_string(vars.size()) + " arguments, got " +
                          std::to_string(values.size()));
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], values[i]);
      Json r;
      r["formula"] = render(f);
      r["mode"] = mode;
      if (mode == "delta0")
        r["value"] = eval_delta0(f, a) ? "true" : "false";
      else if (mode == "budget")
        r["value"] = to_string(eval_budgeted(f, a, parse_natural(budget)));
      else
        r["value"] = eval_over_expansion(f, a, parse_list(ilist), parse_natural(domain)) ? "true" : "false";
      emit(dump(r), out);
    } else if (*mine) {
      MineOptions o;
      o.domain = parse_natural(domain);
      o.size = size;
      o.guard = parse_guard(guard);
      o.param_bound = param_bound;
      o.plus_r = plus_r;
      o.pool_size = pool_size;
      auto fam = read_family(family);
      if (o.guard == Guard::Strict)
        for (const auto& f : fam)
          if (goedel_encode(f) > o.domain)
            std::cerr << "warning: code of '" << render(f) << "' exceeds N; consider --guard relaxed\n";
      auto w = diagonal ? mine_diagonal(fam, o) : mine_indiscernibles(fam, o);
      emit(dump(witness_to_json(w)), out);
    } else if (*check) {
      auto w = read_witness(witness);
      auto fresh = recheck(w);
      bool match = fresh == w.checks;
      Json r;
      r["witness"] = witness;
      r["checks"] = checks_json(fresh);
      r["recorded_match"] = match;
      r["all_pass"] = std::all_of(fresh.begin(), fresh.end(), [](const SchemeCheck& c) { return c.pass; });
      r["top_decile"] = w.reaches_top_decile();
      emit(dump(r), out);
      if (!match) throw DomainError("recorded checks differ from a fresh re-check");
    } else if (*sat) {
      auto w = read_witness(witness);
      auto items = read_items(corpus);
      auto opts = sat_options(guard, variant);
      Json r;
      if (audit == "nabla")
        r = nabla_report_to_json(nabla_audit(items, w.I, w.domain, parse_natural(budget), opts), items);
      else if (audit == "tarski")
        r = tarski_report_to_json(tarski_audit(items, w.I, w.domain, opts));
      else
        r = cofinal_report_to_json(cofinal_stability_audit(items, w.I, tail_start, opts));
      emit(dump(r), out);
    } else if (*definable) {
      Natural n = parse_natural(domain);
      auto fam = read_family(family);
      emit(dump(definable_class_to_json(definable_class_check(parse_formula(theta), fam, n), n)), out);
    } else if (*report) {
      auto w = read_witness(witness);
      auto items = read_items(corpus);
      auto opts = sat_options(guard, "clause");
      Json r;
      r["witness"] = witness_to_json(w);
      r["recheck"] = checks_json(recheck(w));
      r["nabla"] = nabla_report_to_json(nabla_audit(items, w.I, w.domain, parse_natural(budget), opts), items);
      r["tarski"] = tarski_report_to_json(tarski_audit(items, w.I, w.domain, opts));
      if (w.I.size() >= tail_start + 2)
        r["cofinal"] = cofinal_report_to_json(cofinal_stability_audit(items, w.I, tail_start, opts));
      emit(dump(r), out);
    } else if (*gen) {
      emit(format_corpus(generate_corpus(seed, depth, count)), out);
    }
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal_error"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
