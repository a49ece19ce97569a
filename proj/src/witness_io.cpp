#include "indisc/json_io.hpp"

#include "indisc/syntax.hpp"

#include <cstdint>
#include <limits>

namespace indisc {

Json natural_to_json(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return to_string(n);
}

Natural natural_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::int64_t>();
  if (j.is_string()) return parse_natural(j.get<std::string>());
  throw DomainError("expected a natural number, got " + j.dump());
}

namespace {

Json naturals(std::span<const Natural> v) {
  Json a = Json::array();
  for (const auto& n : v) a.push_back(natural_to_json(n));
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("witness record lacks '") + key + "'");
  return j.at(key);
}

Json clause_to_json(const ClauseStats& s) {
  Json j;
  j["checked"] = s.checked;
  j["passed"] = s.passed;
  j["same_j"] = s.same_j;
  j["same_j_passed"] = s.same_j_passed;
  j["apart_checked"] = s.apart_checked;
  j["apart_passed"] = s.apart_passed;
  j["failures"] = s.failures;
  return j;
}

std::string verdict3_name(Verdict3 v) { return to_string(v); }

}  // namespace

Json witness_to_json(const IndiscernibleWitness& w) {
  Json j;
  j["I"] = naturals(w.I);
  Json fam = Json::array();
  for (const auto& f : w.family) fam.push_back(render(f));
  j["family"] = fam;
  j["N"] = natural_to_json(w.domain);
  j["guard"] = to_string(w.guard);
  j["diagonal"] = w.diagonal;
  j["param_bound"] = w.param_bound;
  j["r"] = w.plus_r;
  j["codes"] = naturals(w.codes);
  Json checks = Json::array();
  for (const auto& c : w.checks) checks.push_back(Json{{"scheme", c.scheme}, {"formula", c.formula}, {"pass", c.pass}});
  j["checks"] = checks;
  j["trace"] = Json{{"H_sizes", w.h_sizes}};
  return j;
}

IndiscernibleWitness witness_from_json(const Json& j) {
  try {
    IndiscernibleWitness w;
    for (const auto& n : field(j, "I")) w.I.push_back(natural_from_json(n));
    for (const auto& f : field(j, "family")) w.family.push_back(parse_formula(f.get<std::string>()));
    w.domain = natural_from_json(field(j, "N"));
    w.guard = parse_guard(field(j, "guard").get<std::string>());
    w.diagonal = j.value("diagonal", false);
    w.param_bound = j.value("param_bound", std::size_t{0});
    w.plus_r = j.value("r", std::size_t{1});
    for (const auto& f : w.family) w.codes.push_back(default_coding().code(f));
    if (j.contains("checks"))
      for (const auto& c : j.at("checks"))
        w.checks.push_back({c.at("scheme").get<std::string>(), c.at("formula").get<std::size_t>(),
                            c.at("pass").get<bool>()});
    if (j.contains("trace") && j.at("trace").contains("H_sizes"))
      w.h_sizes = j.at("trace").at("H_sizes").get<std::vector<std::size_t>>();
    require_in_domain(w.I, w.domain);
    return w;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed witness record: ") + e.what());
  }
}

Json sat_verdict_to_json(const SatVerdict& v) {
  Json j;
  j["member"] = v.member;
  j["j"] = natural_to_json(v.j);
  j["iblock"] = naturals(v.iblock);
  j["k"] = v.star_used.k;
  j["star"] = render(v.star_used.star);
  return j;
}

Json nabla_report_to_json(const NablaReport& r, std::span<const CorpusItem> corpus) {
  Json items = Json::array();
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    Json it;
    it["formula"] = render(corpus[i].phi);
    it["args"] = naturals(corpus[i].args);
    if (!r.skip_reasons[i].empty()) {
      it["outcome"] = "skipped";
      it["reason"] = r.skip_reasons[i];
    } else {
      const auto& n = r.items[i];
      it["outcome"] = to_string(n.outcome);
      it["direct"] = verdict3_name(n.direct);
      it["sigma"] = sat_verdict_to_json(n.sigma);
      if (n.apart) it["apart"] = *n.apart;
    }
    items.push_back(std::move(it));
  }
  Json j;
  j["audit"] = "nabla";
  j["agree"] = r.agree;
  j["disagree"] = r.disagree;
  j["undetermined"] = r.undetermined;
  j["skipped"] = r.skipped;
  const std::size_t decided = r.agree + r.disagree;
  j["agree_rate"] = decided ? static_cast<double>(r.agree) / static_cast<double>(decided) : 1.0;
  const std::size_t evaluated = decided + r.undetermined;
  j["undetermined_rate"] = evaluated ? static_cast<double>(r.undetermined) / static_cast<double>(evaluated) : 0.0;
  j["items"] = items;
  return j;
}

Json tarski_report_to_json(const TarskiReport& r) {
  Json j;
  j["audit"] = "tarski";
  j["instances"] = r.instances;
  j["skipped"] = r.skipped;
  j["negation"] = clause_to_json(r.negation);
  j["disjunction"] = clause_to_json(r.disjunction);
  j["existential"] = clause_to_json(r.existential);
  return j;
}

Json cofinal_report_to_json(const CofinalReport& r) {
  Json j;
  j["audit"] = "cofinal";
  j["tail_start"] = r.tail_start;
  j["identical"] = r.identical;
  j["different"] = r.different;
  j["skipped"] = r.skipped;
  j["differing_items"] = r.differing_items;
  return j;
}

Json definable_class_to_json(const DefinableClassReport& r, const Natural& domain) {
  Json j;
  j["N"] = natural_to_json(domain);
  j["size"] = r.members.size();
  j["max"] = r.members.empty() ? Json(nullptr) : natural_to_json(r.members.back());
  j["top_decile"] = r.top_decile;
  j["indis"] = r.indis;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace indisc
