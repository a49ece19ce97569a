#pragma once

#include "indisc/indiscernibles.hpp"
#include "indisc/satclass.hpp"

#include <json.hpp>

#include <string>

namespace indisc {

using Json = nlohmann::ordered_json;

/// Naturals that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json natural_to_json(const Natural& n);
Natural natural_from_json(const Json& j);

/// Witness record:
///   {I, family, N, guard, diagonal, param_bound, r, codes,
///    checks: [{scheme, formula, pass}], trace: {H_sizes}}
Json witness_to_json(const IndiscernibleWitness& w);
/// Throws DomainError on a malformed record.
IndiscernibleWitness witness_from_json(const Json& j);

Json sat_verdict_to_json(const SatVerdict& v);
Json nabla_report_to_json(const NablaReport& r, std::span<const CorpusItem> corpus);
Json tarski_report_to_json(const TarskiReport& r);
Json cofinal_report_to_json(const CofinalReport& r);
Json definable_class_to_json(const DefinableClassReport& r, const Natural& domain);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace indisc
