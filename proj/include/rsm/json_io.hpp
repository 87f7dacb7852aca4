#ifndef RSM_JSON_IO_HPP_
#define RSM_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "rsm/bridge.hpp"

namespace rsm {

// Key order in emitted objects is fixed so output is byte-deterministic.
using Json = nlohmann::ordered_json;

// File formats
//   relation: {"universe": ["a", ...], "pairs": [["a","b"], ...]}
//   matroid:  {"universe": [...], "circuits": [[...], ...]}
//          or {"universe": [...], "independents": [[...], ...]}
// Matroid families are axiom-checked on load; a failing family is rejected
// with the axiom report embedded in the ParseError.
Relation parse_relation_json(const Json& j);
Matroid parse_matroid_json(const Json& j);

Relation load_relation_file(const std::string& path);
Matroid load_matroid_file(const std::string& path);

Json relation_to_json(const Relation& rel);
// Emits universe + circuits + independents (the latter only when the
// universe is within the enumeration cap). parse_matroid_json prefers
// "circuits" when both keys are present, so this round-trips.
Json matroid_to_json(const Matroid& m);

Json set_to_json(const Universe& u, Mask m);
Json family_to_json(const SetFamily& fam);
Json approx_report_to_json(const Universe& u, const ApproxReport& report);
Json property_report_to_json(const Universe& u, const PropertyReport& report);
Json axiom_report_to_json(const Universe& u, const AxiomReport& report);
Json classes_to_json(const Universe& u, const Classes& c);
Json proposition_report_to_json(const PropositionReport& report);

// Paper-style text rendering: sets as {a, b, d}, families as nested braces.
std::string set_to_text(const Universe& u, Mask m);
std::string family_to_text(const SetFamily& fam);
std::string pairs_to_text(const Relation& rel);
std::string rational_to_text(const std::optional<Rational>& r);  // "3/5 (0.6)" or "undefined"
std::string approx_report_to_text(const Universe& u, const ApproxReport& report);
std::string property_report_to_text(const Universe& u, const PropertyReport& report);
std::string axiom_report_to_text(const Universe& u, const AxiomReport& report);
std::string proposition_report_to_text(const PropositionReport& report);

}  // namespace rsm

#endif  // RSM_JSON_IO_HPP_
