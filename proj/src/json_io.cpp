#include "rsm/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace rsm {

namespace {

std::vector<std::string> parse_label_array(const Json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string(field) + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError(std::string(field) + " must contain only strings");
    std::string label = item.get<std::string>();
    if (label.empty()) throw ParseError(std::string(field) + " contains an empty label");
    out.push_back(std::move(label));
  }
  return out;
}

Universe parse_universe(const Json& j) {
  if (!j.is_object() || !j.contains("universe")) {
    throw ParseError("expected an object with a \"universe\" field");
  }
  return Universe(parse_label_array(j.at("universe"), "universe"));
}

std::vector<std::vector<std::string>> parse_family_field(const Json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string(field) + " must be an array of label arrays");
  std::vector<std::vector<std::string>> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(parse_label_array(item, field));
  return out;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

Relation parse_relation_json(const Json& j) {
  Universe universe = parse_universe(j);
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("pairs")) {
    const Json& arr = j.at("pairs");
    if (!arr.is_array()) throw ParseError("pairs must be an array of two-element arrays");
    for (const auto& item : arr) {
      auto labels = parse_label_array(item, "pairs");
      if (labels.size() != 2) throw ParseError("each pair must have exactly two labels");
      pairs.emplace_back(std::move(labels[0]), std::move(labels[1]));
    }
  }
  return make_relation(std::move(universe), pairs);
}

Matroid parse_matroid_json(const Json& j) {
  Universe universe = parse_universe(j);
  const bool has_circuits = j.contains("circuits");
  const bool has_independents = j.contains("independents");
  if (!has_circuits && !has_independents) {
    throw ParseError("matroid file needs a \"circuits\" or \"independents\" field");
  }
  if (has_circuits) {
    SetFamily circuits = SetFamily::from_labels(
        universe, parse_family_field(j.at("circuits"), "circuits"));
    return Matroid::from_circuits(std::move(universe), std::move(circuits));
  }
  SetFamily independents = SetFamily::from_labels(
      universe, parse_family_field(j.at("independents"), "independents"));
  return Matroid::from_independents(std::move(independents));
}

Relation load_relation_file(const std::string& path) {
  return parse_relation_json(load_json(path));
}

Matroid load_matroid_file(const std::string& path) {
  return parse_matroid_json(load_json(path));
}

Json set_to_json(const Universe& u, Mask m) {
  return Json(u.labels_of(m));
}

Json family_to_json(const SetFamily& fam) {
  Json out = Json::array();
  for (Mask m : fam.members()) out.push_back(set_to_json(fam.universe(), m));
  return out;
}

Json relation_to_json(const Relation& rel) {
  Json out;
  out["universe"] = Json(rel.universe().labels());
  Json pairs = Json::array();
  for (const auto& [x, y] : rel.pairs()) {
    pairs.push_back(Json::array({rel.universe().label(x), rel.universe().label(y)}));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json matroid_to_json(const Matroid& m) {
  Json out;
  out["universe"] = Json(m.universe().labels());
  out["circuits"] = family_to_json(circuits_of(m));
  if (m.universe().size() <= kEnumerationCap) {
    out["independents"] = family_to_json(m.independents());
  }
  return out;
}

Json approx_report_to_json(const Universe& u, const ApproxReport& report) {
  Json out;
  out["lower"] = set_to_json(u, report.lower);
  out["upper"] = set_to_json(u, report.upper);
  out["alpha"] = report.alpha ? Json(report.alpha->to_string()) : Json(nullptr);
  out["rho"] = report.rho ? Json(report.rho->to_string()) : Json(nullptr);
  out["precise"] = report.precise;
  return out;
}

Json property_report_to_json(const Universe& u, const PropertyReport& report) {
  Json out;
  out["symmetric"] = report.symmetric;
  out["transitive"] = report.transitive;
  out["reflexive"] = report.reflexive;
  Json witnesses = Json::object();
  if (report.symmetry_witness) {
    witnesses["symmetry"] = Json::array(
        {u.label(report.symmetry_witness->first), u.label(report.symmetry_witness->second)});
  }
  if (report.transitivity_witness) {
    const auto& w = *report.transitivity_witness;
    witnesses["transitivity"] = Json::array({u.label(w[0]), u.label(w[1]), u.label(w[2])});
  }
  if (report.reflexivity_witness) {
    witnesses["reflexivity"] = u.label(*report.reflexivity_witness);
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json axiom_report_to_json(const Universe& u, const AxiomReport& report) {
  Json out;
  out["valid"] = report.valid;
  out["failed_axiom"] = report.valid ? Json(nullptr) : Json(axiom_name(report.failed));
  if (report.valid) {
    out["witness"] = nullptr;
  } else {
    Json witness;
    Json sets = Json::array();
    for (Mask m : report.sets) sets.push_back(set_to_json(u, m));
    witness["sets"] = std::move(sets);
    if (report.element) witness["element"] = u.label(*report.element);
    out["witness"] = std::move(witness);
  }
  return out;
}

Json classes_to_json(const Universe& u, const Classes& c) {
  Json out;
  Json blocks = Json::array();
  for (Mask b : c.blocks) blocks.push_back(set_to_json(u, b));
  out["blocks"] = std::move(blocks);
  out["isolated"] = set_to_json(u, c.isolated);
  return out;
}

Json proposition_report_to_json(const PropositionReport& report) {
  Json out;
  out["id"] = report.id;
  out["claim"] = report.claim;
  out["holds"] = report.holds;
  out["instances_checked"] = report.instances_checked;
  out["failures"] = report.failures;
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    Json cj;
    if (ce.r1) cj["r1"] = relation_to_json(*ce.r1);
    if (ce.r2) cj["r2"] = relation_to_json(*ce.r2);
    if (ce.family) {
      cj["family"] = Json{{"universe", Json(ce.family->universe().labels())},
                          {"circuits", family_to_json(*ce.family)}};
    }
    if (ce.subset && (ce.r1 || ce.family)) {
      const Universe& u = ce.r1 ? ce.r1->universe() : ce.family->universe();
      cj["subset"] = set_to_json(u, *ce.subset);
    }
    cj["note"] = ce.note;
    out["counterexample"] = std::move(cj);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

std::string family_to_text(const SetFamily& fam) {
  std::string out = "{";
  bool first = true;
  for (Mask m : fam.members()) {
    if (!first) out += ", ";
    out += set_text(fam.universe(), m);
    first = false;
  }
  return out + "}";
}

std::string pairs_to_text(const Relation& rel) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, y] : rel.pairs()) {
    if (!first) out += ", ";
    out += "(" + rel.universe().label(x) + ", " + rel.universe().label(y) + ")";
    first = false;
  }
  return out + "}";
}

std::string rational_to_text(const std::optional<Rational>& r) {
  if (!r) return "undefined";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", r->value());
  return r->to_string() + " (" + buf + ")";
}

std::string approx_report_to_text(const Universe& u, const ApproxReport& report) {
  std::string out;
  out += "X = " + set_text(u, report.query) + "\n";
  out += "lower = " + set_text(u, report.lower) + "\n";
  out += "upper = " + set_text(u, report.upper) + "\n";
  out += "alpha = " + rational_to_text(report.alpha) + "\n";
  out += "rho = " + rational_to_text(report.rho) + "\n";
  out += std::string("classification = ") + (report.precise ? "precise" : "rough") + "\n";
  return out;
}

std::string property_report_to_text(const Universe& u, const PropertyReport& report) {
  std::string out;
  out += std::string("symmetric = ") + (report.symmetric ? "true" : "false");
  if (report.symmetry_witness) {
    out += "  (witness: (" + u.label(report.symmetry_witness->first) + ", " +
           u.label(report.symmetry_witness->second) + ") present without its reverse)";
  }
  out += "\n";
  out += std::string("transitive = ") + (report.transitive ? "true" : "false");
  if (report.transitivity_witness) {
    const auto& w = *report.transitivity_witness;
    out += "  (witness: (" + u.label(w[0]) + ", " + u.label(w[1]) + ") and (" + u.label(w[1]) +
           ", " + u.label(w[2]) + ") present but not (" + u.label(w[0]) + ", " + u.label(w[2]) +
           "))";
  }
  out += "\n";
  out += std::string("reflexive = ") + (report.reflexive ? "true" : "false");
  if (report.reflexivity_witness) {
    out += "  (witness: (" + u.label(*report.reflexivity_witness) + ", " +
           u.label(*report.reflexivity_witness) + ") missing)";
  }
  out += "\n";
  return out;
}

std::string axiom_report_to_text(const Universe& u, const AxiomReport& report) {
  return report.valid ? "valid" : axiom_violation_text(u, report);
}

std::string proposition_report_to_text(const PropositionReport& report) {
  std::string out = report.id + ": " + (report.holds ? "PASS" : "FAIL") + " - " + report.claim +
                    " (" + std::to_string(report.instances_checked) + " instances";
  if (report.failures > 0) {
    out += ", " + std::to_string(report.failures) +
           (report.failures == 1 ? " failure" : " failures");
  }
  out += ")\n";
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    if (ce.r1) out += "    r1 = " + relation_to_json(*ce.r1).dump() + "\n";
    if (ce.r2) out += "    r2 = " + relation_to_json(*ce.r2).dump() + "\n";
    if (ce.family) out += "    family = " + family_to_text(*ce.family) + "\n";
    if (ce.subset && ce.r1) out += "    X = " + set_text(ce.r1->universe(), *ce.subset) + "\n";
    if (!ce.note.empty()) out += "    note: " + ce.note + "\n";
  }
  return out;
}

}  // namespace rsm
