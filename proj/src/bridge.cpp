#include "rsm/bridge.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "rsm/enumerate.hpp"

namespace rsm {

SetFamily circuits_from_relation(const Relation& rel) {
  require_symmetric_transitive(rel);
  std::vector<Mask> circuits;
  for (std::size_t x = 0; x < rel.size(); ++x) {
    // symmetry makes {x, y} and {y, x} the same set; keep x < y
    for (Mask rest = rel.successor(x) & ~full_mask(x + 1); rest; rest &= rest - 1) {
      circuits.push_back((Mask{1} << x) | (rest & (0 - rest)));
    }
  }
  return SetFamily(rel.universe(), std::move(circuits));
}

InducedMatroid induced_matroid(const Relation& rel) {
  SetFamily circuits = circuits_from_relation(rel);
  Matroid m = Matroid::from_circuits(rel.universe(), circuits);
  return InducedMatroid{rel, std::move(circuits), std::move(m)};
}

ApproxReport circuit_approx(const InducedMatroid& ind, Mask query) {
  const Relation& rel = ind.source;
  const auto& circuits = ind.circuits.members();
  const std::size_t n = rel.size();

  Mask self_loop = 0;       // x related to itself
  Mask lone_self_loop = 0;  // neighborhood is exactly {x}
  Mask isolated = 0;        // empty neighborhood
  for (std::size_t x = 0; x < n; ++x) {
    Mask row = rel.successor(x);
    Mask self = Mask{1} << x;
    if (row & self) self_loop |= self;
    if (row == self) lone_self_loop |= self;
    if (row == 0) isolated |= self;
  }

  Mask meeting_union = 0;  // circuits that meet the query
  for (Mask c : circuits) {
    if (c & query) meeting_union |= c;
  }

  // circuits all of whose overlapping circuits (themselves included) lie
  // inside the query
  Mask enclosed_union = 0;
  for (Mask c : circuits) {
    bool enclosed = true;
    for (Mask other : circuits) {
      if ((other & c) && !is_subset(other, query)) {
        enclosed = false;
        break;
      }
    }
    if (enclosed) enclosed_union |= c;
  }

  ApproxReport report;
  report.query = query;
  report.upper = meeting_union | (query & self_loop);
  report.lower = (query & lone_self_loop) | enclosed_union | isolated;
  report.precise = report.lower == report.upper;
  if (report.upper != 0) {
    report.alpha = Rational::of_counts(set_size(report.lower), set_size(report.upper));
    report.rho = report.alpha->complement();
  }
  return report;
}

Relation induced_relation(const Matroid& m) {
  const Universe& u = m.universe();
  std::vector<Mask> rows(u.size(), 0);
  for (std::size_t x = 0; x < u.size(); ++x) rows[x] = Mask{1} << x;
  for (Mask c : circuits_of(m).members()) {
    if (set_size(c) != 2) continue;
    auto x = static_cast<std::size_t>(std::countr_zero(c));
    auto y = static_cast<std::size_t>(std::countr_zero(c & (c - 1)));
    rows[x] |= Mask{1} << y;
    rows[y] |= Mask{1} << x;
  }
  return Relation(u, std::move(rows));
}

namespace {

std::string pair_list_text(const Universe& u, const std::vector<Mask>& rows) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (Mask rest = rows[x]; rest; rest &= rest - 1) {
      if (!first) out += ", ";
      out += "(" + u.label(x) + ", " +
             u.label(static_cast<std::size_t>(std::countr_zero(rest))) + ")";
      first = false;
    }
  }
  return out + "}";
}

std::string family_text(const SetFamily& fam) {
  std::string out = "{";
  bool first = true;
  for (Mask m : fam.members()) {
    if (!first) out += ", ";
    out += set_text(fam.universe(), m);
    first = false;
  }
  return out + "}";
}

PropositionReport make_report(std::string id, std::string claim) {
  PropositionReport report;
  report.id = std::move(id);
  report.claim = std::move(claim);
  return report;
}

void record_failure(PropositionReport& report, Counterexample ce) {
  report.holds = false;
  ++report.failures;
  if (!report.counterexample) report.counterexample = std::move(ce);
}

Universe grid_universe(std::size_t n) {
  if (n > kGridCap) throw UniverseTooLargeError(n, kGridCap);
  return letters_universe(n);
}

}  // namespace

PropositionReport round_trip_check(const Relation& rel) {
  PropositionReport report =
      make_report("roundtrip", "relation -> matroid -> relation adds exactly the diagonal");
  report.instances_checked = 1;

  Relation regenerated = induced_relation(induced_matroid(rel).matroid);
  std::vector<Mask> expected_rows(rel.size());
  for (std::size_t x = 0; x < rel.size(); ++x) {
    expected_rows[x] = rel.successor(x) | (Mask{1} << x);
  }
  Relation expected(rel.universe(), std::move(expected_rows));

  if (regenerated != expected) {
    Counterexample ce;
    ce.r1 = rel;
    ce.note = "regenerated relation differs from source + diagonal; regenerated pairs = " +
              pair_list_text(rel.universe(), regenerated.rows());
    record_failure(report, std::move(ce));
  }
  return report;
}

PropositionReport verify_induced_circuit_axioms(std::size_t n) {
  PropositionReport report = make_report(
      "p1", "the circuit family induced by a symmetric-and-transitive relation satisfies C1-C3");
  for_each_per(grid_universe(n), [&](const Relation& rel) {
    ++report.instances_checked;
    SetFamily circuits = circuits_from_relation(rel);
    AxiomReport ax = check_circuit_axioms(circuits);
    if (!ax.valid) {
      Counterexample ce;
      ce.r1 = rel;
      ce.family = circuits;
      ce.note = axiom_violation_text(rel.universe(), ax);
      record_failure(report, std::move(ce));
    }
  });
  return report;
}

PropositionReport verify_induced_normality(std::size_t n) {
  PropositionReport report = make_report("p2", "every induced matroid is normal");
  for_each_per(grid_universe(n), [&](const Relation& rel) {
    ++report.instances_checked;
    InducedMatroid ind = induced_matroid(rel);
    if (!is_normal(ind.matroid)) {
      Counterexample ce;
      ce.r1 = rel;
      ce.family = ind.circuits;
      ce.note = "some singleton is dependent";
      record_failure(report, std::move(ce));
    }
  });
  return report;
}

PropositionReport verify_circuit_exchange(std::size_t n) {
  PropositionReport report = make_report(
      "p3",
      "for overlapping induced circuits, some circuit holds both exchanged elements inside the "
      "union");
  for_each_per(grid_universe(n), [&](const Relation& rel) {
    ++report.instances_checked;
    const SetFamily circuits = circuits_from_relation(rel);
    const auto& members = circuits.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j || (members[i] & members[j]) == 0) continue;
        Mask c1 = members[i], c2 = members[j];
        for (Mask e1s = c1 & ~c2; e1s; e1s &= e1s - 1) {
          for (Mask e2s = c2 & ~c1; e2s; e2s &= e2s - 1) {
            Mask pair = (e1s & (0 - e1s)) | (e2s & (0 - e2s));
            bool found = false;
            for (Mask c3 : members) {
              if (is_subset(pair, c3) && is_subset(c3, c1 | c2)) {
                found = true;
                break;
              }
            }
            if (!found) {
              Counterexample ce;
              ce.r1 = rel;
              ce.family = circuits;
              ce.note = "no circuit contains " + set_text(rel.universe(), pair) +
                        " inside " + set_text(rel.universe(), c1 | c2);
              record_failure(report, std::move(ce));
            }
          }
        }
      }
    }
  });
  return report;
}

PropositionReport verify_intersection_inclusion(std::size_t n) {
  PropositionReport report = make_report(
      "p4",
      "independence families of induced matroids are contained in the one induced by the "
      "intersection relation");
  const std::vector<Relation> pers = all_pers(grid_universe(n));
  for (std::size_t i = 0; i < pers.size(); ++i) {
    const SetFamily fam1 = induced_matroid(pers[i]).matroid.independents();
    for (std::size_t j = i; j < pers.size(); ++j) {
      ++report.instances_checked;
      const SetFamily fam2 = induced_matroid(pers[j]).matroid.independents();
      const SetFamily meet =
          induced_matroid(intersect(pers[i], pers[j])).matroid.independents();
      auto included = [&](const SetFamily& sub) {
        return std::includes(meet.members().begin(), meet.members().end(),
                             sub.members().begin(), sub.members().end(), canonical_less);
      };
      if (!included(fam1) || !included(fam2)) {
        Counterexample ce;
        ce.r1 = pers[i];
        ce.r2 = pers[j];
        ce.note = "independence family of an operand escapes the intersection's family";
        record_failure(report, std::move(ce));
      }
    }
  }
  return report;
}

namespace {

bool approx_reports_equal(const ApproxReport& a, const ApproxReport& b) {
  return a.lower == b.lower && a.upper == b.upper && a.alpha == b.alpha && a.rho == b.rho &&
         a.precise == b.precise;
}

void check_approx_instance(PropositionReport& report, const InducedMatroid& ind, Mask query) {
  ++report.instances_checked;
  ApproxReport by_definition = approx_report(ind.source, query);
  ApproxReport by_circuits = circuit_approx(ind, query);
  if (!approx_reports_equal(by_definition, by_circuits)) {
    const Universe& u = ind.source.universe();
    Counterexample ce;
    ce.r1 = ind.source;
    ce.subset = query;
    ce.note = "definition route lower=" + set_text(u, by_definition.lower) +
              " upper=" + set_text(u, by_definition.upper) +
              "; circuit route lower=" + set_text(u, by_circuits.lower) +
              " upper=" + set_text(u, by_circuits.upper);
    record_failure(report, std::move(ce));
  }
}

}  // namespace

PropositionReport verify_circuit_approximation(std::size_t n) {
  PropositionReport report = make_report(
      "p5",
      "circuit-route approximations equal the definition-route operators on every subset");
  for_each_per(grid_universe(n), [&](const Relation& rel) {
    InducedMatroid ind = induced_matroid(rel);
    const Mask all = rel.universe().all();
    for (Mask query = 0;; ++query) {
      check_approx_instance(report, ind, query);
      if (query == all) break;
    }
  });
  return report;
}

PropositionReport verify_circuit_approximation_random(std::size_t n, std::size_t relations,
                                                      std::size_t queries_per_relation,
                                                      std::uint64_t seed) {
  PropositionReport report = make_report(
      "p5/random",
      "circuit-route approximations equal the definition-route operators on random instances");
  Universe u = letters_universe(n);
  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r < relations; ++r) {
    InducedMatroid ind = induced_matroid(random_per(u, rng));
    for (std::size_t q = 0; q < queries_per_relation; ++q) {
      check_approx_instance(report, ind, random_subset(u, rng));
    }
  }
  return report;
}

PropositionReport verify_union_relation_empty(std::size_t n) {
  PropositionReport report = make_report(
      "p7",
      "the union of two induced matroids has an empty circuit family (so its induced relation "
      "is diagonal-only)");
  const std::vector<Relation> pers = all_pers(grid_universe(n));
  std::vector<Matroid> matroids;
  matroids.reserve(pers.size());
  for (const Relation& rel : pers) matroids.push_back(induced_matroid(rel).matroid);

  for (std::size_t i = 0; i < pers.size(); ++i) {
    for (std::size_t j = i; j < pers.size(); ++j) {
      ++report.instances_checked;
      Matroid united = matroid_union(matroids[i], matroids[j]);
      SetFamily union_circuits = circuits_of(united);
      Relation regenerated = induced_relation(united);
      std::size_t off_diagonal = regenerated.pair_count() - regenerated.size();
      if (!union_circuits.empty()) {
        Counterexample ce;
        ce.r1 = pers[i];
        ce.r2 = pers[j];
        ce.family = union_circuits;
        std::ostringstream note;
        note << "claimed empty circuit family, observed " << family_text(union_circuits)
             << "; induced relation has " << off_diagonal << " off-diagonal pairs";
        ce.note = note.str();
        record_failure(report, std::move(ce));
      }
    }
  }
  return report;
}

PropositionReport verify_round_trip(std::size_t n) {
  PropositionReport report =
      make_report("roundtrip", "relation -> matroid -> relation adds exactly the diagonal");
  for_each_per(grid_universe(n), [&](const Relation& rel) {
    PropositionReport one = round_trip_check(rel);
    ++report.instances_checked;
    if (!one.holds) {
      report.holds = false;
      ++report.failures;
      if (!report.counterexample) report.counterexample = one.counterexample;
    }
  });
  return report;
}

std::vector<std::string> all_suite_keys() {
  return {"p1", "p2", "p3", "p4", "p5", "p7", "roundtrip"};
}

std::vector<PropositionReport> verify_propositions(const std::vector<std::string>& suites,
                                                   std::size_t n, std::uint64_t seed) {
  std::vector<PropositionReport> out;
  for (const std::string& key : suites) {
    if (key == "p1") {
      out.push_back(verify_induced_circuit_axioms(n));
    } else if (key == "p2") {
      out.push_back(verify_induced_normality(n));
    } else if (key == "p3") {
      out.push_back(verify_circuit_exchange(n));
    } else if (key == "p4") {
      out.push_back(verify_intersection_inclusion(n));
    } else if (key == "p5") {
      out.push_back(verify_circuit_approximation(n));
      out.push_back(verify_circuit_approximation_random(10, 200, 50, seed));
    } else if (key == "p7") {
      out.push_back(verify_union_relation_empty(n));
    } else if (key == "roundtrip") {
      out.push_back(verify_round_trip(n));
    } else {
      throw Error("unknown verification suite: " + key);
    }
  }
  return out;
}

}  // namespace rsm
