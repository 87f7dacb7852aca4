#ifndef RSM_BRIDGE_HPP_
#define RSM_BRIDGE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsm/matroid.hpp"
#include "rsm/rough.hpp"

namespace rsm {

// Circuit family induced by a symmetric-and-transitive relation: all
// unordered related pairs {x, y} with x != y. Guaranteed to satisfy the
// circuit axioms for such relations.
SetFamily circuits_from_relation(const Relation& rel);  // NotSymmetricTransitiveError

// The matroid those circuits determine, kept next to its source relation.
struct InducedMatroid {
  Relation source;
  SetFamily circuits;  // all members have exactly two elements
  Matroid matroid;     // circuit-backed representation
};

InducedMatroid induced_matroid(const Relation& rel);

// Circuit-route approximation operators:
//   upper(X) = union of circuits meeting X, plus self-related members of X
//   lower(X) = members of X whose whole neighborhood is themselves,
//              plus circuits all of whose neighbors-by-circuit lie inside X,
//              plus every element with an empty neighborhood
// Must agree exactly with the definition-level operators in rough.hpp; that
// equality is the load-bearing test of this module.
ApproxReport circuit_approx(const InducedMatroid& ind, Mask query);

// Relation generated by a matroid: the diagonal plus both orientations of
// every 2-element circuit. Circuits of other sizes contribute no pairs.
// Always symmetric and transitive.
Relation induced_relation(const Matroid& m);

// One falsifiable claim checked over concrete instances. `counterexample`
// holds the first failing instance, serialized so it can be re-fed to the
// CLI; `failures` counts all of them.
struct Counterexample {
  std::optional<Relation> r1;
  std::optional<Relation> r2;
  std::optional<SetFamily> family;
  std::optional<Mask> subset;
  std::string note;  // observed vs. claimed, human-readable
};

struct PropositionReport {
  std::string id;     // suite key: "p1".."p7", "roundtrip"
  std::string claim;  // what was checked
  bool holds = true;
  std::uint64_t instances_checked = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> counterexample;
};

// Relation -> matroid -> relation closes up to the diagonal: the regenerated
// relation equals the source plus all reflexive pairs.
PropositionReport round_trip_check(const Relation& rel);  // NotSymmetricTransitiveError

// Verification grids. Each runs one claim over every symmetric-and-transitive
// relation (or pair of them) on the first `n` letter labels, n capped by
// kGridCap. Random extensions use the given seed for reproducibility.
inline constexpr std::size_t kGridCap = 6;

PropositionReport verify_induced_circuit_axioms(std::size_t n);        // p1
PropositionReport verify_induced_normality(std::size_t n);             // p2
PropositionReport verify_circuit_exchange(std::size_t n);              // p3
PropositionReport verify_intersection_inclusion(std::size_t n);        // p4
PropositionReport verify_circuit_approximation(std::size_t n);         // p5
PropositionReport verify_union_relation_empty(std::size_t n);          // p7, fails by design
PropositionReport verify_round_trip(std::size_t n);                    // roundtrip

// p5 extension: random relations/query sets beyond the exhaustive grid.
PropositionReport verify_circuit_approximation_random(std::size_t n, std::size_t relations,
                                                      std::size_t queries_per_relation,
                                                      std::uint64_t seed);

// Every suite by key, in fixed order. Unknown keys throw Error.
std::vector<PropositionReport> verify_propositions(const std::vector<std::string>& suites,
                                                   std::size_t n, std::uint64_t seed);

std::vector<std::string> all_suite_keys();

}  // namespace rsm

#endif  // RSM_BRIDGE_HPP_
