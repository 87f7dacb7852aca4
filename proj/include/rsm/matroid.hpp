#ifndef RSM_MATROID_HPP_
#define RSM_MATROID_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rsm/set_family.hpp"

namespace rsm {

enum class Axiom { kNone, kI1, kI2, kI3, kC1, kC2, kC3 };

std::string axiom_name(Axiom a);

// Result of an exhaustive axiom check. On failure, `sets` holds the
// violating family members in role order (e.g. for I3 the pair I1, I2 with
// |I1| < |I2| and no augmenting element; for C3 additionally `element` is
// the shared element e with no circuit inside (C1 u C2) - {e}). Witnesses
// are the first violation in canonical scan order.
struct AxiomReport {
  bool valid = true;
  Axiom failed = Axiom::kNone;
  std::vector<Mask> sets;
  std::optional<std::size_t> element;
};

// Independence axioms: I1 (empty set present), I2 (hereditary),
// I3 (augmentation). The hereditary scan walks submasks of every member, so
// the universe is capped at kEnumerationCap.
AxiomReport check_independence_axioms(const SetFamily& family);

// Circuit axioms: C1 (no empty set), C2 (antichain), C3 (elimination).
// Polynomial in the family size; no universe cap.
AxiomReport check_circuit_axioms(const SetFamily& family);

// Renders a failed report with labels, e.g.
// "C3: no circuit inside (C1 u C2) - {e} for C1={a, b}, C2={a, c}, e=a".
std::string axiom_violation_text(const Universe& u, const AxiomReport& report);

struct InvalidFamilyError : Error {
  InvalidFamilyError(const std::string& message, AxiomReport report);
  AxiomReport report;
};

// Matroid over a finite universe, carried either as an explicit independence
// family or as a circuit family with the derived independence test
// "contains no circuit". Both constructors verify their axioms, so a
// constructed Matroid is always valid.
class Matroid {
 public:
  enum class Rep { kExplicit, kCircuits };

  static Matroid from_independents(SetFamily independents);          // InvalidFamilyError
  static Matroid from_circuits(Universe universe, SetFamily circuits);  // InvalidFamilyError

  const Universe& universe() const { return universe_; }
  Rep rep() const { return rep_; }

  bool independent(Mask x) const;
  bool dependent(Mask x) const { return !independent(x); }

  // The stored family: independents under kExplicit, circuits under kCircuits.
  const SetFamily& family() const { return family_; }

  // Explicit independence family, materialized on demand for circuit-backed
  // matroids (universe capped at kEnumerationCap).
  SetFamily independents() const;

 private:
  Matroid(Universe universe, Rep rep, SetFamily family);

  Universe universe_;
  Rep rep_;
  SetFamily family_;
  std::unordered_set<Mask> lookup_;  // explicit rep only
};

Matroid matroid_from_circuits(Universe universe, SetFamily circuits);

// All minimal dependent sets. For a circuit-backed matroid this is the
// stored family; for an explicit one it is computed by a
// cardinality-ascending scan with subset pruning (O(3^n) worst case).
SetFamily circuits_of(const Matroid& m);

// True iff every singleton is independent; equivalent to the independents
// covering the universe, since the family is hereditary.
bool is_normal(const Matroid& m);

// Union matroid: X is independent iff it splits into an independent set of
// each operand. Returns an explicit-representation matroid.
Matroid matroid_union(const Matroid& m1, const Matroid& m2);

// Probe, not a constructor: intersects the two explicit independence
// families and reports whether the result still satisfies I1-I3. It often
// does not, which is the point.
AxiomReport family_intersection_probe(const Matroid& m1, const Matroid& m2);

}  // namespace rsm

#endif  // RSM_MATROID_HPP_
