#ifndef RSM_ROUGH_HPP_
#define RSM_ROUGH_HPP_

#include <optional>

#include "rsm/rational.hpp"
#include "rsm/relation.hpp"

namespace rsm {

// Definition-level approximation operators:
//   lower(X) = {x | successor(x) subset of X}
//   upper(X) = {x | successor(x) meets X}
// Elements with empty neighborhoods always land in lower(X), including when
// they are outside X, so lower(X) need not be a subset of upper(X).
Mask lower_approx(const Relation& rel, Mask x);
Mask upper_approx(const Relation& rel, Mask x);

// Approximation quality alpha = |lower|/|upper| as an exact rational and
// roughness rho = 1 - alpha. Both are absent when upper is empty: the ratio
// has no defined value there and we refuse to invent one.
struct ApproxReport {
  Mask query = 0;
  Mask lower = 0;
  Mask upper = 0;
  std::optional<Rational> alpha;
  std::optional<Rational> rho;
  bool precise = false;  // lower == upper
};

ApproxReport approx_report(const Relation& rel, Mask query);

enum class RelationProperty { kSymmetric, kTransitive };

// Operator-identity probe over all subsets of the universe:
//   symmetric   iff  X subset of lower(upper(X))  for all X
//   transitive  iff  lower(X) subset of lower(lower(X))  for all X
// Subsets are scanned in mask-ascending order; the witness is the first
// violating X. Exponential, so the universe is capped at kEnumerationCap.
struct ProbeReport {
  RelationProperty property = RelationProperty::kSymmetric;
  bool holds = true;
  std::optional<Mask> witness;
};

ProbeReport probe_property(const Relation& rel, RelationProperty property);

}  // namespace rsm

#endif  // RSM_ROUGH_HPP_
