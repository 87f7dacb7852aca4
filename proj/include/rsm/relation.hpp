#ifndef RSM_RELATION_HPP_
#define RSM_RELATION_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsm/universe.hpp"

namespace rsm {

// Binary relation on a Universe, stored as one adjacency bit-row per element:
// bit y of row(x) is set iff the pair (x, y) is in the relation. Immutable
// after construction.
class Relation {
 public:
  explicit Relation(Universe universe);
  Relation(Universe universe, std::vector<Mask> rows);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  bool contains(std::size_t x, std::size_t y) const { return rows_[x] >> y & 1; }

  // Successor neighborhood: everything x relates to.
  Mask successor(std::size_t x) const { return rows_.at(x); }
  Mask successor(const std::string& label) const;

  const std::vector<Mask>& rows() const { return rows_; }
  std::size_t pair_count() const;
  // All pairs in lexicographic (x, y) index order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Relation& o) const {
    return universe_ == o.universe_ && rows_ == o.rows_;
  }
  bool operator!=(const Relation& o) const { return !(*this == o); }

 private:
  Universe universe_;
  std::vector<Mask> rows_;
};

// Builds a relation from label pairs; duplicates are tolerated, unknown
// labels rejected.
Relation make_relation(Universe universe,
                       const std::vector<std::pair<std::string, std::string>>& pairs);

// Symmetry/transitivity per the operator definitions, plus a reflexivity flag
// kept for diagnostics. A witness is present exactly when its flag is false,
// and is the first violation in lexicographic scan order.
struct PropertyReport {
  bool symmetric = true;
  bool transitive = true;
  bool reflexive = true;
  std::optional<std::pair<std::size_t, std::size_t>> symmetry_witness;    // (x,y) in R, (y,x) not
  std::optional<std::array<std::size_t, 3>> transitivity_witness;         // (x,y),(y,z) in R, (x,z) not
  std::optional<std::size_t> reflexivity_witness;                         // (x,x) not in R
};

PropertyReport check_properties(const Relation& rel);

// Raised where an operation needs a symmetric and transitive relation.
struct NotSymmetricTransitiveError : Error {
  NotSymmetricTransitiveError(PropertyReport report, const std::string& detail);
  PropertyReport report;
};

// Throws NotSymmetricTransitiveError (with a labeled witness in the message)
// unless the relation is symmetric and transitive.
void require_symmetric_transitive(const Relation& rel);

Relation intersect(const Relation& r1, const Relation& r2);  // UniverseMismatchError

// Decomposition of a symmetric-and-transitive relation: equivalence classes
// of the elements with nonempty neighborhoods, plus the isolated rest. The
// internal normal form behind the circuit-based approximations.
struct Classes {
  std::vector<Mask> blocks;  // ordered by least element
  Mask isolated = 0;
};

Classes classes(const Relation& rel);  // NotSymmetricTransitiveError

// Rebuilds the relation whose classes are exactly `blocks` (all pairs within
// each block) with everything else isolated.
Relation relation_from_blocks(Universe universe, const std::vector<Mask>& blocks);

}  // namespace rsm

#endif  // RSM_RELATION_HPP_
