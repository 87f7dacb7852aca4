#ifndef RSM_SET_FAMILY_HPP_
#define RSM_SET_FAMILY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "rsm/universe.hpp"

namespace rsm {

// Duplicate-free collection of subsets of one universe, kept sorted in
// canonical (cardinality, lexicographic) order.
class SetFamily {
 public:
  explicit SetFamily(Universe universe) : universe_(std::move(universe)) {}
  SetFamily(Universe universe, std::vector<Mask> members);

  // From label lists, e.g. parsed JSON [["a","b"],["c"]].
  static SetFamily from_labels(Universe universe,
                               const std::vector<std::vector<std::string>>& members);

  const Universe& universe() const { return universe_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Mask m) const;

  bool operator==(const SetFamily& o) const {
    return universe_ == o.universe_ && members_ == o.members_;
  }
  bool operator!=(const SetFamily& o) const { return !(*this == o); }

 private:
  Universe universe_;
  std::vector<Mask> members_;
};

}  // namespace rsm

#endif  // RSM_SET_FAMILY_HPP_
