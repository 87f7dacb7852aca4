#include "rsm/set_family.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace rsm {

SetFamily::SetFamily(Universe universe, std::vector<Mask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
#ifndef NDEBUG
  for (Mask m : members_) assert(is_subset(m, universe_.all()));
#endif
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_labels(Universe universe,
                                 const std::vector<std::vector<std::string>>& members) {
  std::vector<Mask> masks;
  masks.reserve(members.size());
  for (const auto& labels : members) masks.push_back(universe.mask_of(labels));
  return SetFamily(std::move(universe), std::move(masks));
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

}  // namespace rsm
