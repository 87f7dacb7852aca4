#ifndef RSM_UNIVERSE_HPP_
#define RSM_UNIVERSE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsm/errors.hpp"

namespace rsm {

// A subset of a universe is a bitmask over element indices, element 0 in the
// lowest bit. Universes are capped at 64 elements so any subset fits in one
// word; operations that walk all 2^n subsets use the tighter kEnumerationCap.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxUniverseSize = 64;
inline constexpr std::size_t kEnumerationCap = 20;

inline std::size_t set_size(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask full_mask(std::size_t n) {
  if (n == 0) return 0;
  if (n >= 64) return ~Mask{0};
  return (Mask{1} << n) - 1;
}

// Canonical set order: cardinality first, then lexicographic by ascending
// element index. Used everywhere a family or witness is serialized.
bool lex_less(Mask a, Mask b);
bool canonical_less(Mask a, Mask b);

// Ordered finite set of distinct labels. Element order is fixed at
// construction and drives all canonical output ordering.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabelError

  Mask all() const { return full_mask(size()); }
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  bool operator==(const Universe& other) const { return labels_ == other.labels_; }
  bool operator!=(const Universe& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Convenience for tests and the verify grids: labels "a", "b", ... (n <= 26).
Universe letters_universe(std::size_t n);

// Paper-style rendering: "{a, b, d}", "{}" when empty.
std::string set_text(const Universe& u, Mask m);

}  // namespace rsm

#endif  // RSM_UNIVERSE_HPP_
