#include "rsm/universe.hpp"

#include <bit>
#include <utility>

namespace rsm {

bool lex_less(Mask a, Mask b) {
  // Compare as ascending index sequences; a proper prefix sorts first.
  while (a && b) {
    int i = std::countr_zero(a);
    int j = std::countr_zero(b);
    if (i != j) return i < j;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool canonical_less(Mask a, Mask b) {
  std::size_t ca = set_size(a), cb = set_size(b);
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxUniverseSize) {
    throw UniverseTooLargeError(labels_.size(), kMaxUniverseSize);
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw DuplicateLabelError(labels_[i]);
  }
}

std::size_t Universe::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabelError(label);
  return it->second;
}

Mask Universe::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& label : labels) m |= Mask{1} << index_of(label);
  return m;
}

std::vector<std::string> Universe::labels_of(Mask m) const {
  std::vector<std::string> out;
  out.reserve(set_size(m));
  for (Mask rest = m; rest; rest &= rest - 1) {
    out.push_back(labels_[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return out;
}

Universe letters_universe(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

std::string set_text(const Universe& u, Mask m) {
  std::string out = "{";
  bool first = true;
  for (Mask rest = m; rest; rest &= rest - 1) {
    if (!first) out += ", ";
    out += u.label(static_cast<std::size_t>(std::countr_zero(rest)));
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rsm
