#ifndef RSM_ENUMERATE_HPP_
#define RSM_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rsm/relation.hpp"

namespace rsm {

// All set partitions of the elements of `domain`, each partition a list of
// disjoint nonempty blocks covering it. The empty domain has exactly one
// partition, the empty one.
void for_each_partition(Mask domain, const std::function<void(const std::vector<Mask>&)>& fn);

// Every symmetric-and-transitive relation on the universe, exactly once:
// partitions of every subset, elements outside the subset isolated.
// Deterministic order (subset mask ascending, partitions in discovery order).
void for_each_per(const Universe& universe, const std::function<void(const Relation&)>& fn);

std::vector<Relation> all_pers(const Universe& universe);

// Count without materializing; equals the Bell number B(n+1).
std::uint64_t count_pers(std::size_t n);

// All 2^(n^2) relations on the universe. Only sane for n <= 3.
void for_each_relation(const Universe& universe, const std::function<void(const Relation&)>& fn);

// Uniform-ish random symmetric-and-transitive relation: every element is
// either isolated or thrown into one of n buckets; nonempty buckets become
// classes.
Relation random_per(const Universe& universe, std::mt19937_64& rng);

// Random relation with each pair present independently with probability 1/2.
Relation random_relation(const Universe& universe, std::mt19937_64& rng);

Mask random_subset(const Universe& universe, std::mt19937_64& rng);

}  // namespace rsm

#endif  // RSM_ENUMERATE_HPP_
