#include "rsm/enumerate.hpp"

#include <bit>
#include <cstdint>

namespace rsm {

namespace {

void partition_rec(Mask domain, std::vector<Mask>& acc,
                   const std::function<void(const std::vector<Mask>&)>& fn) {
  if (domain == 0) {
    fn(acc);
    return;
  }
  // The lowest element anchors a block; every subset of the rest can join it.
  Mask anchor = domain & (0 - domain);
  Mask rest = domain & ~anchor;
  Mask sub = 0;
  while (true) {
    Mask block = anchor | sub;
    acc.push_back(block);
    partition_rec(domain & ~block, acc, fn);
    acc.pop_back();
    if (sub == rest) break;
    sub = (sub - rest) & rest;  // next submask of rest, ascending
  }
}

}  // namespace

void for_each_partition(Mask domain, const std::function<void(const std::vector<Mask>&)>& fn) {
  std::vector<Mask> acc;
  partition_rec(domain, acc, fn);
}

void for_each_per(const Universe& universe, const std::function<void(const Relation&)>& fn) {
  const std::size_t n = universe.size();
  if (n > kEnumerationCap) throw UniverseTooLargeError(n, kEnumerationCap);
  const Mask all = full_mask(n);
  for (Mask domain = 0;; ++domain) {
    for_each_partition(domain, [&](const std::vector<Mask>& blocks) {
      fn(relation_from_blocks(universe, blocks));
    });
    if (domain == all) break;
  }
}

std::vector<Relation> all_pers(const Universe& universe) {
  std::vector<Relation> out;
  for_each_per(universe, [&](const Relation& rel) { out.push_back(rel); });
  return out;
}

std::uint64_t count_pers(std::size_t n) {
  // Sum over domains of Bell numbers: binomial(n, k) * B(k), via the Bell
  // triangle for B and Pascal for the binomials.
  std::vector<std::uint64_t> bell{1};  // B(0..)
  {
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (std::uint64_t v : row) next.push_back(next.back() + v);
      row = std::move(next);
      bell.push_back(row.front());
    }
  }
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    total += binom * bell[k];
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

void for_each_relation(const Universe& universe, const std::function<void(const Relation&)>& fn) {
  const std::size_t n = universe.size();
  if (n > 4) throw UniverseTooLargeError(n, 4);  // 2^(n^2) relations
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Mask> rows(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      rows[x] = (code >> (x * n)) & full_mask(n);
    }
    fn(Relation(universe, std::move(rows)));
  }
}

Relation random_per(const Universe& universe, std::mt19937_64& rng) {
  const std::size_t n = universe.size();
  std::vector<Mask> buckets(n + 1, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n);  // 0 = isolated
  for (std::size_t i = 0; i < n; ++i) buckets[pick(rng)] |= Mask{1} << i;
  std::vector<Mask> blocks;
  for (std::size_t b = 1; b <= n; ++b) {
    if (buckets[b]) blocks.push_back(buckets[b]);
  }
  return relation_from_blocks(universe, blocks);
}

Relation random_relation(const Universe& universe, std::mt19937_64& rng) {
  const std::size_t n = universe.size();
  std::vector<Mask> rows(n);
  for (auto& row : rows) row = rng() & full_mask(n);
  return Relation(universe, std::move(rows));
}

Mask random_subset(const Universe& universe, std::mt19937_64& rng) {
  return rng() & universe.all();
}

}  // namespace rsm
