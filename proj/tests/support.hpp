// Shared fixtures and definition-level oracles for the test suites. The
// oracles deliberately recompute everything from label pairs or raw family
// scans, independent of the bitmask implementation paths they check.

#ifndef RSM_TESTS_SUPPORT_HPP_
#define RSM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsm/enumerate.hpp"
#include "rsm/matroid.hpp"
#include "rsm/relation.hpp"

namespace rsm::testing {

// "aa ab ba" -> {(a,a),(a,b),(b,a)}; single-character labels only.
inline std::vector<std::pair<std::string, std::string>> pairs_from(const std::string& spec) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(spec);
  std::string tok;
  while (ss >> tok) {
    out.emplace_back(std::string(1, tok.at(0)), std::string(1, tok.at(1)));
  }
  return out;
}

inline Relation rel(std::size_t n, const std::string& pair_spec) {
  return make_relation(letters_universe(n), pairs_from(pair_spec));
}

// "ace" -> bits 0, 2, 4
inline Mask msk(const std::string& letters) {
  Mask m = 0;
  for (char c : letters) m |= Mask{1} << (c - 'a');
  return m;
}

inline std::vector<Mask> family(const std::vector<std::string>& sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(msk(s));
  return out;
}

// Fixtures used across suites, named by their shape.
// One two-element class {a, b}, c isolated.
inline Relation pair_class_ab_on3() { return rel(3, "aa ab ba bb"); }
// One two-element class {a, c}, b isolated.
inline Relation pair_class_ac_on3() { return rel(3, "aa ac ca cc"); }
// Class {a, b, c} with d isolated / class {a, b, d} with c isolated.
inline Relation class_abc_on4() { return rel(4, "aa ab ba bb ac ca bc cb cc"); }
inline Relation class_abd_on4() { return rel(4, "aa ab ba bb ad da bd db dd"); }
// Six elements: class {a, b, d}, self-loops c and e, f isolated.
inline Relation mixed_per_six() { return rel(6, "aa ab ba bb ad da bd db dd cc ee"); }

// ---- definition-level relation oracle over label pairs ----

struct OracleRelation {
  std::vector<std::string> labels;
  std::set<std::pair<std::string, std::string>> pairs;

  OracleRelation(std::size_t n, const std::string& pair_spec) {
    for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    for (auto& p : pairs_from(pair_spec)) pairs.insert(p);
  }

  std::set<std::string> succ(const std::string& x) const {
    std::set<std::string> out;
    for (const auto& y : labels) {
      if (pairs.count({x, y})) out.insert(y);
    }
    return out;
  }

  std::set<std::string> lower(const std::set<std::string>& query) const {
    std::set<std::string> out;
    for (const auto& x : labels) {
      std::set<std::string> s = succ(x);
      if (std::includes(query.begin(), query.end(), s.begin(), s.end())) out.insert(x);
    }
    return out;
  }

  std::set<std::string> upper(const std::set<std::string>& query) const {
    std::set<std::string> out;
    for (const auto& x : labels) {
      for (const auto& y : succ(x)) {
        if (query.count(y)) {
          out.insert(x);
          break;
        }
      }
    }
    return out;
  }

  bool symmetric() const {
    for (const auto& [x, y] : pairs) {
      if (!pairs.count({y, x})) return false;
    }
    return true;
  }

  bool transitive() const {
    for (const auto& [x, y] : pairs) {
      for (const auto& z : labels) {
        if (pairs.count({y, z}) && !pairs.count({x, z})) return false;
      }
    }
    return true;
  }
};

inline std::set<std::string> lset(const std::string& letters) {
  std::set<std::string> out;
  for (char c : letters) out.emplace(1, c);
  return out;
}

// ---- definition-level matroid oracles over raw mask families ----

inline bool oracle_hereditary(const std::set<Mask>& fam) {
  for (Mask m : fam) {
    for (Mask sub = (m - 1) & m; sub != m; sub = (sub - 1) & m) {
      if (!fam.count(sub)) return false;
      if (sub == 0) break;
    }
  }
  return true;
}

inline bool oracle_exchange(const std::set<Mask>& fam) {
  for (Mask i1 : fam) {
    for (Mask i2 : fam) {
      if (set_size(i1) >= set_size(i2)) continue;
      bool ok = false;
      for (Mask rest = i2 & ~i1; rest; rest &= rest - 1) {
        if (fam.count(i1 | (rest & (0 - rest)))) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

inline bool oracle_is_matroid(const std::set<Mask>& fam) {
  return fam.count(0) && oracle_hereditary(fam) && oracle_exchange(fam);
}

// Minimal dependent sets straight from the definition: dependent with every
// proper subset independent.
inline std::vector<Mask> oracle_circuits(const std::set<Mask>& fam, std::size_t n) {
  std::vector<Mask> out;
  const Mask all = full_mask(n);
  for (Mask x = 0;; ++x) {
    if (!fam.count(x)) {
      bool minimal = true;
      for (Mask sub = (x - 1) & x; sub != x; sub = (sub - 1) & x) {
        if (!fam.count(sub)) {
          minimal = false;
          break;
        }
        if (sub == 0) break;
      }
      if (minimal) out.push_back(x);
    }
    if (x == all) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Product-formula union family {I1 | I2}, the oracle for matroid_union.
inline std::set<Mask> oracle_union_family(const std::set<Mask>& f1, const std::set<Mask>& f2) {
  std::set<Mask> out;
  for (Mask a : f1) {
    for (Mask b : f2) out.insert(a | b);
  }
  return out;
}

// ---- exhaustive matroid enumeration ----

// Every hereditary family on n elements (down-set DFS over masks in
// cardinality-ascending order), filtered by the exchange axiom. Yields every
// labeled matroid exactly once; cross-checked against the brute powerset
// scan in the matroid suite.
inline std::vector<std::set<Mask>> all_matroids(std::size_t n) {
  std::vector<Mask> order;
  const Mask all = full_mask(n);
  for (Mask x = 0;; ++x) {
    order.push_back(x);
    if (x == all) break;
  }
  std::sort(order.begin(), order.end(), canonical_less);

  std::vector<std::set<Mask>> out;
  std::vector<char> in(order.size(), 0);
  std::vector<Mask> chosen;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      if (chosen.empty()) return;
      std::set<Mask> fam(chosen.begin(), chosen.end());
      if (oracle_exchange(fam)) out.push_back(std::move(fam));
      return;
    }
    Mask m = order[idx];
    // include only if all immediate submasks are in
    bool can_include = true;
    for (Mask rest = m; rest; rest &= rest - 1) {
      if (!in[m & ~(rest & (0 - rest))]) {
        can_include = false;
        break;
      }
    }
    if (can_include) {
      in[m] = 1;
      chosen.push_back(m);
      self(self, idx + 1);
      chosen.pop_back();
      in[m] = 0;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  return out;
}

// ---- random structured matroids for the randomized grids ----

inline Matroid random_partition_matroid(const Universe& u, std::mt19937_64& rng) {
  const std::size_t n = u.size();
  std::vector<Mask> blocks(n, 0);
  std::uniform_int_distribution<std::size_t> pick_block(0, n - 1);
  for (std::size_t i = 0; i < n; ++i) blocks[pick_block(rng)] |= Mask{1} << i;
  std::vector<std::pair<Mask, std::size_t>> capped;
  for (Mask b : blocks) {
    if (!b) continue;
    std::uniform_int_distribution<std::size_t> pick_cap(1, set_size(b));
    capped.emplace_back(b, pick_cap(rng));
  }
  std::vector<Mask> members;
  const Mask all = u.all();
  for (Mask x = 0;; ++x) {
    bool ok = true;
    for (const auto& [b, cap] : capped) {
      if (set_size(x & b) > cap) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
    if (x == all) break;
  }
  return Matroid::from_independents(SetFamily(u, std::move(members)));
}

inline Matroid random_uniform_matroid(const Universe& u, std::mt19937_64& rng) {
  const std::size_t n = u.size();
  std::uniform_int_distribution<std::size_t> pick_rank(0, n);
  const std::size_t rank = pick_rank(rng);
  std::vector<Mask> members;
  const Mask all = u.all();
  for (Mask x = 0;; ++x) {
    if (set_size(x) <= rank) members.push_back(x);
    if (x == all) break;
  }
  return Matroid::from_independents(SetFamily(u, std::move(members)));
}

}  // namespace rsm::testing

#endif  // RSM_TESTS_SUPPORT_HPP_
