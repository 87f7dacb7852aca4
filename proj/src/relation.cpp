#include "rsm/relation.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <utility>

namespace rsm {

Relation::Relation(Universe universe)
    : universe_(std::move(universe)), rows_(universe_.size(), 0) {}

Relation::Relation(Universe universe, std::vector<Mask> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
  assert(rows_.size() == universe_.size());
  for ([[maybe_unused]] Mask row : rows_) assert(is_subset(row, universe_.all()));
}

Mask Relation::successor(const std::string& label) const {
  return rows_.at(universe_.index_of(label));
}

std::size_t Relation::pair_count() const {
  std::size_t total = 0;
  for (Mask row : rows_) total += set_size(row);
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (Mask rest = rows_[x]; rest; rest &= rest - 1) {
      out.emplace_back(x, static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }
  return out;
}

Relation make_relation(Universe universe,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Mask> rows(universe.size(), 0);
  for (const auto& [x, y] : pairs) {
    rows[universe.index_of(x)] |= Mask{1} << universe.index_of(y);
  }
  return Relation(std::move(universe), std::move(rows));
}

PropertyReport check_properties(const Relation& rel) {
  PropertyReport report;
  const std::size_t n = rel.size();

  for (std::size_t x = 0; x < n && report.symmetric; ++x) {
    for (Mask rest = rel.successor(x); rest; rest &= rest - 1) {
      auto y = static_cast<std::size_t>(std::countr_zero(rest));
      if (!rel.contains(y, x)) {
        report.symmetric = false;
        report.symmetry_witness = {x, y};
        break;
      }
    }
  }

  for (std::size_t x = 0; x < n && report.transitive; ++x) {
    for (Mask rest = rel.successor(x); rest && report.transitive; rest &= rest - 1) {
      auto y = static_cast<std::size_t>(std::countr_zero(rest));
      // everything reachable from y but not from x
      Mask missing = rel.successor(y) & ~rel.successor(x);
      if (missing) {
        auto z = static_cast<std::size_t>(std::countr_zero(missing));
        report.transitive = false;
        report.transitivity_witness = {{x, y, z}};
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!rel.contains(x, x)) {
      report.reflexive = false;
      report.reflexivity_witness = x;
      break;
    }
  }
  // the empty universe is vacuously reflexive

  return report;
}

namespace {

std::string witness_text(const Relation& rel, const PropertyReport& r) {
  const Universe& u = rel.universe();
  std::ostringstream os;
  if (r.symmetry_witness) {
    os << "(" << u.label(r.symmetry_witness->first) << ", "
       << u.label(r.symmetry_witness->second) << ") present without its reverse";
  } else if (r.transitivity_witness) {
    const auto& w = *r.transitivity_witness;
    os << "(" << u.label(w[0]) << ", " << u.label(w[1]) << ") and (" << u.label(w[1])
       << ", " << u.label(w[2]) << ") present but not (" << u.label(w[0]) << ", "
       << u.label(w[2]) << ")";
  }
  return os.str();
}

}  // namespace

NotSymmetricTransitiveError::NotSymmetricTransitiveError(PropertyReport report_in,
                                                         const std::string& detail)
    : Error(detail.empty() ? std::string("relation is not symmetric and transitive")
                           : "relation is not symmetric and transitive: " + detail),
      report(std::move(report_in)) {}

void require_symmetric_transitive(const Relation& rel) {
  PropertyReport props = check_properties(rel);
  if (!props.symmetric || !props.transitive) {
    throw NotSymmetricTransitiveError(props, witness_text(rel, props));
  }
}

Relation intersect(const Relation& r1, const Relation& r2) {
  if (r1.universe() != r2.universe()) throw UniverseMismatchError();
  std::vector<Mask> rows(r1.size());
  for (std::size_t x = 0; x < r1.size(); ++x) rows[x] = r1.successor(x) & r2.successor(x);
  return Relation(r1.universe(), std::move(rows));
}

Classes classes(const Relation& rel) {
  require_symmetric_transitive(rel);

  Classes result;
  Mask seen = 0;
  for (std::size_t x = 0; x < rel.size(); ++x) {
    Mask neighborhood = rel.successor(x);
    if (neighborhood == 0) {
      result.isolated |= Mask{1} << x;
      continue;
    }
    if (seen >> x & 1) continue;
    // For a symmetric and transitive relation a nonempty neighborhood is
    // exactly the class of x.
    result.blocks.push_back(neighborhood);
    seen |= neighborhood;
  }
  return result;
}

Relation relation_from_blocks(Universe universe, const std::vector<Mask>& blocks) {
  std::vector<Mask> rows(universe.size(), 0);
  for (Mask block : blocks) {
    for (Mask rest = block; rest; rest &= rest - 1) {
      rows[static_cast<std::size_t>(std::countr_zero(rest))] = block;
    }
  }
  return Relation(std::move(universe), std::move(rows));
}

}  // namespace rsm
