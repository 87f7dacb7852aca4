#include "rsm/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace rsm {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kNone: return "none";
    case Axiom::kI1: return "I1";
    case Axiom::kI2: return "I2";
    case Axiom::kI3: return "I3";
    case Axiom::kC1: return "C1";
    case Axiom::kC2: return "C2";
    case Axiom::kC3: return "C3";
  }
  return "?";
}

namespace {

AxiomReport violation(Axiom axiom, std::vector<Mask> sets,
                      std::optional<std::size_t> element = std::nullopt) {
  AxiomReport report;
  report.valid = false;
  report.failed = axiom;
  report.sets = std::move(sets);
  report.element = element;
  return report;
}

// All masks of the given popcount within n bits, ascending (Gosper's hack).
template <typename Fn>
void for_each_mask_of_size(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const Mask limit = full_mask(n);
  Mask m = full_mask(k);
  while (true) {
    fn(m);
    Mask low = m & (0 - m);
    Mask carry = m + low;
    if (carry == 0 || carry > limit) break;
    m = carry | (((m ^ carry) >> 2) / low);
  }
}

}  // namespace

AxiomReport check_independence_axioms(const SetFamily& family) {
  const std::size_t n = family.universe().size();
  if (n > kEnumerationCap) throw UniverseTooLargeError(n, kEnumerationCap);

  if (!family.contains(0)) return violation(Axiom::kI1, {});

  for (Mask member : family.members()) {
    for (Mask sub = (member - 1) & member; sub != member; sub = (sub - 1) & member) {
      if (!family.contains(sub)) return violation(Axiom::kI2, {member, sub});
      if (sub == 0) break;
    }
  }

  for (Mask small : family.members()) {
    for (Mask big : family.members()) {
      if (set_size(small) >= set_size(big)) continue;
      bool augments = false;
      for (Mask rest = big & ~small; rest; rest &= rest - 1) {
        if (family.contains(small | (rest & (0 - rest)))) {
          augments = true;
          break;
        }
      }
      if (!augments) return violation(Axiom::kI3, {small, big});
    }
  }

  return {};
}

AxiomReport check_circuit_axioms(const SetFamily& family) {
  if (family.contains(0)) return violation(Axiom::kC1, {0});

  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      // canonical order sorts by cardinality, so only members[i] can be the
      // proper subset
      if (is_subset(members[i], members[j])) {
        return violation(Axiom::kC2, {members[i], members[j]});
      }
    }
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      Mask shared = members[i] & members[j];
      for (Mask rest = shared; rest; rest &= rest - 1) {
        Mask e = rest & (0 - rest);
        Mask target = (members[i] | members[j]) & ~e;
        bool found = false;
        for (Mask c : members) {
          if (is_subset(c, target)) {
            found = true;
            break;
          }
        }
        if (!found) {
          return violation(Axiom::kC3, {members[i], members[j]},
                           static_cast<std::size_t>(std::countr_zero(e)));
        }
      }
    }
  }

  return {};
}

std::string axiom_violation_text(const Universe& u, const AxiomReport& r) {
  switch (r.failed) {
    case Axiom::kNone:
      return "valid";
    case Axiom::kI1:
      return "I1: the empty set is not a member";
    case Axiom::kI2:
      return "I2: member " + set_text(u, r.sets.at(0)) + " has non-member subset " +
             set_text(u, r.sets.at(1));
    case Axiom::kI3:
      return "I3: no augmenting element for I1=" + set_text(u, r.sets.at(0)) +
             " from I2=" + set_text(u, r.sets.at(1));
    case Axiom::kC1:
      return "C1: the empty set is a member";
    case Axiom::kC2:
      return "C2: " + set_text(u, r.sets.at(0)) + " is a proper subset of " +
             set_text(u, r.sets.at(1));
    case Axiom::kC3:
      return "C3: no circuit inside (C1 u C2) - {e} for C1=" + set_text(u, r.sets.at(0)) +
             ", C2=" + set_text(u, r.sets.at(1)) + ", e=" + u.label(r.element.value());
  }
  return "?";
}

InvalidFamilyError::InvalidFamilyError(const std::string& message, AxiomReport report_in)
    : Error(message), report(std::move(report_in)) {}

Matroid::Matroid(Universe universe, Rep rep, SetFamily family)
    : universe_(std::move(universe)), rep_(rep), family_(std::move(family)) {
  if (rep_ == Rep::kExplicit) {
    lookup_.reserve(family_.size());
    for (Mask m : family_.members()) lookup_.insert(m);
  }
}

Matroid Matroid::from_independents(SetFamily independents) {
  AxiomReport report = check_independence_axioms(independents);
  if (!report.valid) {
    throw InvalidFamilyError(
        "independence family rejected: " + axiom_violation_text(independents.universe(), report),
        report);
  }
  Universe u = independents.universe();
  return Matroid(std::move(u), Rep::kExplicit, std::move(independents));
}

Matroid Matroid::from_circuits(Universe universe, SetFamily circuits) {
  if (circuits.universe() != universe) throw UniverseMismatchError();
  AxiomReport report = check_circuit_axioms(circuits);
  if (!report.valid) {
    throw InvalidFamilyError(
        "circuit family rejected: " + axiom_violation_text(universe, report), report);
  }
  return Matroid(std::move(universe), Rep::kCircuits, std::move(circuits));
}

Matroid matroid_from_circuits(Universe universe, SetFamily circuits) {
  return Matroid::from_circuits(std::move(universe), std::move(circuits));
}

bool Matroid::independent(Mask x) const {
  if (rep_ == Rep::kExplicit) return lookup_.count(x) != 0;
  for (Mask c : family_.members()) {
    if (is_subset(c, x)) return false;
  }
  return true;
}

SetFamily Matroid::independents() const {
  if (rep_ == Rep::kExplicit) return family_;
  const std::size_t n = universe_.size();
  if (n > kEnumerationCap) throw UniverseTooLargeError(n, kEnumerationCap);
  std::vector<Mask> members;
  const Mask all = full_mask(n);
  for (Mask x = 0;; ++x) {
    if (independent(x)) members.push_back(x);
    if (x == all) break;
  }
  return SetFamily(universe_, std::move(members));
}

SetFamily circuits_of(const Matroid& m) {
  if (m.rep() == Matroid::Rep::kCircuits) return m.family();

  const std::size_t n = m.universe().size();
  std::vector<Mask> circuits;
  for (std::size_t k = 0; k <= n; ++k) {
    for_each_mask_of_size(n, k, [&](Mask x) {
      if (m.independent(x)) return;
      for (Mask c : circuits) {
        if (is_subset(c, x)) return;  // contains a smaller circuit
      }
#ifndef NDEBUG
      // minimality: every immediate subset must be independent
      for (Mask rest = x; rest; rest &= rest - 1) {
        assert(m.independent(x & ~(rest & (0 - rest))));
      }
#endif
      circuits.push_back(x);
    });
  }
  return SetFamily(m.universe(), std::move(circuits));
}

bool is_normal(const Matroid& m) {
  for (std::size_t i = 0; i < m.universe().size(); ++i) {
    if (!m.independent(Mask{1} << i)) return false;
  }
  return true;
}

Matroid matroid_union(const Matroid& m1, const Matroid& m2) {
  if (m1.universe() != m2.universe()) throw UniverseMismatchError();
  const std::size_t n = m1.universe().size();
  if (n > kEnumerationCap) throw UniverseTooLargeError(n, kEnumerationCap);

  std::vector<Mask> members;
  const Mask all = full_mask(n);
  for (Mask x = 0;; ++x) {
    // x joins the union family iff it splits into independents of each side
    for (Mask part = x;; part = (part - 1) & x) {
      if (m1.independent(part) && m2.independent(x & ~part)) {
        members.push_back(x);
        break;
      }
      if (part == 0) break;
    }
    if (x == all) break;
  }
  return Matroid::from_independents(SetFamily(m1.universe(), std::move(members)));
}

AxiomReport family_intersection_probe(const Matroid& m1, const Matroid& m2) {
  if (m1.universe() != m2.universe()) throw UniverseMismatchError();
  const SetFamily f1 = m1.independents();
  const SetFamily f2 = m2.independents();
  std::vector<Mask> common;
  std::set_intersection(f1.members().begin(), f1.members().end(), f2.members().begin(),
                        f2.members().end(), std::back_inserter(common), canonical_less);
  return check_independence_axioms(SetFamily(m1.universe(), std::move(common)));
}

}  // namespace rsm
