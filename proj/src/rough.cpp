#include "rsm/rough.hpp"

namespace rsm {

Mask lower_approx(const Relation& rel, Mask x) {
  Mask out = 0;
  const auto& rows = rel.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~x) == 0) out |= Mask{1} << i;
  }
  return out;
}

Mask upper_approx(const Relation& rel, Mask x) {
  Mask out = 0;
  const auto& rows = rel.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] & x) out |= Mask{1} << i;
  }
  return out;
}

ApproxReport approx_report(const Relation& rel, Mask query) {
  ApproxReport report;
  report.query = query;
  report.lower = lower_approx(rel, query);
  report.upper = upper_approx(rel, query);
  report.precise = report.lower == report.upper;
  if (report.upper != 0) {
    report.alpha = Rational::of_counts(set_size(report.lower), set_size(report.upper));
    report.rho = report.alpha->complement();
  }
  return report;
}

ProbeReport probe_property(const Relation& rel, RelationProperty property) {
  const std::size_t n = rel.size();
  if (n > kEnumerationCap) throw UniverseTooLargeError(n, kEnumerationCap);

  ProbeReport report;
  report.property = property;
  const Mask all = rel.universe().all();
  for (Mask x = 0;; ++x) {
    bool ok;
    if (property == RelationProperty::kSymmetric) {
      ok = is_subset(x, lower_approx(rel, upper_approx(rel, x)));
    } else {
      Mask lo = lower_approx(rel, x);
      ok = is_subset(lo, lower_approx(rel, lo));
    }
    if (!ok) {
      report.holds = false;
      report.witness = x;
      break;
    }
    if (x == all) break;
  }
  return report;
}

}  // namespace rsm
