#include "evidence/regime.hpp"

#include "detail.hpp"

namespace evidence {
namespace {

using detail::num;

std::vector<FocalSet> positive_sets(const MassFunction& m) {
  std::vector<FocalSet> out;
  for (const auto& [set, w] : m.assignments()) {
    if (!set.empty() && w > 0.0) out.push_back(set);
  }
  return out;
}

Advisory classify(const MassFunction& m,
                  const std::vector<std::pair<FocalSet, double>>& negatives) {
  Advisory advisory;
  advisory.total = m.total();
  const auto& frame = m.frame();
  const std::string sum_text = "sum of masses " + num(advisory.total);

  if (!negatives.empty()) {
    advisory.kind = AdvisoryKind::CounterEvidenceDiscount;
    advisory.rationale = sum_text + "; counter-evidence:";
    for (const auto& [set, w] : negatives) {
      advisory.rationale += " m(" + render_focal(set, frame) + ") = " + num(w) + ";";
      advisory.triggering_sets.push_back(set);
    }
    advisory.rationale += " discount the reports these weights refute";
    return advisory;
  }
  switch (classify_sum(m)) {
    case SumClass::Surplus:
      advisory.kind = AdvisoryKind::CriticalPriority;
      advisory.rationale = sum_text + " exceeds 1: redundant agreeing evidence";
      advisory.triggering_sets = positive_sets(m);
      break;
    case SumClass::Deficit:
    case SumClass::NegativeTotal:
      advisory.kind = AdvisoryKind::Reconnaissance;
      advisory.unknown_mass = 1.0 - advisory.total;
      advisory.rationale = sum_text + " is below 1 with " +
                           num(advisory.unknown_mass) +
                           " unknown: gather more evidence before acting";
      advisory.triggering_sets = positive_sets(m);
      break;
    case SumClass::Balanced:
      advisory.kind = AdvisoryKind::Nominal;
      advisory.rationale = sum_text + " is 1";
      break;
  }
  return advisory;
}

}  // namespace

std::string_view to_string(AdvisoryKind kind) {
  switch (kind) {
    case AdvisoryKind::CriticalPriority: return "critical-priority";
    case AdvisoryKind::Reconnaissance: return "reconnaissance";
    case AdvisoryKind::CounterEvidenceDiscount: return "counter-evidence-discount";
    case AdvisoryKind::Nominal: return "nominal";
  }
  return "?";
}

Advisory assess(const MassFunction& m) {
  return classify(m, m.negative_weights());
}

Advisory assess_fusion(const FusionReport& report, double conflict_warning) {
  auto negatives = report.result.negative_weights();
  for (const auto& evidence : report.negative_evidence) {
    negatives.emplace_back(evidence.set, evidence.weight);
  }
  auto advisory = classify(report.result, negatives);
  advisory.rationale += "; rule " + std::string(to_string(report.rule)) +
                        ", conflict k = " + num(report.conflict) +
                        ", divisor " + num(report.divisor);
  if (report.conflict > conflict_warning) {
    advisory.rationale += "; warning: conflict exceeds " + num(conflict_warning);
  }
  return advisory;
}

}  // namespace evidence
