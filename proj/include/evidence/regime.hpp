#ifndef EVIDENCE_REGIME_HPP
#define EVIDENCE_REGIME_HPP

#include <string>
#include <string_view>
#include <vector>

#include "evidence/mass.hpp"
#include "evidence/rules.hpp"

namespace evidence {

enum class AdvisoryKind {
  CriticalPriority,         // evidence totals above 1: redundant consensus
  Reconnaissance,           // totals below 1: a coverage gap
  CounterEvidenceDiscount,  // negative weights refute some report
  Nominal,
};

std::string_view to_string(AdvisoryKind kind);

struct Advisory {
  AdvisoryKind kind = AdvisoryKind::Nominal;
  std::string rationale;
  std::vector<FocalSet> triggering_sets;
  double total = 0.0;
  // 1 - total for Reconnaissance, 0 otherwise.
  double unknown_mass = 0.0;
};

inline constexpr double kDefaultConflictWarning = 0.5;

/// Precedence: any negative weight, then surplus, then deficit, else nominal.
Advisory assess(const MassFunction& m);

/// assess() on the fused mass. Negative weights recorded on the inputs count
/// as counter-evidence even if the result no longer has any. The rationale
/// also cites k and the divisor, with a warning when k > conflict_warning.
Advisory assess_fusion(const FusionReport& report,
                       double conflict_warning = kDefaultConflictWarning);

}  // namespace evidence

#endif  // EVIDENCE_REGIME_HPP
