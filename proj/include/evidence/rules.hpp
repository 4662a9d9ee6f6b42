#ifndef EVIDENCE_RULES_HPP
#define EVIDENCE_RULES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evidence/mass.hpp"

namespace evidence {

enum class RuleId { Conjunctive, Dempster, PCR5, TotalProportional, Average };

/// Where the range rescaling happens relative to conflict redistribution.
enum class PipelineOrder { NormalizeFirst, RedistributeFirst };

std::string_view to_string(RuleId rule);
std::string_view to_string(PipelineOrder order);
std::optional<RuleId> parse_rule(std::string_view name);
std::optional<PipelineOrder> parse_order(std::string_view name);

/// One pairwise product m1(x)·m2(y) of a conjunctive combination and the set
/// it was credited to (x ∩ y, which is ∅ for conflicting pairs).
struct ProductRecord {
  FocalSet x;
  FocalSet y;
  double product = 0.0;
  FocalSet assigned_to;
};

/// A negative input weight, kept so advisories can cite counter-evidence
/// even after averaging has cancelled it out of the result.
struct NegativeEvidence {
  std::size_t source = 0;
  FocalSet set;
  double weight = 0.0;
};

struct FusionReport {
  /// Combined mass. Its ∅ weight is the conflict still unredistributed.
  MassFunction result;
  /// Conflict before redistribution, on the same scale as `result`.
  double conflict = 0.0;
  /// Product trace on the same scale as `result` (divided by `divisor`).
  std::vector<ProductRecord> trace;
  /// Product of every divisor applied to the raw combination, 1 if none.
  double divisor = 1.0;
  RuleId rule = RuleId::Conjunctive;
  /// PCR5 fractions dropped because their denominator was zero.
  std::size_t skipped_fractions = 0;
  std::vector<NegativeEvidence> negative_evidence;
};

/// Unnormalized conjunctive combination: each product m1(x)·m2(y) goes to
/// x ∩ y, so ∅ collects the total conflict. The result range is the union of
/// the input ranges. Rejects negative weights with RuleGuardError.
FusionReport conjunctive(const MassFunction& m1, const MassFunction& m2);

/// Total conflict k: the sum of products over disjoint focal pairs.
double conflict_mass(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule. Both inputs must be classical (range [0, 1], unit sum)
/// and k must stay below 1.
FusionReport dempster_report(const MassFunction& m1, const MassFunction& m2);
MassFunction dempster(const MassFunction& m1, const MassFunction& m2);

/// Proportional conflict redistribution, two-source form. Each conflicting
/// product m1(x)·m2(y) is returned to x and y in proportion to m1(x) and
/// m2(y). Nonnegative inputs only; the total of the conjunctive combination
/// is conserved and ∅ ends at 0.
FusionReport pcr5(const MassFunction& m1, const MassFunction& m2);

/// Rescales every weight (∅ included) so the total becomes
/// target.lo + target.hi. The divisor is total / (target.lo + target.hi),
/// which is ψ for two strict overmasses on [0, ψ].
FusionReport over_normalize(const FusionReport& report, const MassRange& target);

/// Moves the ∅ weight k onto every nonempty focal set in proportion to its
/// weight: w becomes w·(1 + k/S), S the nonempty total.
FusionReport total_proportional(const FusionReport& report);

/// Per-focal-set arithmetic mean over two or more sources. The only rule that
/// accepts negative weights; it never produces conflict.
FusionReport average(std::span<const MassFunction> masses);

struct FuseOptions {
  RuleId rule = RuleId::PCR5;
  /// Range to normalize into; defaults to the union of the input ranges.
  std::optional<MassRange> target;
  bool normalize = true;
  PipelineOrder order = PipelineOrder::RedistributeFirst;
};

/// Guarded dispatcher. Negative weights are only accepted by Average and
/// Dempster only by classical inputs; violations raise RuleGuardError naming
/// the rules that are allowed. With `normalize`, Conjunctive, PCR5 and
/// TotalProportional results are over-normalized to the target range.
FusionReport fuse(const MassFunction& m1, const MassFunction& m2,
                  const FuseOptions& options = {});

}  // namespace evidence

#endif  // EVIDENCE_RULES_HPP
