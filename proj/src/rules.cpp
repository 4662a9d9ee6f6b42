#include "evidence/rules.hpp"

#include <array>

#include "detail.hpp"
#include "evidence/error.hpp"

namespace evidence {
namespace {

using detail::num;

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw ValidationError("frame mismatch: masses are over different frames");
  }
}

void reject_negative(const MassFunction& m, std::string_view rule) {
  for (const auto& [set, w] : m.negative_weights()) {
    throw RuleGuardError(std::string(rule) + " rejects negative weight " +
                         num(w) + " on " + render_focal(set, m.frame()) +
                         "; only the average rule accepts negative weights");
  }
}

void reject_conflict_input(const MassFunction& m, std::string_view rule) {
  if (m.conflict() != 0.0) {
    throw ValidationError(std::string(rule) + " needs inputs without mass on ∅, got " +
                          num(m.conflict()));
  }
}

FusionReport scaled(const FusionReport& report, double divisor, MassRange range) {
  Assignments weights;
  for (const auto& [set, w] : report.result.assignments()) {
    weights.emplace(set, w / divisor);
  }
  FusionReport out = report;
  out.result = MassFunction::intermediate(report.result.frame(), std::move(weights), range);
  out.conflict = report.conflict / divisor;
  for (auto& record : out.trace) record.product /= divisor;
  out.divisor = report.divisor * divisor;
  return out;
}

}  // namespace

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::Conjunctive: return "conjunctive";
    case RuleId::Dempster: return "dempster";
    case RuleId::PCR5: return "pcr5";
    case RuleId::TotalProportional: return "total-proportional";
    case RuleId::Average: return "average";
  }
  return "?";
}

std::string_view to_string(PipelineOrder order) {
  return order == PipelineOrder::NormalizeFirst ? "normalize-first"
                                                : "redistribute-first";
}

std::optional<RuleId> parse_rule(std::string_view name) {
  for (auto rule : {RuleId::Conjunctive, RuleId::Dempster, RuleId::PCR5,
                    RuleId::TotalProportional, RuleId::Average}) {
    if (to_string(rule) == name) return rule;
  }
  return std::nullopt;
}

std::optional<PipelineOrder> parse_order(std::string_view name) {
  for (auto order : {PipelineOrder::NormalizeFirst, PipelineOrder::RedistributeFirst}) {
    if (to_string(order) == name) return order;
  }
  return std::nullopt;
}

FusionReport conjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  reject_negative(m1, "the conjunctive rule");
  reject_negative(m2, "the conjunctive rule");

  const auto& frame = m1.frame();
  Assignments combined{{frame.empty_set(), 0.0}};
  std::vector<ProductRecord> trace;
  trace.reserve(m1.assignments().size() * m2.assignments().size());
  double conflict = 0.0;
  for (const auto& [x, wx] : m1.assignments()) {
    for (const auto& [y, wy] : m2.assignments()) {
      const auto meet = intersect(x, y);
      const double product = wx * wy;
      combined[meet] += product;
      if (meet.empty()) conflict += product;
      trace.push_back({x, y, product, meet});
    }
  }
  FusionReport report{
      .result = MassFunction::intermediate(frame, std::move(combined),
                                           interval_union(m1.range(), m2.range())),
      .conflict = conflict,
      .trace = std::move(trace),
      .divisor = 1.0,
      .rule = RuleId::Conjunctive,
      .skipped_fractions = 0,
      .negative_evidence = {},
  };
  return report;
}

double conflict_mass(const MassFunction& m1, const MassFunction& m2) {
  return conjunctive(m1, m2).conflict;
}

FusionReport dempster_report(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  reject_negative(m1, "Dempster's rule");
  reject_negative(m2, "Dempster's rule");
  for (const auto* m : {&m1, &m2}) {
    if (classify_range(*m) != RangeClass::Classical ||
        classify_sum(*m) != SumClass::Balanced || m->conflict() != 0.0) {
      throw RuleGuardError(
          "Dempster's rule needs classical masses (range [0, 1], unit sum); got "
          "a " + std::string(to_string(classify_range(*m))) + "-range mass summing to " +
          num(m->total()) + "; use conjunctive, pcr5 or total-proportional instead");
    }
  }
  auto report = conjunctive(m1, m2);
  const double k = report.conflict;
  if (k >= 1.0 - kEpsilon) {
    throw RuleGuardError("Dempster's rule is undefined under total conflict (k = " +
                         num(k) + "); use pcr5 instead");
  }
  Assignments weights;
  for (const auto& [set, w] : report.result.assignments()) {
    weights.emplace(set, set.empty() ? 0.0 : w / (1.0 - k));
  }
  report.result = MassFunction::intermediate(m1.frame(), std::move(weights),
                                             MassRange::classical());
  report.divisor = 1.0 - k;
  report.rule = RuleId::Dempster;
  return report;
}

MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
  return dempster_report(m1, m2).result;
}

FusionReport pcr5(const MassFunction& m1, const MassFunction& m2) {
  auto report = conjunctive(m1, m2);
  reject_conflict_input(m1, "pcr5");
  reject_conflict_input(m2, "pcr5");

  // For every nonempty A, sum the share A wins back from each set X disjoint
  // from it: m1(A)²·m2(X)/(m1(A)+m2(X)) + m2(A)²·m1(X)/(m2(A)+m1(X)).
  std::size_t skipped = 0;
  Assignments weights = report.result.assignments();
  // A focal set can win back mass without surviving any intersection.
  for (const auto* m : {&m1, &m2}) {
    for (const auto& [set, w] : m->assignments()) {
      if (!set.empty()) weights.try_emplace(set, 0.0);
    }
  }
  const std::array<std::pair<const MassFunction*, const MassFunction*>, 2> sides{
      {{&m1, &m2}, {&m2, &m1}}};
  for (auto& [a, w] : weights) {
    if (a.empty()) continue;
    for (const auto& [self, other] : sides) {
      const double wa = self->weight(a);
      for (const auto& [x, wx] : other->assignments()) {
        if (x.empty() || a.intersects(x)) continue;
        const double denom = wa + wx;
        if (denom == 0.0) {
          ++skipped;
          continue;
        }
        w += wa * wa * wx / denom;
      }
    }
  }
  weights[m1.frame().empty_set()] = 0.0;
  report.result = MassFunction::intermediate(m1.frame(), std::move(weights),
                                             report.result.range());
  report.rule = RuleId::PCR5;
  report.skipped_fractions = skipped;
  return report;
}

FusionReport over_normalize(const FusionReport& report, const MassRange& target) {
  const double total = report.result.total();
  const double span = target.span_total();
  if (!(total > 0.0) || !(span > 0.0)) {
    throw ValidationError("over-normalization divisor is not positive (total " +
                          num(total) + ", target total " + num(span) + ")");
  }
  return scaled(report, total / span, target);
}

FusionReport total_proportional(const FusionReport& report) {
  const auto& frame = report.result.frame();
  const double k = report.result.conflict();
  const double focal = report.result.focal_total();
  if (k < -kEpsilon) {
    throw ValidationError("cannot redistribute negative conflict " + num(k));
  }
  if (k > 0.0 && !(focal > 0.0)) {
    throw ValidationError("conflict " + num(k) +
                          " has no positive focal mass to be redistributed onto");
  }
  const double factor = k > 0.0 ? 1.0 + k / focal : 1.0;
  Assignments weights;
  for (const auto& [set, w] : report.result.assignments()) {
    weights.emplace(set, set.empty() ? 0.0 : w * factor);
  }
  weights[frame.empty_set()] = 0.0;
  FusionReport out = report;
  out.result = MassFunction::intermediate(frame, std::move(weights),
                                          report.result.range());
  out.rule = RuleId::TotalProportional;
  return out;
}

FusionReport average(std::span<const MassFunction> masses) {
  if (masses.empty()) throw ValidationError("average of an empty list of masses");
  if (masses.size() < 2) {
    throw ValidationError("the average rule needs at least 2 masses, got " +
                          std::to_string(masses.size()));
  }
  const auto& frame = masses.front().frame();
  MassRange range = masses.front().range();
  Assignments sums{{frame.empty_set(), 0.0}};
  std::vector<NegativeEvidence> negatives;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const auto& m = masses[i];
    require_same_frame(masses.front(), m);
    reject_conflict_input(m, "the average rule");
    range = interval_union(range, m.range());
    for (const auto& [set, w] : m.assignments()) {
      sums[set] += w;
      if (w < 0.0) negatives.push_back({i, set, w});
    }
  }
  const double n = static_cast<double>(masses.size());
  for (auto& [set, w] : sums) w /= n;
  FusionReport report{
      .result = MassFunction::intermediate(frame, std::move(sums), range),
      .conflict = 0.0,
      .trace = {},
      .divisor = 1.0,
      .rule = RuleId::Average,
      .skipped_fractions = 0,
      .negative_evidence = std::move(negatives),
  };
  return report;
}

FusionReport fuse(const MassFunction& m1, const MassFunction& m2,
                  const FuseOptions& options) {
  require_same_frame(m1, m2);
  if (options.rule != RuleId::Average) {
    const auto& name = to_string(options.rule);
    for (const auto* m : {&m1, &m2}) {
      for (const auto& [set, w] : m->negative_weights()) {
        throw RuleGuardError("rule " + std::string(name) +
                             " rejects negative weight " + num(w) + " on " +
                             render_focal(set, m->frame()) +
                             "; negative weights are only accepted by: average");
      }
    }
  }
  const MassRange target =
      options.target.value_or(interval_union(m1.range(), m2.range()));

  switch (options.rule) {
    case RuleId::Conjunctive: {
      auto report = conjunctive(m1, m2);
      return options.normalize ? over_normalize(report, target) : report;
    }
    case RuleId::Dempster:
      return dempster_report(m1, m2);
    case RuleId::PCR5: {
      // Rescaling commutes with the pairwise redistribution, so both orders
      // give the same masses.
      auto report = pcr5(m1, m2);
      return options.normalize ? over_normalize(report, target) : report;
    }
    case RuleId::TotalProportional: {
      auto report = conjunctive(m1, m2);
      if (options.order == PipelineOrder::NormalizeFirst) {
        if (options.normalize) report = over_normalize(report, target);
        return total_proportional(report);
      }
      report = total_proportional(report);
      return options.normalize ? over_normalize(report, target) : report;
    }
    case RuleId::Average: {
      const std::array<MassFunction, 2> pair{m1, m2};
      return average(pair);
    }
  }
  throw RuleGuardError("unknown rule");
}

}  // namespace evidence
