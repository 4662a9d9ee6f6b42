#include "evidence/mass.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"
#include "evidence/error.hpp"

namespace evidence {
namespace {

using detail::num;

void require_query(const MassFunction& m, const FocalSet& a) {
  if (a.width() != m.frame().size()) {
    throw ValidationError("frame mismatch: query set is not over the mass frame");
  }
  if (a.empty()) throw ValidationError("belief query on the empty set");
}

}  // namespace

MassRange MassRange::make(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ValidationError("mass range bounds must be finite");
  }
  if (lo > 0.0) {
    throw ValidationError("mass range lower bound " + num(lo) + " is above 0");
  }
  if (hi < 1.0) {
    throw ValidationError("mass range upper bound " + num(hi) + " is below 1");
  }
  return {lo, hi};
}

std::string_view to_string(RangeClass c) {
  switch (c) {
    case RangeClass::Classical: return "classical";
    case RangeClass::Over: return "over";
    case RangeClass::Under: return "under";
    case RangeClass::Off: return "off";
  }
  return "?";
}

std::string_view to_string(SumClass c) {
  switch (c) {
    case SumClass::Balanced: return "balanced";
    case SumClass::Surplus: return "surplus";
    case SumClass::Deficit: return "deficit";
    case SumClass::NegativeTotal: return "negative-total";
  }
  return "?";
}

MassFunction MassFunction::intermediate(Frame frame, Assignments weights,
                                        MassRange range) {
  for (const auto& [set, w] : weights) {
    if (set.width() != frame.size()) {
      throw ValidationError("frame mismatch: focal set is not over the mass frame");
    }
  }
  return MassFunction(std::move(frame), std::move(weights), range);
}

double MassFunction::weight(const FocalSet& set) const {
  const auto it = weights_.find(set);
  return it == weights_.end() ? 0.0 : it->second;
}

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& [set, w] : weights_) sum += w;
  return sum;
}

double MassFunction::focal_total() const {
  double sum = 0.0;
  for (const auto& [set, w] : weights_) {
    if (!set.empty()) sum += w;
  }
  return sum;
}

bool MassFunction::has_negative_weight() const {
  return std::any_of(weights_.begin(), weights_.end(),
                     [](const auto& kv) { return kv.second < 0.0; });
}

std::vector<std::pair<FocalSet, double>> MassFunction::negative_weights() const {
  std::vector<std::pair<FocalSet, double>> out;
  for (const auto& [set, w] : weights_) {
    if (w < 0.0) out.emplace_back(set, w);
  }
  return out;
}

MassFunction make_mass(const Frame& frame, const Assignments& weights,
                       MassRange range, Validation mode) {
  range = MassRange::make(range.lo, range.hi);
  for (const auto& [set, w] : weights) {
    if (set.width() != frame.size()) {
      throw ValidationError("frame mismatch: focal set is not over the mass frame");
    }
    const auto name = render_focal(set, frame);
    if (!std::isfinite(w)) {
      throw ValidationError("weight on " + name + " is not finite");
    }
    if (set.empty() && w != 0.0) {
      throw ValidationError("source mass assigns " + num(w) +
                            " to the empty set");
    }
    if (w < range.lo - kEpsilon) {
      throw ValidationError("weight " + num(w) + " on " + name +
                            " is below the range bound " + num(range.lo));
    }
    if (w > range.hi + kEpsilon) {
      throw ValidationError("weight " + num(w) + " on " + name +
                            " exceeds the range bound " + num(range.hi));
    }
  }
  auto m = MassFunction::intermediate(frame, weights, range);
  if (mode == Validation::Strict) {
    const double total = m.total();
    if (std::abs(total - range.span_total()) > kEpsilon) {
      throw ValidationError("weights sum to " + num(total) + " but range [" +
                            num(range.lo) + ", " + num(range.hi) +
                            "] requires " + num(range.span_total()));
    }
  }
  return m;
}

MassFunction make_mass(const Frame& frame,
                       const std::vector<std::pair<std::string, double>>& weights,
                       MassRange range, Validation mode) {
  Assignments parsed;
  for (const auto& [expr, w] : weights) {
    const auto set = parse_focal(expr, frame);
    if (!parsed.emplace(set, w).second) {
      throw ValidationError("focal set " + render_focal(set, frame) +
                            " is assigned more than once");
    }
  }
  return make_mass(frame, parsed, range, mode);
}

RangeClass classify_range(const MassRange& range) {
  const bool below = range.lo < -kEpsilon;
  const bool above = range.hi > 1.0 + kEpsilon;
  if (below && above) return RangeClass::Off;
  if (below) return RangeClass::Under;
  if (above) return RangeClass::Over;
  return RangeClass::Classical;
}

SumClass classify_sum(const MassFunction& m) {
  const double total = m.total();
  if (total > 1.0 + kEpsilon) return SumClass::Surplus;
  if (total >= 1.0 - kEpsilon) return SumClass::Balanced;
  if (total >= 0.0) return SumClass::Deficit;
  return SumClass::NegativeTotal;
}

double belief(const MassFunction& m, const FocalSet& a) {
  require_query(m, a);
  double sum = 0.0;
  for (const auto& [set, w] : m.assignments()) {
    if (!set.empty() && set.is_subset_of(a)) sum += w;
  }
  return sum;
}

double plausibility(const MassFunction& m, const FocalSet& a) {
  require_query(m, a);
  double sum = 0.0;
  for (const auto& [set, w] : m.assignments()) {
    if (set.intersects(a)) sum += w;
  }
  return sum;
}

BeliefInterval belief_interval(const MassFunction& m, const FocalSet& a) {
  return {belief(m, a), plausibility(m, a), !m.has_negative_weight()};
}

MassRange interval_union(const MassRange& r1, const MassRange& r2) {
  return {std::min(r1.lo, r2.lo), std::max(r1.hi, r2.hi)};
}

FocalSet argmax(const MassFunction& m) {
  const FocalSet* best = nullptr;
  double best_weight = 0.0;
  for (const auto& [set, w] : m.assignments()) {
    if (set.empty()) continue;
    if (best == nullptr || w > best_weight) {
      best = &set;
      best_weight = w;
    }
  }
  if (best == nullptr) throw ValidationError("mass has no nonempty focal set");
  return *best;
}

FocalSet argmax_singleton(const MassFunction& m) {
  const auto& frame = m.frame();
  FocalSet best = frame.singleton(0);
  double best_weight = m.weight(best);
  for (std::size_t i = 1; i < frame.size(); ++i) {
    const auto set = frame.singleton(i);
    if (m.weight(set) > best_weight) {
      best = set;
      best_weight = m.weight(set);
    }
  }
  return best;
}

}  // namespace evidence
