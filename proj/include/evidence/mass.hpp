#ifndef EVIDENCE_MASS_HPP
#define EVIDENCE_MASS_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evidence/frame.hpp"

namespace evidence {

/// Tolerance for every sum and bound comparison in the library.
inline constexpr double kEpsilon = 1e-9;

/// The interval [lo, hi] a mass function takes values in. Classical masses
/// use [0, 1]; the extended kinds push lo below 0 and/or hi above 1.
struct MassRange {
  double lo = 0.0;
  double hi = 1.0;

  /// Throws ValidationError unless lo <= 0, hi >= 1 and both are finite.
  static MassRange make(double lo, double hi);
  static MassRange classical() { return {0.0, 1.0}; }

  /// lo + hi, the total a strictly valid mass over this range carries.
  double span_total() const { return lo + hi; }

  friend bool operator==(const MassRange&, const MassRange&) = default;
};

enum class RangeClass { Classical, Over, Under, Off };
enum class SumClass { Balanced, Surplus, Deficit, NegativeTotal };
enum class Validation { Strict, Lenient };

std::string_view to_string(RangeClass c);
std::string_view to_string(SumClass c);

using Assignments = std::map<FocalSet, double>;

/// A weight assignment over the powerset of a frame plus its declared range.
/// Focal sets that are not listed carry weight 0. Iteration is in bitmask
/// order, which keeps every derived computation deterministic.
class MassFunction {
 public:
  /// Unvalidated construction for fusion intermediates, which may carry
  /// conflict on ∅ and totals outside the declared range. Sources go through
  /// make_mass instead.
  static MassFunction intermediate(Frame frame, Assignments weights,
                                   MassRange range);

  const Frame& frame() const { return frame_; }
  const MassRange& range() const { return range_; }
  const Assignments& assignments() const { return weights_; }

  double weight(const FocalSet& set) const;
  double conflict() const { return weight(frame_.empty_set()); }
  /// Sum of all weights, ∅ included.
  double total() const;
  /// Sum over nonempty focal sets.
  double focal_total() const;
  bool has_negative_weight() const;
  std::vector<std::pair<FocalSet, double>> negative_weights() const;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  MassFunction(Frame frame, Assignments weights, MassRange range)
      : frame_(std::move(frame)), weights_(std::move(weights)), range_(range) {}

  Frame frame_;
  Assignments weights_;
  MassRange range_;
};

/// Validated construction of a source mass. Every weight must lie in
/// [range.lo, range.hi] and ∅ must carry 0. Strict mode also requires the
/// weights to sum to range.lo + range.hi.
MassFunction make_mass(const Frame& frame, const Assignments& weights,
                       MassRange range,
                       Validation mode = Validation::Lenient);

/// Same, with focal sets written as "A|B" expressions. Two expressions naming
/// the same set are rejected.
MassFunction make_mass(const Frame& frame,
                       const std::vector<std::pair<std::string, double>>& weights,
                       MassRange range,
                       Validation mode = Validation::Lenient);

RangeClass classify_range(const MassRange& range);
inline RangeClass classify_range(const MassFunction& m) {
  return classify_range(m.range());
}
SumClass classify_sum(const MassFunction& m);

struct BeliefInterval {
  double bel = 0.0;
  double pl = 0.0;
  // False when the mass has negative weights, so bel <= pl need not hold.
  bool classical_semantics = true;
};

double belief(const MassFunction& m, const FocalSet& a);
double plausibility(const MassFunction& m, const FocalSet& a);
BeliefInterval belief_interval(const MassFunction& m, const FocalSet& a);

MassRange interval_union(const MassRange& r1, const MassRange& r2);

/// Nonempty focal set with the largest weight; ties go to the lowest bitmask.
FocalSet argmax(const MassFunction& m);
/// Same, restricted to single-element sets.
FocalSet argmax_singleton(const MassFunction& m);

}  // namespace evidence

#endif  // EVIDENCE_MASS_HPP
