#ifndef EVIDENCE_TESTS_GENERATORS_HPP
#define EVIDENCE_TESTS_GENERATORS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "evidence/mass.hpp"

namespace gen {

inline evidence::Frame frame(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i + 1));
  return evidence::Frame(labels);
}

/// Random nonnegative mass with up to `max_focal` distinct nonempty focal sets.
/// Classical (unit total) half of the time, otherwise an overmass whose
/// range is [0, total] with total in (1, 1.5].
inline evidence::MassFunction nonnegative_mass(std::mt19937_64& rng,
                                               const evidence::Frame& frame,
                                               std::size_t max_focal,
                                               bool classical_only = false) {
  const std::uint32_t subsets = std::uint32_t{1} << frame.size();
  std::uniform_int_distribution<std::uint32_t> pick_set(1, subsets - 1);
  std::uniform_int_distribution<std::size_t> pick_count(
      1, std::min<std::size_t>(max_focal, subsets - 1));
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::uniform_real_distribution<double> excess(0.0, 0.5);

  const double target = (classical_only || rng() % 2 == 0) ? 1.0 : 1.0 + excess(rng);
  const std::size_t count = pick_count(rng);
  std::vector<std::uint32_t> sets;
  while (sets.size() < count) {
    const auto s = pick_set(rng);
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }
  std::vector<double> raw;
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    raw.push_back(weight(rng) + 1e-3);
    sum += raw.back();
  }
  evidence::Assignments weights;
  for (std::size_t i = 0; i < count; ++i) {
    weights.emplace(evidence::FocalSet(sets[i], frame.size()), raw[i] * target / sum);
  }
  return evidence::make_mass(frame, weights, evidence::MassRange{0.0, std::max(1.0, target)});
}

/// Random weights in [-0.5, 1], negative values allowed.
inline evidence::MassFunction signed_mass(std::mt19937_64& rng, const evidence::Frame& frame,
                                          std::size_t max_focal) {
  const std::uint32_t subsets = std::uint32_t{1} << frame.size();
  std::uniform_int_distribution<std::uint32_t> pick_set(1, subsets - 1);
  std::uniform_real_distribution<double> weight(-0.5, 1.0);
  evidence::Assignments weights;
  for (std::size_t i = 0; i < max_focal; ++i) {
    weights[evidence::FocalSet(pick_set(rng), frame.size())] = weight(rng);
  }
  return evidence::make_mass(frame, weights, evidence::MassRange{-0.5, 1.0});
}

}  // namespace gen

#endif  // EVIDENCE_TESTS_GENERATORS_HPP
