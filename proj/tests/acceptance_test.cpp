// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evidence/cli_io.hpp"
#include "evidence/error.hpp"
#include "evidence/rules.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace evidence;

namespace {

using Clock = std::chrono::steady_clock;
using Table = std::vector<std::pair<std::string, double>>;

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    const double d = std::abs(got - want);
    if (!(d <= tol)) {
      ok = false;
      notes << " [" << what << ": got " << got << ", want " << want << " ± " << tol << "]";
    }
  }
};

const Frame kAB = make_frame({"A", "B"});

MassFunction mass(const Table& t, MassRange r) { return make_mass(kAB, t, r, Validation::Strict); }
FocalSet set(const char* e) { return parse_focal(e, kAB); }

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(EVFUSE_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::array<char, 4096> buf{};
  std::string text;
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) text += buf.data();
  const int status = pclose(pipe);
  if (out != nullptr) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Check mixed_interval() {
  Check c;
  const auto m1 = mass({{"A", 0.7}, {"B", 0.3}, {"A|B", 0.1}}, {0, 1.1});
  const auto m2 = mass({{"A", 0.4}, {"B", 0.6}, {"A|B", 0.2}}, {0, 1.2});
  const MassRange target{0, 1.2};
  const auto r = over_normalize(pcr5(m1, m2), target);
  c.near(r.result.weight(set("A")), 0.686, 0.001, "m(A)");
  c.near(r.result.weight(set("B")), 0.496, 0.001, "m(B)");
  c.near(r.result.weight(set("A|B")), 0.018, 0.001, "m(A|B)");
  c.near(r.result.total(), 1.2, 1e-9, "total");

  constexpr int kRuns = 2000;
  std::vector<double> micros;
  micros.reserve(kRuns);
  for (int i = 0; i < kRuns; ++i) {
    const auto t0 = Clock::now();
    const auto rr = over_normalize(pcr5(m1, m2), target);
    const auto t1 = Clock::now();
    if (rr.divisor <= 0) c.expect(false, "divisor");
    micros.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
  }
  std::nth_element(micros.begin(), micros.begin() + kRuns / 2, micros.end());
  const double median = micros[kRuns / 2];
  c.notes << " median runtime " << median << " us";
  c.expect(median < 1000.0, "runtime < 1 ms");
  return c;
}

Check suspects() {
  Check c;
  const auto m1 = mass({{"A", 0.3}, {"B", 0.6}, {"A|B", 0.2}}, {0, 1.1});
  const auto m2 = mass({{"A", 0.5}, {"B", 0.5}, {"A|B", 0.1}}, {0, 1.1});
  const auto conj = conjunctive(m1, m2).result;
  c.near(conj.weight(set("A")), 0.28, 1e-9, "conj m(A)");
  c.near(conj.weight(set("B")), 0.46, 1e-9, "conj m(B)");
  c.near(conj.weight(set("A|B")), 0.02, 1e-9, "conj m(A|B)");
  c.near(conj.conflict(), 0.45, 1e-9, "conj m(∅)");
  const auto r = over_normalize(pcr5(m1, m2), {0, 1.1}).result;
  c.near(r.weight(set("A")), 0.44, 0.02, "m(A)");
  c.near(r.weight(set("B")), 0.64, 0.02, "m(B)");
  c.near(r.weight(set("A|B")), 0.02, 0.02, "m(A|B)");
  c.near(belief(r, set("A")), 0.44, 0.02, "Bel(A)");
  c.near(plausibility(r, set("A")), 0.46, 0.02, "Pl(A)");
  c.near(belief(r, set("A|B")), 1.1, 1e-6, "Bel(A|B)");
  return c;
}

Check same_interval() {
  Check c;
  const auto m1 = mass({{"A", 0.6}, {"B", 0.3}, {"A|B", 0.2}}, {0, 1.1});
  const auto m2 = mass({{"A", 0.5}, {"B", 0.5}, {"A|B", 0.1}}, {0, 1.1});
  const auto r = fuse(m1, m2, {.rule = RuleId::TotalProportional,
                               .order = PipelineOrder::NormalizeFirst})
                     .result;
  c.near(r.weight(set("A")), 0.67, 0.01, "m(A)");
  c.near(r.weight(set("B")), 0.40, 0.01, "m(B)");
  c.near(r.weight(set("A|B")), 0.03, 0.01, "m(A|B)");
  c.near(r.total(), 1.1, 1e-9, "total");
  return c;
}

Check undermass_average() {
  Check c;
  const std::array masses{mass({{"A", -0.2}, {"B", 0.7}, {"A|B", 0.3}}, {-0.2, 1}),
                          mass({{"A", 0.4}, {"B", -0.1}, {"A|B", 0.5}}, {-0.2, 1})};
  const auto r = average(masses);
  c.near(r.result.weight(set("A")), 0.1, 1e-9, "m(A)");
  c.near(r.result.weight(set("B")), 0.3, 1e-9, "m(B)");
  c.near(r.result.weight(set("A|B")), 0.4, 1e-9, "m(A|B)");
  c.near(r.conflict, 0.0, 0.0, "conflict");
  c.expect(argmax(r.result) == set("A|B"), "argmax = A|B");
  c.expect(argmax_singleton(r.result) == set("B"), "singleton argmax = B");
  return c;
}

Check interval_unions() {
  Check c;
  c.expect(interval_union({-0.4, 1}, {0, 1}) == MassRange{-0.4, 1}, "case i");
  c.expect(interval_union({0, 1.2}, {-0.1, 1}) == MassRange{-0.1, 1.2}, "case ii");
  c.expect(interval_union({0, 1.3}, {-0.2, 1}) == MassRange{-0.2, 1.3}, "case iii");
  return c;
}

FocalSet top(const MassFunction& m) { return argmax(m); }

Check property_suite() {
  Check c;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20260101);
  constexpr double kTol = 1e-9;
  int dempster_defined = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = gen::frame(2 + i % 3);
    const auto m1 = gen::nonnegative_mass(rng, f, 6);
    const auto m2 = gen::nonnegative_mass(rng, f, 6);
    const auto conj = conjunctive(m1, m2);
    c.near(conj.result.total(), m1.total() * m2.total(), kTol, "product identity");

    const auto p = pcr5(m1, m2);
    c.near(p.result.total(), conj.result.total(), kTol, "pcr5 conservation");
    c.near(p.result.conflict(), 0.0, 0.0, "pcr5 ∅");

    const auto target = interval_union(m1.range(), m2.range());
    const auto n = over_normalize(conj, target);
    c.near(n.result.total(), target.lo + target.hi, kTol, "over_normalize total");
    // Redistribution is undefined under total conflict.
    if (conj.result.focal_total() > 0.0) {
      const auto t = total_proportional(conj);
      c.expect(top(n.result) == top(conj.result), "argmax under over_normalize");
      c.expect(top(t.result) == top(conj.result), "argmax under total_proportional");
      const auto pn = over_normalize(p, target);
      c.expect(top(pn.result) == top(p.result), "argmax under pcr5 normalization");
    }

    const auto k1 = gen::nonnegative_mass(rng, f, 6, true);
    const auto k2 = gen::nonnegative_mass(rng, f, 6, true);
    if (conflict_mass(k1, k2) < 1.0 - kEpsilon) {
      const auto d = dempster(k1, k2);
      c.near(d.total(), 1.0, kTol, "dempster total");
      c.near(d.conflict(), 0.0, 0.0, "dempster ∅");
      ++dempster_defined;
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  c.notes << " 1000 pairs, " << dempster_defined << " Dempster-defined, " << seconds << " s";
  c.expect(seconds < 5.0, "suite < 5 s");
  return c;
}

Check oracle_equivalence() {
  Check c;
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto f = gen::frame(2 + i % 2);
    const auto m1 = gen::nonnegative_mass(rng, f, 4);
    const auto m2 = gen::nonnegative_mass(rng, f, 4);
    const auto r = pcr5(m1, m2);
    const auto d = oracle::pcr5_per_product(oracle::dense(m1), oracle::dense(m2));
    for (std::uint32_t s = 0; s < d.size(); ++s) {
      worst = std::max(worst, std::abs(r.result.weight(FocalSet(s, f.size())) - d[s]));
    }
  }
  c.notes << " worst |delta| " << worst;
  c.expect(worst <= 1e-12, "|delta| <= 1e-12");
  return c;
}

Check guards() {
  Check c;
  const std::array masses{mass({{"A", -0.2}, {"B", 0.7}, {"A|B", 0.3}}, {-0.2, 1}),
                          mass({{"A", 0.4}, {"B", -0.1}, {"A|B", 0.5}}, {-0.2, 1})};
  for (auto rule : {RuleId::Conjunctive, RuleId::Dempster, RuleId::PCR5}) {
    bool rejected = false;
    try {
      fuse(masses[0], masses[1], {.rule = rule});
    } catch (const RuleGuardError&) {
      rejected = true;
    }
    c.expect(rejected, "library rejects " + std::string(to_string(rule)));
    const int code = run_cli("fuse --input " + std::string(EVIDENCE_DATA_DIR) +
                             "/undermass-average.json --rule " + std::string(to_string(rule)));
    c.expect(code == 3, "cli exit 3 for " + std::string(to_string(rule)));
  }
  bool accepted = true;
  try {
    average(masses);
  } catch (const Error&) {
    accepted = false;
  }
  c.expect(accepted, "average accepts negatives");
  c.expect(run_cli("fuse --input " + std::string(EVIDENCE_DATA_DIR) +
                   "/undermass-average.json --rule average") == 0,
           "cli exit 0 for average");
  return c;
}

Check paper_examples_command() {
  Check c;
  std::string out;
  const int code = run_cli("paper-examples", &out);
  c.expect(code == 0, "exit 0");
  for (const auto& [name, text] : bundled_scenarios()) {
    c.expect(out.find(name) != std::string::npos, "prints " + name);
  }
  c.expect(out.find("|delta|") != std::string::npos, "prints deltas");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 mixed-interval PCR5 + over-normalization", mixed_interval},
      {"AC2 suspects conjunctive, PCR5, Bel/Pl", suspects},
      {"AC3 same-interval normalize-first total-proportional", same_interval},
      {"AC4 undermass average rule", undermass_average},
      {"AC5 interval union cases", interval_unions},
      {"AC6 randomized invariants", property_suite},
      {"AC7 PCR5 vs per-product oracle", oracle_equivalence},
      {"AC8 negative-weight guards", guards},
      {"AC9 paper-examples command", paper_examples_command},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << c.notes.str() << "\n";
    failures += c.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
