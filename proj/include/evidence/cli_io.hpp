#ifndef EVIDENCE_CLI_IO_HPP
#define EVIDENCE_CLI_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evidence/frame.hpp"
#include "evidence/mass.hpp"
#include "evidence/rules.hpp"

namespace evidence {

struct Source {
  std::string name;
  MassFunction mass;

  friend bool operator==(const Source&, const Source&) = default;
};

struct PipelineSpec {
  RuleId rule = RuleId::PCR5;
  PipelineOrder order = PipelineOrder::RedistributeFirst;
  std::optional<MassRange> target;
  bool strict = false;
  bool normalize = true;

  friend bool operator==(const PipelineSpec&, const PipelineSpec&) = default;
};

/// A frame, its evidence sources and an optional fusion pipeline, e.g.
///
///   {"frame": ["A", "B"],
///    "sources": [{"name": "m1", "range": [0, 1.1],
///                 "masses": {"A": 0.6, "B": 0.3, "A|B": 0.2}}],
///    "pipeline": {"rule": "pcr5", "order": "redistribute-first",
///                 "target": [0, 1.1], "strict": true}}
///
/// Sources are validated when the document is loaded, strictly when the
/// pipeline says so.
struct ScenarioDocument {
  Frame frame;
  std::vector<Source> sources;
  std::optional<PipelineSpec> pipeline;

  friend bool operator==(const ScenarioDocument&, const ScenarioDocument&) = default;
};

/// Throws ParseError for malformed JSON (with line and column) or a document
/// that does not follow the schema, ValidationError for bad labels or masses.
ScenarioDocument load_document(std::string_view text);
ScenarioDocument load_document_file(const std::string& path);

/// Serializes back to the load_document schema.
std::string dump_document(const ScenarioDocument& doc);

/// Left fold of fuse() over the sources (the average rule takes all sources
/// at once). The target range defaults to the union of every source range.
FusionReport run_pipeline(const ScenarioDocument& doc);

enum class TableFormat { Text, Csv };

/// Fixed-point rendering with round-half-to-even at `precision` decimals.
std::string format_fixed(double value, int precision);

/// One column per focal set of the result in bitmask order, then ∅, then the
/// sum of all columns.
std::string render_table(const FusionReport& report, int precision,
                         TableFormat format = TableFormat::Text);

struct GoldenComparison {
  std::string scenario;
  std::string quantity;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;

  double delta() const;
  bool passed() const;
};

struct GoldenRun {
  std::vector<GoldenComparison> comparisons;
  std::string text;
  bool passed() const;
};

/// Runs the bundled worked examples and compares each published value with
/// the computed one.
GoldenRun paper_examples();

/// The bundled worked examples as documents, keyed by scenario name.
std::vector<std::pair<std::string, std::string>> bundled_scenarios();

}  // namespace evidence

#endif  // EVIDENCE_CLI_IO_HPP
