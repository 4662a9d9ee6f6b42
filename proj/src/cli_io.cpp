#include "evidence/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "detail.hpp"
#include "evidence/error.hpp"

namespace evidence {
namespace {

using json = nlohmann::ordered_json;
using detail::num;

constexpr std::string_view kSameIntervalDoc = R"({
  "frame": ["A", "B"],
  "sources": [
    {"name": "director1", "range": [0, 1.1], "masses": {"A": 0.6, "B": 0.3, "A|B": 0.2}},
    {"name": "director2", "range": [0, 1.1], "masses": {"A": 0.5, "B": 0.5, "A|B": 0.1}}
  ],
  "pipeline": {"rule": "total-proportional", "order": "normalize-first", "strict": true}
}
)";

constexpr std::string_view kMixedIntervalDoc = R"({
  "frame": ["A", "B"],
  "sources": [
    {"name": "director1", "range": [0, 1.1], "masses": {"A": 0.7, "B": 0.3, "A|B": 0.1}},
    {"name": "director2", "range": [0, 1.2], "masses": {"A": 0.4, "B": 0.6, "A|B": 0.2}}
  ],
  "pipeline": {"rule": "pcr5", "order": "redistribute-first", "strict": true}
}
)";

constexpr std::string_view kUndermassDoc = R"({
  "frame": ["A", "B"],
  "sources": [
    {"name": "director1", "range": [-0.2, 1], "masses": {"A": -0.2, "B": 0.7, "A|B": 0.3}},
    {"name": "director2", "range": [-0.2, 1], "masses": {"A": 0.4, "B": -0.1, "A|B": 0.5}}
  ],
  "pipeline": {"rule": "average", "strict": true}
}
)";

constexpr std::string_view kSuspectsDoc = R"({
  "frame": ["A", "B"],
  "sources": [
    {"name": "evidence1", "range": [0, 1.1], "masses": {"A": 0.3, "B": 0.6, "A|B": 0.2}},
    {"name": "evidence2", "range": [0, 1.1], "masses": {"A": 0.5, "B": 0.5, "A|B": 0.1}}
  ],
  "pipeline": {"rule": "pcr5", "order": "redistribute-first", "strict": true}
}
)";

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> known,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || item.key() == k;
    if (!ok) schema_error(where, "unknown key \"" + item.key() + "\"");
  }
}

double require_number(const json& value, const std::string& where) {
  if (!value.is_number()) schema_error(where, "expected a number");
  return value.get<double>();
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) schema_error(where, "expected a string");
  return value.get<std::string>();
}

bool require_bool(const json& value, const std::string& where) {
  if (!value.is_boolean()) schema_error(where, "expected true or false");
  return value.get<bool>();
}

MassRange parse_range(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) {
    schema_error(where, "expected [lo, hi]");
  }
  return MassRange::make(require_number(value[0], where + "[0]"),
                         require_number(value[1], where + "[1]"));
}

PipelineSpec parse_pipeline(const json& value) {
  const std::string where = "pipeline";
  if (!value.is_object()) schema_error(where, "expected an object");
  reject_unknown_keys(value, {"rule", "order", "target", "strict", "normalize"}, where);
  PipelineSpec spec;
  const auto rule_name = require_string(require(value, "rule", where), where + ".rule");
  const auto rule = parse_rule(rule_name);
  if (!rule) schema_error(where + ".rule", "unknown rule \"" + rule_name + "\"");
  spec.rule = *rule;
  if (value.contains("order")) {
    const auto name = require_string(value["order"], where + ".order");
    const auto order = parse_order(name);
    if (!order) schema_error(where + ".order", "unknown order \"" + name + "\"");
    spec.order = *order;
  }
  if (value.contains("target")) spec.target = parse_range(value["target"], where + ".target");
  if (value.contains("strict")) spec.strict = require_bool(value["strict"], where + ".strict");
  if (value.contains("normalize")) {
    spec.normalize = require_bool(value["normalize"], where + ".normalize");
  }
  return spec;
}

json range_json(const MassRange& r) { return json::array({r.lo, r.hi}); }

std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad_left(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

void add_row(GoldenRun& run, const std::string& scenario, const std::string& quantity,
             double expected, double computed, double tolerance) {
  run.comparisons.push_back({scenario, quantity, expected, computed, tolerance});
}

}  // namespace

ScenarioDocument load_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Locate the failing byte as line:column for the message.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + e.what());
  }
  if (!root.is_object()) schema_error("document", "expected a JSON object");
  reject_unknown_keys(root, {"frame", "sources", "pipeline"}, "document");

  const auto& frame_json = require(root, "frame", "document");
  if (!frame_json.is_array()) schema_error("frame", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < frame_json.size(); ++i) {
    labels.push_back(require_string(frame_json[i], "frame[" + std::to_string(i) + "]"));
  }

  std::optional<PipelineSpec> pipeline;
  if (root.contains("pipeline")) pipeline = parse_pipeline(root["pipeline"]);
  const auto mode = pipeline && pipeline->strict ? Validation::Strict : Validation::Lenient;

  ScenarioDocument doc{Frame(std::move(labels)), {}, pipeline};
  const auto& sources = require(root, "sources", "document");
  if (!sources.is_array()) schema_error("sources", "expected an array");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::string where = "sources[" + std::to_string(i) + "]";
    const auto& src = sources[i];
    if (!src.is_object()) schema_error(where, "expected an object");
    reject_unknown_keys(src, {"name", "range", "masses"}, where);
    const auto name = require_string(require(src, "name", where), where + ".name");
    const auto range = parse_range(require(src, "range", where), where + ".range");
    const auto& masses = require(src, "masses", where);
    if (!masses.is_object()) schema_error(where + ".masses", "expected an object");
    std::vector<std::pair<std::string, double>> weights;
    for (const auto& item : masses.items()) {
      weights.emplace_back(item.key(),
                           require_number(item.value(), where + ".masses." + item.key()));
    }
    try {
      doc.sources.push_back({name, make_mass(doc.frame, weights, range, mode)});
    } catch (const ValidationError& e) {
      throw ValidationError("source '" + name + "': " + e.what());
    }
  }
  return doc;
}

ScenarioDocument load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_document(buffer.str());
}

std::string dump_document(const ScenarioDocument& doc) {
  json root;
  root["frame"] = doc.frame.labels();
  root["sources"] = json::array();
  for (const auto& src : doc.sources) {
    json masses = json::object();
    for (const auto& [set, w] : src.mass.assignments()) {
      if (set.empty()) continue;
      masses[render_focal(set, doc.frame)] = w;
    }
    root["sources"].push_back(
        {{"name", src.name}, {"range", range_json(src.mass.range())}, {"masses", masses}});
  }
  if (doc.pipeline) {
    const auto& p = *doc.pipeline;
    json pipeline{{"rule", to_string(p.rule)}, {"order", to_string(p.order)}};
    if (p.target) pipeline["target"] = range_json(*p.target);
    pipeline["strict"] = p.strict;
    pipeline["normalize"] = p.normalize;
    root["pipeline"] = pipeline;
  }
  return root.dump(2) + "\n";
}

FusionReport run_pipeline(const ScenarioDocument& doc) {
  if (doc.sources.size() < 2) {
    throw ValidationError("fusion needs at least two sources, the document has " +
                          std::to_string(doc.sources.size()));
  }
  const PipelineSpec spec = doc.pipeline.value_or(PipelineSpec{});
  MassRange all = doc.sources.front().mass.range();
  for (const auto& src : doc.sources) all = interval_union(all, src.mass.range());

  if (spec.rule == RuleId::Average) {
    std::vector<MassFunction> masses;
    for (const auto& src : doc.sources) masses.push_back(src.mass);
    return average(masses);
  }

  const FuseOptions options{spec.rule, spec.target.value_or(all), spec.normalize, spec.order};
  auto report = fuse(doc.sources[0].mass, doc.sources[1].mass, options);
  for (std::size_t i = 2; i < doc.sources.size(); ++i) {
    report = fuse(report.result, doc.sources[i].mass, options);
  }
  return report;
}

std::string format_fixed(double value, int precision) {
  if (!std::isfinite(value)) return value != value ? "nan" : (value > 0 ? "inf" : "-inf");
  precision = std::clamp(precision, 0, 15);
  const double scale = std::pow(10.0, precision);
  const double scaled = std::abs(value) * scale;
  double whole = std::floor(scaled);
  const double frac = scaled - whole;
  // Treat binary representation noise around .5 as an exact tie.
  const double tie_tolerance = 1e-9 * std::max(1.0, scaled);
  if (std::abs(frac - 0.5) <= tie_tolerance) {
    if (std::fmod(whole, 2.0) != 0.0) whole += 1.0;
  } else if (frac > 0.5) {
    whole += 1.0;
  }
  const auto digits = static_cast<long long>(whole);
  const auto unit = static_cast<long long>(scale);
  std::string out = (value < 0 && digits != 0) ? "-" : "";
  out += std::to_string(digits / unit);
  if (precision > 0) {
    auto fraction = std::to_string(digits % unit);
    out += "." + std::string(static_cast<std::size_t>(precision) - fraction.size(), '0') +
           fraction;
  }
  return out;
}

std::string render_table(const FusionReport& report, int precision, TableFormat format) {
  const auto& m = report.result;
  std::vector<std::string> header{"rule"};
  std::vector<std::string> row{std::string(to_string(report.rule))};
  for (const auto& [set, w] : m.assignments()) {
    if (set.empty()) continue;
    header.push_back(render_focal(set, m.frame()));
    row.push_back(format_fixed(w, precision));
  }
  header.emplace_back("∅");
  row.push_back(format_fixed(m.conflict(), precision));
  header.emplace_back("sum");
  row.push_back(format_fixed(m.total(), precision));

  std::string out;
  if (format == TableFormat::Csv) {
    for (const auto* line : {&header, &row}) {
      for (std::size_t i = 0; i < line->size(); ++i) {
        out += (i ? "," : "") + (*line)[i];
      }
      out += "\n";
    }
    return out;
  }
  std::vector<std::size_t> widths;
  for (std::size_t i = 0; i < header.size(); ++i) {
    widths.push_back(std::max(display_width(header[i]), display_width(row[i])));
  }
  for (const auto* line : {&header, &row}) {
    std::string text = pad_right((*line)[0], widths[0]);
    for (std::size_t i = 1; i < line->size(); ++i) {
      text += "  " + pad_left((*line)[i], widths[i]);
    }
    out += text + "\n";
  }
  return out;
}

double GoldenComparison::delta() const { return std::abs(computed - expected); }

bool GoldenComparison::passed() const { return delta() <= tolerance; }

bool GoldenRun::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const auto& c) { return c.passed(); });
}

std::vector<std::pair<std::string, std::string>> bundled_scenarios() {
  return {{"overmass-same-interval", std::string(kSameIntervalDoc)},
          {"overmass-mixed-interval", std::string(kMixedIntervalDoc)},
          {"undermass-average", std::string(kUndermassDoc)},
          {"overmass-suspects", std::string(kSuspectsDoc)}};
}

GoldenRun paper_examples() {
  GoldenRun run;
  const auto scenarios = bundled_scenarios();
  auto doc_for = [&](std::size_t i) { return load_document(scenarios[i].second); };

  {
    // Published values are rounded to two decimals.
    const auto doc = doc_for(0);
    const auto& name = scenarios[0].first;
    const auto conj = conjunctive(doc.sources[0].mass, doc.sources[1].mass);
    add_row(run, name, "conflict k", 0.45, conj.conflict, 1e-9);
    const auto r = run_pipeline(doc).result;
    add_row(run, name, "m(A)", 0.67, r.weight(parse_focal("A", doc.frame)), 0.01);
    add_row(run, name, "m(B)", 0.40, r.weight(parse_focal("B", doc.frame)), 0.01);
    add_row(run, name, "m(A|B)", 0.03, r.weight(parse_focal("A|B", doc.frame)), 0.01);
    add_row(run, name, "sum", 1.1, r.total(), 1e-9);
  }
  {
    const auto doc = doc_for(1);
    const auto& name = scenarios[1].first;
    const auto conj = conjunctive(doc.sources[0].mass, doc.sources[1].mass);
    add_row(run, name, "conflict k", 0.54, conj.conflict, 1e-9);
    const auto r = run_pipeline(doc).result;
    add_row(run, name, "m(A)", 0.686, r.weight(parse_focal("A", doc.frame)), 0.001);
    add_row(run, name, "m(B)", 0.496, r.weight(parse_focal("B", doc.frame)), 0.001);
    add_row(run, name, "m(A|B)", 0.018, r.weight(parse_focal("A|B", doc.frame)), 0.001);
    add_row(run, name, "sum", 1.2, r.total(), 1e-9);
  }
  {
    const auto doc = doc_for(2);
    const auto& name = scenarios[2].first;
    const auto r = run_pipeline(doc).result;
    add_row(run, name, "m(A)", 0.1, r.weight(parse_focal("A", doc.frame)), 1e-9);
    add_row(run, name, "m(B)", 0.3, r.weight(parse_focal("B", doc.frame)), 1e-9);
    add_row(run, name, "m(A|B)", 0.4, r.weight(parse_focal("A|B", doc.frame)), 1e-9);
    add_row(run, name, "conflict", 0.0, r.conflict(), 1e-9);
  }
  {
    const auto doc = doc_for(3);
    const auto& name = scenarios[3].first;
    const auto a = parse_focal("A", doc.frame);
    const auto b = parse_focal("B", doc.frame);
    const auto ab = parse_focal("A|B", doc.frame);
    const auto conj = conjunctive(doc.sources[0].mass, doc.sources[1].mass).result;
    add_row(run, name, "conjunctive m(A)", 0.28, conj.weight(a), 1e-9);
    add_row(run, name, "conjunctive m(B)", 0.46, conj.weight(b), 1e-9);
    add_row(run, name, "conjunctive m(A|B)", 0.02, conj.weight(ab), 1e-9);
    add_row(run, name, "conjunctive m(∅)", 0.45, conj.conflict(), 1e-9);
    // The published intermediates are rounded before dividing, hence 0.02.
    const auto r = run_pipeline(doc).result;
    add_row(run, name, "m(A)", 0.44, r.weight(a), 0.02);
    add_row(run, name, "m(B)", 0.64, r.weight(b), 0.02);
    add_row(run, name, "m(A|B)", 0.02, r.weight(ab), 0.02);
    add_row(run, name, "Bel(A)", 0.44, belief(r, a), 0.02);
    add_row(run, name, "Pl(A)", 0.46, plausibility(r, a), 0.02);
    add_row(run, name, "Bel(A|B)", 1.1, belief(r, ab), 1e-6);
    add_row(run, name, "Pl(A|B)", 1.1, plausibility(r, ab), 1e-6);
  }

  std::ostringstream os;
  os << pad_right("scenario", 24) << "  " << pad_right("quantity", 20) << "  "
     << pad_left("published", 10) << "  " << pad_left("computed", 12) << "  "
     << pad_left("|delta|", 10) << "  " << pad_left("tolerance", 9) << "  status\n";
  for (const auto& c : run.comparisons) {
    char delta[32];
    char tol[32];
    std::snprintf(delta, sizeof delta, "%.3e", c.delta());
    std::snprintf(tol, sizeof tol, "%.0e", c.tolerance);
    os << pad_right(c.scenario, 24) << "  " << pad_right(c.quantity, 20) << "  "
       << pad_left(num(c.expected), 10) << "  " << pad_left(format_fixed(c.computed, 6), 12)
       << "  " << pad_left(delta, 10) << "  " << pad_left(tol, 9) << "  "
       << (c.passed() ? "ok" : "MISMATCH") << "\n";
  }
  os << (run.passed() ? "all comparisons within tolerance\n"
                      : "some comparisons exceed their tolerance\n");
  run.text = os.str();
  return run;
}

}  // namespace evidence
