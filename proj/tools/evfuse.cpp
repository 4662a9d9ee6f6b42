// evfuse: command-line front end for the evidence fusion library.
//
//   evfuse fuse --input doc.json [--rule pcr5] [--order redistribute-first]
//               [--target 0,1.2] [--precision 3] [--format text|csv]
//   evfuse classify --input doc.json
//   evfuse belpl --input doc.json --set "A|B"
//   evfuse paper-examples
//
// Exit codes: 0 ok, 1 validation error, 2 parse error, 3 rule-guard violation,
// 4 golden mismatch.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "evidence/cli_io.hpp"
#include "evidence/error.hpp"
#include "evidence/regime.hpp"

namespace {

using namespace evidence;

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kParse = 2,
  kRuleGuard = 3,
  kGoldenMismatch = 4,
};

MassRange parse_target(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--target expects lo,hi");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const auto lo_text = text.substr(0, comma);
    const auto hi_text = text.substr(comma + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("");
    return MassRange::make(lo, hi);
  } catch (const std::logic_error&) {
    throw ParseError("--target expects two numbers as lo,hi, got '" + text + "'");
  }
}

struct FuseArgs {
  std::string input;
  std::string rule;
  std::string order;
  std::string target;
  int precision = 3;
  std::string format = "text";
  bool no_normalize = false;
};

void print_source_lines(const ScenarioDocument& doc, const std::string& expr) {
  const auto set = parse_focal(expr, doc.frame);
  for (const auto& src : doc.sources) {
    const auto bi = belief_interval(src.mass, set);
    std::cout << src.name << ": Bel(" << render_focal(set, doc.frame)
              << ") = " << format_fixed(bi.bel, 6) << ", Pl = " << format_fixed(bi.pl, 6)
              << (bi.classical_semantics ? "" : " (negative weights: outside classical semantics)")
              << "\n";
  }
}

int run_fuse(const FuseArgs& args) {
  auto doc = load_document_file(args.input);
  PipelineSpec spec = doc.pipeline.value_or(PipelineSpec{});
  if (!args.rule.empty()) {
    const auto rule = parse_rule(args.rule);
    if (!rule) throw ParseError("unknown rule '" + args.rule + "'");
    spec.rule = *rule;
  }
  if (!args.order.empty()) {
    const auto order = parse_order(args.order);
    if (!order) throw ParseError("unknown order '" + args.order + "'");
    spec.order = *order;
  }
  if (!args.target.empty()) spec.target = parse_target(args.target);
  if (args.no_normalize) spec.normalize = false;
  doc.pipeline = spec;

  const auto report = run_pipeline(doc);
  const auto format = args.format == "csv" ? TableFormat::Csv : TableFormat::Text;
  std::cout << render_table(report, args.precision, format);
  if (format == TableFormat::Text) {
    const auto advisory = assess_fusion(report);
    std::cout << "advisory: " << to_string(advisory.kind) << " (" << advisory.rationale
              << ")\n";
  }
  return kOk;
}

int run_classify(const std::string& input) {
  const auto doc = load_document_file(input);
  for (const auto& src : doc.sources) {
    const auto advisory = assess(src.mass);
    std::cout << src.name << ": range " << to_string(classify_range(src.mass)) << ", sum "
              << to_string(classify_sum(src.mass)) << ", advisory "
              << to_string(advisory.kind) << " (" << advisory.rationale << ")\n";
  }
  return kOk;
}

int run_belpl(const std::string& input, const std::string& expr) {
  const auto doc = load_document_file(input);
  print_source_lines(doc, expr);
  if (doc.sources.size() >= 2) {
    const auto report = run_pipeline(doc);
    const auto set = parse_focal(expr, doc.frame);
    const auto bi = belief_interval(report.result, set);
    std::cout << "fused (" << to_string(report.rule) << "): Bel("
              << render_focal(set, doc.frame) << ") = " << format_fixed(bi.bel, 6)
              << ", Pl = " << format_fixed(bi.pl, 6)
              << (bi.classical_semantics ? "" : " (negative weights: outside classical semantics)")
              << "\n";
  }
  return kOk;
}

int run_paper_examples() {
  const auto run = paper_examples();
  std::cout << run.text;
  return run.passed() ? kOk : kGoldenMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evidence fusion over classical and over/under/off masses"};
  app.require_subcommand(1);

  FuseArgs fuse_args;
  auto* fuse = app.add_subcommand("fuse", "Fuse the sources of a scenario document");
  fuse->add_option("--input", fuse_args.input, "Scenario JSON file")->required();
  fuse->add_option("--rule", fuse_args.rule,
                   "conjunctive|dempster|pcr5|total-proportional|average");
  fuse->add_option("--order", fuse_args.order, "normalize-first|redistribute-first");
  fuse->add_option("--target", fuse_args.target, "Target range as lo,hi");
  fuse->add_option("--precision", fuse_args.precision, "Decimals in the table")
      ->check(CLI::Range(0, 15));
  fuse->add_option("--format", fuse_args.format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));
  fuse->add_flag("--no-normalize", fuse_args.no_normalize,
                 "Skip over-normalization to the target range");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Classify every source of a document");
  classify->add_option("--input", classify_input, "Scenario JSON file")->required();

  std::string belpl_input;
  std::string belpl_set;
  auto* belpl = app.add_subcommand("belpl", "Belief and plausibility of a set");
  belpl->add_option("--input", belpl_input, "Scenario JSON file")->required();
  belpl->add_option("--set", belpl_set, "Focal set, e.g. A|B")->required();

  auto* examples = app.add_subcommand("paper-examples",
                                      "Reproduce the bundled worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*fuse) return run_fuse(fuse_args);
    if (*classify) return run_classify(classify_input);
    if (*belpl) return run_belpl(belpl_input, belpl_set);
    if (*examples) return run_paper_examples();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const RuleGuardError& e) {
    std::cerr << "rule guard: " << e.what() << "\n";
    return kRuleGuard;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
