// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

// Command-line driver: align, report, validate, graphml.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sandhi/errors.hpp"
#include "sandhi/pipeline.hpp"
#include "sandhi/report.hpp"
#include "text_util.hpp"

namespace {

using namespace sandhi;

std::string rules_fallback() {
  const char* env = std::getenv("SANDHI_ALIGN_RULES");
  return env != nullptr ? env : "";
}

std::vector<Modification> parse_order(const std::string& text) {
  std::vector<Modification> out;
  for (const auto& part : detail::split(text, ',')) {
    const auto m = modification_from_string(detail::trim(part));
    if (!m) throw ConfigError("unknown modification '" + part + "' (expected causative, preverb, compound)");
    out.push_back(*m);
  }
  return out;
}

int cmd_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<AlignmentResult> results;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (detail::trim(line).empty()) continue;
    try {
      results.push_back(parse_alignment_line(line));
    } catch (const Error& e) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  std::cout << report_to_json(summarize(results));
  return 0;
}

int cmd_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<RawDcsRecord> records;
  std::string line;
  int status = 0;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (detail::trim(line).empty()) continue;
    try {
      records.push_back(parse_raw_record(line));
    } catch (const Error& e) {
      std::cout << path << ":" << line_no << ": " << e.what() << '\n';
      status = 1;
    }
  }
  const auto issues = validate_corpus(records);
  for (const auto& issue : issues) {
    std::cout << "sent_id " << issue.sent_id << ": " << to_string(issue.kind) << ": " << issue.detail << '\n';
  }
  if (!issues.empty()) status = 1;
  std::cout << records.size() << " records, " << issues.size() << " issues\n";
  return status;
}

int cmd_graphml(const std::string& analyses_path, SentenceId sent_id, const std::string& out_path,
                const std::string& rules_dir, bool normalize) {
  std::ifstream in(analyses_path);
  if (!in) throw ConfigError("cannot open " + analyses_path);
  GeminationRules gemination;
  if (!rules_dir.empty()) gemination = RuleSet::load_directory(rules_dir).gemination;

  for (auto& a : read_analyses(in, analyses_path)) {
    if (a.sent_id != sent_id) continue;
    auto graph = build_graph(std::move(a.segments));
    if (normalize) graph = normalize_graph(graph, gemination);
    graph = merge_homonyms(graph);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + out_path);
    out << write_graphml(graph, std::to_string(sent_id));
    return out ? 0 : 1;
  }
  throw ConfigError("sent_id " + std::to_string(sent_id) + " not found in " + analyses_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Align a tagged gold corpus with candidate segmentations."};
  app.require_subcommand(1);

  RunConfig config;
  std::string order = "causative,preverb,compound";
  bool no_normalize = false;
  auto* align = app.add_subcommand("align", "Align a corpus and write alignment, report, gold and graph files");
  align->add_option("--corpus", config.corpus, "Gold corpus (JSON Lines)")->required();
  align->add_option("--analyses", config.analyses, "Segmenter analyses (JSON Lines)")->required();
  align->add_option("--rules", config.rules_dir, "Rule directory (default: $SANDHI_ALIGN_RULES)");
  align->add_option("--out", config.out_dir, "Output directory")->required();
  align->add_flag("--no-normalize", no_normalize, "Skip anusvara and gemination normalization");
  align->add_option("--max-components", config.max_components, "Largest compound to enumerate")
      ->capture_default_str();
  align->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  align->add_option("--order", order, "Modification order")->capture_default_str();

  std::string report_in;
  auto* report = app.add_subcommand("report", "Summarize an alignment.jsonl file");
  report->add_option("--in", report_in, "alignment.jsonl")->required();

  std::string validate_in;
  auto* validate = app.add_subcommand("validate", "Check a gold corpus for structural problems");
  validate->add_option("--corpus", validate_in, "Gold corpus (JSON Lines)")->required();

  std::string graph_analyses;
  std::string graph_out;
  std::string graph_rules;
  SentenceId graph_id = 0;
  bool graph_no_normalize = false;
  auto* graphml = app.add_subcommand("graphml", "Write one sentence's merged candidate graph as GraphML");
  graphml->add_option("--analyses", graph_analyses, "Segmenter analyses (JSON Lines)")->required();
  graphml->add_option("--sent-id", graph_id, "Sentence id")->required();
  graphml->add_option("--out", graph_out, "Output file")->required();
  graphml->add_option("--rules", graph_rules, "Rule directory for gemination rules (default: $SANDHI_ALIGN_RULES)");
  graphml->add_flag("--no-normalize", graph_no_normalize, "Skip normalization");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*align) {
      if (config.rules_dir.empty()) config.rules_dir = rules_fallback();
      if (config.rules_dir.empty()) throw ConfigError("no rule directory: pass --rules or set SANDHI_ALIGN_RULES");
      config.normalize = !no_normalize;
      config.order = parse_order(order);
      return run_align(config, std::cerr);
    }
    if (*report) return cmd_report(report_in);
    if (*validate) return cmd_validate(validate_in);
    if (*graphml) {
      if (graph_rules.empty()) graph_rules = rules_fallback();
      return cmd_graphml(graph_analyses, graph_id, graph_out, graph_rules, !graph_no_normalize);
    }
  } catch (const std::exception& e) {
    std::cerr << "sandhi-align: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
