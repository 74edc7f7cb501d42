// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "sandhi/errors.hpp"

namespace sandhi {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

std::string sidecar_line(const AlignmentResult& result, const DcsSentence& sentence) {
  json out;
  out["sent_id"] = result.sent_id;
  out["category"] = to_int(result.category);
  out["text"] = render_iast(sentence.text);
  json missing = json::array();
  for (const auto& lemma : unmatched_lemmas(result.match_sets)) missing.push_back(render_iast(lemma));
  out["unmatched"] = std::move(missing);
  return out.dump();
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (!fs::is_regular_file(config.corpus)) throw ConfigError("corpus file not found: " + config.corpus);
  if (!fs::is_regular_file(config.analyses)) throw ConfigError("analyses file not found: " + config.analyses);
  if (!fs::is_directory(config.rules_dir)) throw ConfigError("rule directory not found: " + config.rules_dir);
  if (config.out_dir.empty()) throw ConfigError("no output directory given");
  if (config.jobs == 0) throw ConfigError("--jobs must be at least 1");
  if (config.max_components == 0) throw ConfigError("--max-components must be at least 1");
}

std::vector<SentenceBundle> prepare_bundles(std::vector<DcsSentence> corpus, std::vector<SentenceAnalyses> analyses,
                                            const GeminationRules& gemination, bool normalize) {
  std::map<SentenceId, SentenceAnalyses> by_id;
  for (auto& a : analyses) {
    const auto id = a.sent_id;
    if (!by_id.emplace(id, std::move(a)).second) throw MalformedRecord("duplicate analyses record", id);
  }

  std::vector<SentenceBundle> out;
  out.reserve(corpus.size());
  std::set<SentenceId> seen;
  for (auto& sentence : corpus) {
    const auto id = sentence.sent_id;
    if (!seen.insert(id).second) throw MalformedRecord("duplicate corpus record", id);
    auto it = by_id.find(id);
    if (it == by_id.end()) throw MalformedRecord("no analyses for sentence", id);

    SentenceBundle bundle;
    bundle.sentence = normalize ? normalize_sentence(sentence, gemination) : std::move(sentence);
    try {
      auto graph = build_graph(std::move(it->second.segments), bundle.sentence.text.size());
      if (normalize) graph = normalize_graph(graph, gemination);
      bundle.graph = merge_homonyms(graph);
    } catch (const MalformedRecord&) {
      throw;
    } catch (const Error& e) {
      throw MalformedRecord(e.what(), id);
    }
    by_id.erase(it);
    out.push_back(std::move(bundle));
  }
  if (!by_id.empty()) throw MalformedRecord("analyses for a sentence missing from the corpus", by_id.begin()->first);

  std::sort(out.begin(), out.end(),
            [](const SentenceBundle& x, const SentenceBundle& y) { return x.sentence.sent_id < y.sentence.sent_id; });
  return out;
}

std::vector<SentenceAlignment> align_all(const std::vector<SentenceBundle>& bundles, const RuleSet& rules,
                                         const AlignOptions& options, std::size_t jobs) {
  std::vector<SentenceAlignment> out(bundles.size());
  std::vector<std::exception_ptr> errors(bundles.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < bundles.size(); i = next++) {
      try {
        out[i] = align_sentence(bundles[i].sentence, bundles[i].graph, rules, options);
      } catch (const Error& e) {
        errors[i] = std::make_exception_ptr(MalformedRecord(e.what(), bundles[i].sentence.sent_id));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(bundles.size(), 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  // Report the error of the earliest sentence so the message does not depend
  // on scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

int run_align(const RunConfig& config, std::ostream& err) {
  try {
    validate_config(config);
    const auto rules = RuleSet::load_directory(config.rules_dir);

    std::vector<DcsSentence> corpus;
    {
      auto in = open_input(config.corpus);
      corpus = read_corpus(in, config.corpus);
    }
    std::vector<SentenceAnalyses> analyses;
    {
      auto in = open_input(config.analyses);
      analyses = read_analyses(in, config.analyses);
    }

    std::vector<SentenceBundle> bundles;
    try {
      bundles = prepare_bundles(std::move(corpus), std::move(analyses), rules.gemination, config.normalize);
    } catch (const Error& e) {
      throw ConfigError(config.corpus + " / " + config.analyses + ": " + e.what());
    }

    AlignOptions options;
    options.order = config.order;
    options.max_components = config.max_components;
    options.normalize = config.normalize;
    options.gemination = rules.gemination;
    const auto aligned = align_all(bundles, rules, options, config.jobs);

    const fs::path out_dir(config.out_dir);
    fs::create_directories(out_dir / "graphs");
    auto alignment = open_output(out_dir / "alignment.jsonl");
    auto gold = open_output(out_dir / "gold.jsonl");
    auto ambiguous = open_output(out_dir / "ambiguous.jsonl");
    auto unmatched = open_output(out_dir / "unmatched.jsonl");

    std::vector<AlignmentResult> results;
    results.reserve(aligned.size());
    for (std::size_t i = 0; i < aligned.size(); ++i) {
      const auto& [result, graph] = aligned[i];
      const auto& sentence = bundles[i].sentence;
      alignment << alignment_to_json(result) << '\n';
      switch (result.category) {
        case Category::all_single: gold << gold_to_json(result, sentence, graph) << '\n'; break;
        case Category::some_multiple: ambiguous << sidecar_line(result, sentence) << '\n'; break;
        default: unmatched << sidecar_line(result, sentence) << '\n'; break;
      }
      auto graphml = open_output(out_dir / "graphs" / (std::to_string(result.sent_id) + ".graphml"));
      graphml << write_graphml(graph, std::to_string(result.sent_id));
      results.push_back(result);
    }
    auto report = open_output(out_dir / "report.json");
    report << report_to_json(summarize(results));

    for (auto* f : {&alignment, &gold, &ambiguous, &unmatched, &report}) {
      f->flush();
      if (!*f) throw ConfigError("write failed under " + config.out_dir);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "sandhi-align: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sandhi
