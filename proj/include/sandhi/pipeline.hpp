// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sandhi/aligner.hpp"
#include "sandhi/corpus.hpp"
#include "sandhi/report.hpp"
#include "sandhi/seg_graph.hpp"

namespace sandhi {

struct RunConfig {
  std::string corpus;     // gold corpus, JSON Lines
  std::string analyses;   // segmenter output, JSON Lines
  std::string rules_dir;
  std::string out_dir;
  bool normalize = true;
  std::size_t max_components = kDefaultComponentCap;
  std::vector<Modification> order{Modification::causative, Modification::preverb_join, Modification::compound_merge};
  std::size_t jobs = 1;
};

// Throws ConfigError naming the first missing path.
void validate_config(const RunConfig& config);

// One sentence ready to align: normalized gold record and its merged graph.
struct SentenceBundle {
  DcsSentence sentence;
  SegGraph graph;
};

// Pairs every corpus sentence with its analyses by sent_id, normalizes both
// sides when asked, and builds the homonym-merged graph. Throws
// MalformedRecord for a sentence without analyses (or analyses without a
// sentence) and for duplicate ids; graph errors carry the sent_id.
std::vector<SentenceBundle> prepare_bundles(std::vector<DcsSentence> corpus, std::vector<SentenceAnalyses> analyses,
                                            const GeminationRules& gemination, bool normalize);

// Aligns every bundle on `jobs` worker threads. The output is in sent_id
// order whatever the thread count.
std::vector<SentenceAlignment> align_all(const std::vector<SentenceBundle>& bundles, const RuleSet& rules,
                                         const AlignOptions& options, std::size_t jobs);

// The whole `align` command. Writes alignment.jsonl, report.json, gold.jsonl,
// ambiguous.jsonl, unmatched.jsonl and graphs/<sent_id>.graphml under
// out_dir. Returns 0, or 1 after printing the error to `err`.
int run_align(const RunConfig& config, std::ostream& err);

}  // namespace sandhi
