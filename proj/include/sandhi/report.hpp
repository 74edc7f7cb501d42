// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "sandhi/aligner.hpp"

namespace sandhi {

// Corpus-level counts over a set of alignment results.
struct Report {
  std::uint64_t total = 0;
  std::array<std::uint64_t, 4> category{};  // index 0 is category 1
  std::uint64_t fully_matched = 0;          // categories 1 and 2
  // Sentences in category 3 or 4 before modification, and how they ended:
  // modified means at least one node was synthesized for the sentence.
  std::uint64_t sent_for_modification = 0;
  std::uint64_t modified_count = 0;
  std::uint64_t unmodified_unmatched = 0;
  std::uint64_t modified_unmatched = 0;
  std::array<std::uint64_t, kDiagnosticCodeCount> diagnostics{};
  // Percentages in tenths, rounded half-up: 776 means 77.6.
  std::uint64_t matched_pct_tenths = 0;  // fully_matched / total
  std::uint64_t single_pct_tenths = 0;   // category 1 / fully_matched

  double matched_pct() const noexcept { return static_cast<double>(matched_pct_tenths) / 10.0; }
  double single_pct() const noexcept { return static_cast<double>(single_pct_tenths) / 10.0; }

  friend bool operator==(const Report&, const Report&) = default;
};

// 100 * num / den in tenths of a percent, rounded half-up; 0 when den is 0.
std::uint64_t percent_tenths(std::uint64_t num, std::uint64_t den);

Report summarize(std::span<const AlignmentResult> results);

// report.json body, pretty-printed with a trailing newline.
std::string report_to_json(const Report& report);

// One alignment.jsonl line, without the newline.
std::string alignment_to_json(const AlignmentResult& result);
// Throws MalformedRecord.
AlignmentResult parse_alignment_line(std::string_view line);

// One gold.jsonl line for a category-1 sentence: the matched nodes in surface
// order. Throws std::invalid_argument for any other category.
std::string gold_to_json(const AlignmentResult& result, const DcsSentence& sentence, const SegGraph& graph);

}  // namespace sandhi
