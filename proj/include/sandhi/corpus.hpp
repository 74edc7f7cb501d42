// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/morph_tags.hpp"
#include "sandhi/phonology.hpp"

namespace sandhi {

using SentenceId = long long;

// One gold-corpus sentence: the line, its chunks, and per chunk the lemmas
// and CNG codes assigned by the annotator.
struct DcsSentence {
  SentenceId sent_id = 0;
  PhonemeString text;
  std::vector<PhonemeString> chunks;
  std::vector<std::vector<PhonemeString>> lemmas;
  std::vector<std::vector<CngCode>> cngs;

  std::size_t slot_count() const;

  friend bool operator==(const DcsSentence&, const DcsSentence&) = default;
};

// The JSON record before any IAST parsing, kept so validation can report
// every problem in a record instead of stopping at the first.
struct RawDcsRecord {
  std::optional<SentenceId> sent_id;
  std::string text;
  std::vector<std::string> chunks;
  std::vector<std::vector<std::string>> lemmas;
  std::vector<std::vector<int>> cngs;
};

enum class CorpusIssueKind { LengthMismatch, EmptyChunk, BadPhoneme, DuplicateId };

std::string_view to_string(CorpusIssueKind kind);

struct CorpusIssue {
  SentenceId sent_id = 0;
  CorpusIssueKind kind = CorpusIssueKind::LengthMismatch;
  std::string detail;
};

// Structural decode of one JSON line. Throws MalformedRecord.
RawDcsRecord parse_raw_record(std::string_view line);

// Full decode. Throws MalformedRecord for structural problems and
// UnknownSymbol (with the sentence id in its context) for bad letters.
DcsSentence parse_dcs_record(std::string_view line);
DcsSentence to_sentence(const RawDcsRecord& raw);

std::vector<CorpusIssue> validate_corpus(std::span<const RawDcsRecord> records);

// Reads a JSON Lines corpus. Errors carry the 1-based line number.
std::vector<DcsSentence> read_corpus(std::istream& in, const std::string& source = "<stream>");

DcsSentence normalize_sentence(const DcsSentence& sentence, const GeminationRules& rules = {});

// Chunks joined by single spaces.
PhonemeString reassemble_chunks(const DcsSentence& sentence);

}  // namespace sandhi
