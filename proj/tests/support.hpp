// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sandhi/aligner.hpp"
#include "sandhi/pipeline.hpp"
#include "sandhi/phonology.hpp"
#include "sandhi/seg_graph.hpp"

namespace sandhi::testing {

inline std::string source_path(const std::string& relative) { return std::string(SANDHI_SOURCE_DIR) + "/" + relative; }

inline std::string rules_dir() { return source_path("data/rules"); }

inline const RuleSet& default_rules() {
  static const RuleSet rules = RuleSet::load_directory(rules_dir());
  return rules;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline PhonemeString P(std::string_view iast) { return parse_iast(iast); }

inline std::set<MorphTag> tags(std::initializer_list<const char*> items) {
  std::set<MorphTag> out;
  for (const char* t : items) out.emplace(t);
  return out;
}

// A segment with the fields the tests care about; the rest defaulted.
inline CandidateSegment seg(NodeId id, std::string_view word, std::string_view lemma, int cng,
                            std::initializer_list<const char*> morph, CharSpan span, int chunk_no = 1) {
  CandidateSegment s;
  s.id = id;
  s.color_class = "Noun";
  s.position = static_cast<int>(span.start);
  s.chunk_no = chunk_no;
  s.word = P(word);
  s.lemma = P(lemma);
  s.sense = {1};
  s.cng = CngCode{cng};
  s.morph = tags(morph);
  s.char_pos = span;
  return with_length(std::move(s));
}

// A gold sentence from chunks of (lemma, code) pairs; chunk surface forms
// are the first lemma of each chunk.
inline DcsSentence gold(SentenceId id, std::initializer_list<std::initializer_list<std::pair<const char*, int>>> chunks) {
  DcsSentence s;
  s.sent_id = id;
  for (const auto& chunk : chunks) {
    if (!s.text.empty()) s.text.push_back(Phoneme::space);
    s.chunks.push_back(P(chunk.begin()->first));
    s.text.append(s.chunks.back());
    s.lemmas.emplace_back();
    s.cngs.emplace_back();
    for (const auto& [lemma, code] : chunk) {
      s.lemmas.back().push_back(P(lemma));
      s.cngs.back().push_back(CngCode{code});
    }
  }
  return s;
}

// The fixture corpus joined with its analyses, normalized.
inline const std::vector<SentenceBundle>& fixture_bundles() {
  static const auto bundles = [] {
    std::ifstream corpus(source_path("tests/data/fixture/corpus.jsonl"));
    std::ifstream analyses(source_path("tests/data/fixture/analyses.jsonl"));
    return prepare_bundles(read_corpus(corpus, "corpus.jsonl"), read_analyses(analyses, "analyses.jsonl"),
                           default_rules().gemination, true);
  }();
  return bundles;
}

inline const SentenceBundle& fixture(SentenceId id) {
  for (const auto& b : fixture_bundles()) {
    if (b.sentence.sent_id == id) return b;
  }
  throw std::runtime_error("no fixture sentence " + std::to_string(id));
}

using Rng = std::mt19937_64;

inline Phoneme random_phoneme(Rng& rng, bool allow_boundaries = false) {
  const auto last = allow_boundaries ? kPhonemeCount - 1 : static_cast<std::size_t>(Phoneme::avagraha);
  std::uniform_int_distribution<std::size_t> pick(0, last);
  return static_cast<Phoneme>(pick(rng));
}

inline PhonemeString random_string(Rng& rng, std::size_t max_len, bool allow_boundaries = false) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  PhonemeString out;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_phoneme(rng, allow_boundaries));
  return out;
}

// Random vowels and consonants, leaving out the vocalic l (no sandhi rules
// cover it) and stop + h sequences, which IAST cannot tell from aspirates.
inline PhonemeString random_word(Rng& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(Phoneme::h));
  PhonemeString out;
  const auto n = len(rng);
  while (out.size() < n) {
    const auto p = static_cast<Phoneme>(pick(rng));
    if (p == Phoneme::l_vocalic || p == Phoneme::ll_vocalic) continue;
    if (p == Phoneme::h && !out.empty() && is_stop(out.back())) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace sandhi::testing
