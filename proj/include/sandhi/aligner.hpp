// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/compound.hpp"
#include "sandhi/corpus.hpp"
#include "sandhi/morph_tags.hpp"
#include "sandhi/phonology.hpp"
#include "sandhi/sandhi_rules.hpp"
#include "sandhi/seg_graph.hpp"

namespace sandhi {

// How a gold lemma found its nodes. The first four are the matching stages in
// the order they are tried; the last three mark slots that were only filled
// by nodes a modification synthesized.
enum class MatchStage : std::uint8_t {
  LemmaCng,
  DerivedStem,
  PronounTable,
  IicSegment,
  CausativePair,
  PreverbJoin,
  CompoundMerge,
};

std::string_view to_string(MatchStage stage);
std::optional<MatchStage> match_stage_from_string(std::string_view s);

// Matches for one (chunk, lemma occurrence) slot of a gold sentence.
struct MatchSet {
  std::size_t chunk = 0;
  std::size_t lemma_index = 0;
  PhonemeString lemma;  // gold lemma, for reporting
  CngCode cng;          // gold code, for reporting
  std::set<NodeId> nodes;
  std::optional<MatchStage> stage;  // empty iff nodes is empty

  friend bool operator==(const MatchSet&, const MatchSet&) = default;
};

enum class Category : std::uint8_t {
  all_single = 1,            // every slot has exactly one match
  some_multiple = 2,         // no empty slot, some slot has several
  some_missing = 3,          // some empty slot, none with several
  missing_and_multiple = 4,  // both
};

constexpr int to_int(Category c) noexcept { return static_cast<int>(c); }

enum class DiagnosticCode : std::uint8_t {
  CngManyToOne,
  DerivInflMismatch,
  MultiCompoundSplit,
  UnanalyzedWord,
  SecondaryDerivative,
  IndeclinableClass,
  IicPfpMismatch,
  SandhiFailure,
  ComponentCapExceeded,
};

inline constexpr std::size_t kDiagnosticCodeCount = 9;

std::string_view to_string(DiagnosticCode code);
std::optional<DiagnosticCode> diagnostic_from_string(std::string_view s);

struct Diagnostic {
  DiagnosticCode code = DiagnosticCode::UnanalyzedWord;
  std::optional<std::size_t> chunk;
  std::optional<std::size_t> lemma_index;
  std::string detail;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct AlignmentResult {
  SentenceId sent_id = 0;
  std::vector<MatchSet> match_sets;
  Category category_before = Category::all_single;
  Category category = Category::all_single;
  std::vector<NodeId> synthesized;
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const AlignmentResult&, const AlignmentResult&) = default;
};

// Lexical convention tables used by the matching and modification stages.
struct ModificationTables {
  std::map<PhonemeString, PhonemeString> causative_pairs;  // joined -> base (pūjay -> pūj)
  std::map<PhonemeString, PhonemeString> pronoun_map;      // gold -> segmenter (tvad -> yuṣmad)
  std::set<PhonemeString> taddhita_suffixes;               // gold lemmas that are secondary suffixes

  // `a<TAB>b` per line. Both directions must be injective.
  static std::map<PhonemeString, PhonemeString> load_pairs(std::istream& in, const std::string& source = "<stream>");
  // One suffix per line.
  static std::set<PhonemeString> load_suffixes(std::istream& in, const std::string& source = "<stream>");
};

enum class Modification : std::uint8_t { causative, preverb_join, compound_merge };

std::string_view to_string(Modification m);
std::optional<Modification> modification_from_string(std::string_view s);

struct AlignOptions {
  std::vector<Modification> order{Modification::causative, Modification::preverb_join, Modification::compound_merge};
  std::size_t max_components = kDefaultComponentCap;
  // Normalize lemmas of synthesized nodes with `gemination` rules.
  bool normalize = true;
  GeminationRules gemination;
};

// Everything the aligner reads from the rule directory.
struct RuleSet {
  SandhiRuleTable sandhi;
  GeminationRules gemination;
  CngTable cng;
  ModificationTables tables;

  // Expects sandhi_rules.txt, preverbs.txt, cng_table.tsv,
  // causative_pairs.tsv and pronoun_map.tsv; gemination.txt and
  // taddhita_suffixes.txt are optional. Throws ConfigError / RuleFileError.
  static RuleSet load_directory(const std::string& dir);
};

bool cng_compatible(CngCode gold, CngCode node_code, const std::set<MorphTag>& node_tags, const CngTable& table);

// Tries the four matching stages in order for every gold slot; the first
// stage with a non-empty result wins.
std::vector<MatchSet> match_lemma(const DcsSentence& sentence, const SegGraph& graph, const ModificationTables& tables,
                                  const CngTable& cng);

Category categorize(std::span<const MatchSet> match_sets);

// Gold lemmas of the slots with no match.
std::set<PhonemeString> unmatched_lemmas(std::span<const MatchSet> match_sets);

struct ModificationOutcome {
  SegGraph graph;
  std::vector<NodeId> added;
  std::vector<Diagnostic> diagnostics;
};

// Adds a node with the causative stem for each node whose lemma is the base
// of a causative pair whose joined stem is in `targets`.
ModificationOutcome modify_causative(const SegGraph& graph, const std::set<PhonemeString>& targets,
                                     const ModificationTables& tables, const AlignOptions& options = {});

// Adds, for every node with a preverb, a node whose lemma (and derivational
// lemma) has the preverb sandhied on.
ModificationOutcome modify_preverb_join(const SegGraph& graph, const SandhiRuleTable& rules,
                                        const AlignOptions& options = {});

// Joins runs of adjacent compound members within a chunk and adds a node for
// every joined form equal to a lemma in `targets`.
ModificationOutcome modify_compound_merge(const SegGraph& graph, const std::set<PhonemeString>& targets,
                                          const SandhiRuleTable& rules, const AlignOptions& options = {});

struct SentenceAlignment {
  AlignmentResult result;
  SegGraph graph;  // including synthesized nodes
};

// Match; if a slot is empty, run the modifications and match again. Slots
// matched before modification keep their original match set.
SentenceAlignment align_sentence(const DcsSentence& sentence, const SegGraph& graph, const RuleSet& rules,
                                 const AlignOptions& options = {});

}  // namespace sandhi
