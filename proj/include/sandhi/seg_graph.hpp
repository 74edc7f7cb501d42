// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/corpus.hpp"
#include "sandhi/morph_tags.hpp"
#include "sandhi/phonology.hpp"

namespace sandhi {

using NodeId = long long;

// Half-open interval of phoneme offsets into the normalized sentence.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool overlaps(const CharSpan& other) const noexcept { return start < other.end && other.start < end; }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

// Why a node exists: read from the segmenter, or added by one of the
// alignment modifications.
enum class Provenance : std::uint8_t { none, causative, preverb_join, compound_merge };

std::string_view to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

// One candidate analysis of a stretch of the sentence.
struct CandidateSegment {
  NodeId id = 0;
  std::string color_class;  // segmenter phase: Noun, Krid, Verb, Iic, ...
  int position = 0;         // word index
  int chunk_no = 0;
  PhonemeString word;  // surface; hyphen-separated for merged compounds
  PhonemeString lemma;
  std::set<int> sense;  // homonymy indices
  CngCode cng;
  std::optional<PhonemeString> pre_verb;
  std::set<MorphTag> morph;
  int length_word = 0;  // phoneme_length(word)

  std::optional<PhonemeString> der_pre_verb;
  std::optional<PhonemeString> der_lemma;
  std::set<int> der_sense;
  std::set<MorphTag> der_morph;
  std::optional<CngCode> der_cng;

  CharSpan char_pos;
  Provenance synthetic = Provenance::none;

  friend bool operator==(const CandidateSegment&, const CandidateSegment&) = default;
};

// Sets length_word from word.
CandidateSegment with_length(CandidateSegment segment);

enum class EdgeLabel : std::uint8_t { compatible = 1, conflicting = 2 };

struct Edge {
  NodeId a = 0;  // a < b
  NodeId b = 0;
  EdgeLabel label = EdgeLabel::compatible;

  friend bool operator==(const Edge&, const Edge&) = default;
};

EdgeLabel edge_label(const CandidateSegment& x, const CandidateSegment& y) noexcept;

// Candidate segments of one sentence with one labeled edge per unordered node
// pair. Immutable; transformations return new graphs.
class SegGraph {
 public:
  SegGraph() = default;

  const std::vector<CandidateSegment>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::optional<std::size_t> sentence_length() const noexcept { return sentence_length_; }

  const CandidateSegment* find(NodeId id) const;
  std::optional<EdgeLabel> label(NodeId x, NodeId y) const;
  // One past the largest id in use.
  NodeId next_id() const;

  friend bool operator==(const SegGraph&, const SegGraph&) = default;

 private:
  friend SegGraph build_graph(std::vector<CandidateSegment>, std::optional<std::size_t>);
  friend SegGraph add_synthetic_node(const SegGraph&, CandidateSegment);

  std::vector<CandidateSegment> nodes_;  // sorted by id
  std::vector<Edge> edges_;              // sorted by (a, b)
  std::optional<std::size_t> sentence_length_;
};

// Throws DuplicateNodeId, or SpanOutOfRange for an empty span, a span past
// `sentence_length`, or a length_word that disagrees with the word.
SegGraph build_graph(std::vector<CandidateSegment> segments, std::optional<std::size_t> sentence_length = std::nullopt);

// Collapses nodes that differ only in homonymy indices (and id) into one
// node carrying the union of the indices. The smallest id survives.
SegGraph merge_homonyms(const SegGraph& graph);

// Inserts a node produced by a modification. Throws DuplicateNodeId, and
// std::invalid_argument when the node is not marked synthetic.
SegGraph add_synthetic_node(const SegGraph& graph, CandidateSegment node);

// Applies normalize() to every phonological field and refreshes length_word.
SegGraph normalize_graph(const SegGraph& graph, const GeminationRules& rules = {});

std::string write_graphml(const SegGraph& graph, std::string_view graph_id = "G");
// Throws MalformedDocument or MissingAttribute.
SegGraph read_graphml(std::string_view document);

// One line of analyses.jsonl: the segmenter's output for a sentence.
struct SentenceAnalyses {
  SentenceId sent_id = 0;
  std::vector<CandidateSegment> segments;
};

// Throws MalformedRecord.
SentenceAnalyses parse_analyses_record(std::string_view line);
std::vector<SentenceAnalyses> read_analyses(std::istream& in, const std::string& source = "<stream>");

}  // namespace sandhi
