// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/seg_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "sandhi/errors.hpp"

namespace sandhi {

namespace {

void validate_segment(const CandidateSegment& s, std::optional<std::size_t> sentence_length) {
  if (s.char_pos.start >= s.char_pos.end) {
    throw SpanOutOfRange(s.id, "empty char_pos [" + std::to_string(s.char_pos.start) + "," +
                                   std::to_string(s.char_pos.end) + ")");
  }
  if (sentence_length && s.char_pos.end > *sentence_length) {
    throw SpanOutOfRange(s.id, "char_pos end " + std::to_string(s.char_pos.end) + " exceeds sentence length " +
                                   std::to_string(*sentence_length));
  }
  if (static_cast<std::size_t>(s.length_word) != phoneme_length(s.word)) {
    throw SpanOutOfRange(s.id, "length_word " + std::to_string(s.length_word) + " does not match word '" +
                                   render_iast(s.word) + "'");
  }
}

std::vector<Edge> all_edges(const std::vector<CandidateSegment>& nodes) {
  std::vector<Edge> edges;
  edges.reserve(nodes.size() * (nodes.size() - (nodes.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      edges.push_back({nodes[i].id, nodes[j].id, edge_label(nodes[i], nodes[j])});
    }
  }
  return edges;
}

bool by_id(const CandidateSegment& x, const CandidateSegment& y) { return x.id < y.id; }

bool edge_order(const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }

// Everything that identifies an analysis except its id and sense indices.
auto merge_key(const CandidateSegment& s) {
  return std::tie(s.word, s.lemma, s.cng, s.morph, s.chunk_no, s.char_pos, s.pre_verb, s.der_pre_verb, s.der_lemma,
                  s.der_morph, s.der_cng, s.color_class, s.position, s.synthetic);
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::none: return "none";
    case Provenance::causative: return "causative";
    case Provenance::preverb_join: return "preverb_join";
    case Provenance::compound_merge: return "compound_merge";
  }
  return "none";
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
  for (auto p : {Provenance::none, Provenance::causative, Provenance::preverb_join, Provenance::compound_merge}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

CandidateSegment with_length(CandidateSegment segment) {
  segment.length_word = static_cast<int>(phoneme_length(segment.word));
  return segment;
}

EdgeLabel edge_label(const CandidateSegment& x, const CandidateSegment& y) noexcept {
  return x.char_pos.overlaps(y.char_pos) ? EdgeLabel::conflicting : EdgeLabel::compatible;
}

const CandidateSegment* SegGraph::find(NodeId id) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                                   [](const CandidateSegment& s, NodeId value) { return s.id < value; });
  return it != nodes_.end() && it->id == id ? &*it : nullptr;
}

std::optional<EdgeLabel> SegGraph::label(NodeId x, NodeId y) const {
  if (x > y) std::swap(x, y);
  const Edge probe{x, y, EdgeLabel::compatible};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_order);
  if (it == edges_.end() || it->a != x || it->b != y) return std::nullopt;
  return it->label;
}

NodeId SegGraph::next_id() const { return nodes_.empty() ? 1 : nodes_.back().id + 1; }

SegGraph build_graph(std::vector<CandidateSegment> segments, std::optional<std::size_t> sentence_length) {
  std::sort(segments.begin(), segments.end(), by_id);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0 && segments[i].id == segments[i - 1].id) throw DuplicateNodeId(segments[i].id);
    validate_segment(segments[i], sentence_length);
  }
  SegGraph g;
  g.edges_ = all_edges(segments);
  g.nodes_ = std::move(segments);
  g.sentence_length_ = sentence_length;
  return g;
}

SegGraph merge_homonyms(const SegGraph& graph) {
  const auto& nodes = graph.nodes();
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable so the smallest id leads each group.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return merge_key(nodes[x]) < merge_key(nodes[y]); });

  std::vector<CandidateSegment> merged;
  for (std::size_t k = 0; k < order.size();) {
    CandidateSegment head = nodes[order[k]];
    std::size_t next = k + 1;
    while (next < order.size() && merge_key(nodes[order[next]]) == merge_key(head)) {
      const auto& other = nodes[order[next]];
      head.sense.insert(other.sense.begin(), other.sense.end());
      head.der_sense.insert(other.der_sense.begin(), other.der_sense.end());
      ++next;
    }
    merged.push_back(std::move(head));
    k = next;
  }
  return build_graph(std::move(merged), graph.sentence_length());
}

SegGraph add_synthetic_node(const SegGraph& graph, CandidateSegment node) {
  if (node.synthetic == Provenance::none) throw std::invalid_argument("add_synthetic_node: node is not synthetic");
  if (graph.find(node.id) != nullptr) throw DuplicateNodeId(node.id);
  validate_segment(node, graph.sentence_length());

  SegGraph g = graph;
  for (const auto& existing : graph.nodes()) {
    const NodeId a = std::min(existing.id, node.id);
    const NodeId b = std::max(existing.id, node.id);
    g.edges_.push_back({a, b, edge_label(existing, node)});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), edge_order);
  const auto pos = std::upper_bound(g.nodes_.begin(), g.nodes_.end(), node, by_id);
  g.nodes_.insert(pos, std::move(node));
  return g;
}

SegGraph normalize_graph(const SegGraph& graph, const GeminationRules& rules) {
  std::vector<CandidateSegment> nodes = graph.nodes();
  auto norm_opt = [&](std::optional<PhonemeString>& field) {
    if (field) field = normalize(*field, rules);
  };
  for (auto& n : nodes) {
    n.word = normalize(n.word, rules);
    n.lemma = normalize(n.lemma, rules);
    norm_opt(n.pre_verb);
    norm_opt(n.der_pre_verb);
    norm_opt(n.der_lemma);
    n = with_length(std::move(n));
  }
  return build_graph(std::move(nodes), graph.sentence_length());
}

}  // namespace sandhi
