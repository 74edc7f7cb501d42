// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>

#include "sandhi/aligner.hpp"
#include "sandhi/errors.hpp"

namespace sandhi {

namespace {

// Upper bound on maximal compound paths explored per chunk. Segmenter output
// has a handful per chunk; the bound only guards against pathological input.
constexpr std::size_t kMaxCompoundPaths = 4096;

PhonemeString maybe_normalize(const PhonemeString& ps, const AlignOptions& options) {
  return options.normalize ? normalize(ps, options.gemination) : ps;
}

bool has_iic_tag(const CandidateSegment& node) {
  return std::any_of(node.morph.begin(), node.morph.end(), [](const MorphTag& t) { return t.is_iic(); });
}

class Builder {
 public:
  explicit Builder(const SegGraph& graph) : graph_(graph), next_(graph.next_id()) {}

  void add(CandidateSegment node) {
    node.id = next_++;
    node = with_length(std::move(node));
    out_.added.push_back(node.id);
    graph_ = add_synthetic_node(graph_, std::move(node));
  }

  void diagnose(DiagnosticCode code, std::string detail) {
    out_.diagnostics.push_back({code, std::nullopt, std::nullopt, std::move(detail)});
  }

  ModificationOutcome finish() && {
    out_.graph = std::move(graph_);
    return std::move(out_);
  }

 private:
  SegGraph graph_;
  NodeId next_;
  ModificationOutcome out_;
};

// Every maximal chain u1 -> u2 -> ... where each step continues the previous
// span exactly and all but the last member carry an iic tag.
std::vector<std::vector<const CandidateSegment*>> compound_paths(const std::vector<const CandidateSegment*>& chunk,
                                                                 bool& truncated) {
  std::map<const CandidateSegment*, std::vector<const CandidateSegment*>> next;
  std::set<const CandidateSegment*> has_incoming;
  for (const auto* u : chunk) {
    if (!has_iic_tag(*u)) continue;
    for (const auto* v : chunk) {
      if (u != v && u->char_pos.end == v->char_pos.start) {
        next[u].push_back(v);
        has_incoming.insert(v);
      }
    }
  }

  std::vector<std::vector<const CandidateSegment*>> paths;
  std::vector<const CandidateSegment*> stack;
  truncated = false;
  auto walk = [&](auto&& self, const CandidateSegment* u) -> void {
    if (paths.size() >= kMaxCompoundPaths) {
      truncated = true;
      return;
    }
    stack.push_back(u);
    const auto it = next.find(u);
    if (it == next.end()) {
      if (stack.size() >= 2) paths.push_back(stack);
    } else {
      for (const auto* v : it->second) self(self, v);
    }
    stack.pop_back();
  };
  for (const auto* u : chunk) {
    if (next.contains(u) && !has_incoming.contains(u)) walk(walk, u);
  }
  return paths;
}

}  // namespace

ModificationOutcome modify_causative(const SegGraph& graph, const std::set<PhonemeString>& targets,
                                     const ModificationTables& tables, const AlignOptions& options) {
  Builder b(graph);
  for (const auto& node : graph.nodes()) {
    if (node.synthetic == Provenance::causative) continue;
    const auto base = strip_boundaries(node.lemma);
    for (const auto& [joined, pair_base] : tables.causative_pairs) {
      if (!targets.contains(joined) || strip_boundaries(pair_base) != base) continue;
      auto copy = node;
      copy.lemma = maybe_normalize(joined, options);
      copy.synthetic = Provenance::causative;
      b.add(std::move(copy));
    }
  }
  return std::move(b).finish();
}

ModificationOutcome modify_preverb_join(const SegGraph& graph, const SandhiRuleTable& rules,
                                        const AlignOptions& options) {
  Builder b(graph);
  for (const auto& node : graph.nodes()) {
    if (node.synthetic == Provenance::preverb_join) continue;
    if (!node.pre_verb && !(node.der_pre_verb && node.der_lemma)) continue;
    auto copy = node;
    try {
      if (node.pre_verb) {
        copy.lemma = maybe_normalize(apply_preverb(*node.pre_verb, node.lemma, rules), options);
        copy.pre_verb.reset();
      }
      if (node.der_pre_verb && node.der_lemma) {
        copy.der_lemma = maybe_normalize(apply_preverb(*node.der_pre_verb, *node.der_lemma, rules), options);
        copy.der_pre_verb.reset();
      }
    } catch (const Error& e) {
      b.diagnose(DiagnosticCode::SandhiFailure, "node " + std::to_string(node.id) + ": " + e.what());
      continue;
    }
    copy.synthetic = Provenance::preverb_join;
    b.add(std::move(copy));
  }
  return std::move(b).finish();
}

ModificationOutcome modify_compound_merge(const SegGraph& graph, const std::set<PhonemeString>& targets,
                                          const SandhiRuleTable& rules, const AlignOptions& options) {
  Builder b(graph);

  std::map<int, std::vector<const CandidateSegment*>> chunks;
  for (const auto& node : graph.nodes()) {
    if (node.synthetic != Provenance::compound_merge) chunks[node.chunk_no].push_back(&node);
  }

  std::set<std::vector<NodeId>> seen_groups;
  std::map<PhonemeString, std::vector<PhonemeString>> splits_by_lemma;  // joined lemma -> words

  for (const auto& [chunk_no, members] : chunks) {
    bool truncated = false;
    const auto paths = compound_paths(members, truncated);
    if (truncated) {
      b.diagnose(DiagnosticCode::ComponentCapExceeded,
                 "chunk " + std::to_string(chunk_no) + ": more than " + std::to_string(kMaxCompoundPaths) +
                     " compound paths");
    }
    for (const auto& path : paths) {
      std::vector<Partition> partitions;
      try {
        partitions = enumerate_partition_ranges(path.size(), options.max_components);
      } catch (const TooManyComponents& e) {
        b.diagnose(DiagnosticCode::ComponentCapExceeded, "chunk " + std::to_string(chunk_no) + ": " + e.what());
        continue;
      }
      for (const auto& partition : partitions) {
        for (const auto& group : partition) {
          if (group.size() < 2) continue;
          std::vector<NodeId> ids;
          for (std::size_t k = group.first; k < group.last; ++k) ids.push_back(path[k]->id);
          if (!seen_groups.insert(ids).second) continue;

          PhonemeString joined = strip_boundaries(path[group.first]->lemma);
          PhonemeString plain = joined;
          PhonemeString word = joined;
          try {
            for (std::size_t k = group.first + 1; k < group.last; ++k) {
              const auto lemma = strip_boundaries(path[k]->lemma);
              joined = vowel_sandhi_join(joined, lemma, rules);
              plain.append(lemma);
              word.push_back(Phoneme::hyphen);
              word.append(lemma);
            }
          } catch (const Error& e) {
            b.diagnose(DiagnosticCode::SandhiFailure, "chunk " + std::to_string(chunk_no) + ": " + e.what());
            continue;
          }
          joined = maybe_normalize(joined, options);
          plain = maybe_normalize(plain, options);

          const PhonemeString* hit = targets.contains(joined) ? &joined : targets.contains(plain) ? &plain : nullptr;
          if (hit == nullptr) continue;

          const auto& first = *path[group.first];
          const auto& last = *path[group.last - 1];
          CandidateSegment node;
          node.color_class = last.color_class;
          node.position = first.position;
          node.chunk_no = first.chunk_no;
          node.word = word;
          node.lemma = *hit;
          node.cng = last.cng;
          node.morph = last.morph;
          node.char_pos = {first.char_pos.start, last.char_pos.end};
          node.synthetic = Provenance::compound_merge;
          splits_by_lemma[*hit].push_back(word);
          b.add(std::move(node));
        }
      }
    }
  }

  for (const auto& [lemma, words] : splits_by_lemma) {
    if (words.size() < 2) continue;
    std::string detail = "'" + render_iast(lemma) + "' reached by";
    for (const auto& w : words) detail += " " + render_iast(w);
    b.diagnose(DiagnosticCode::MultiCompoundSplit, detail);
  }
  return std::move(b).finish();
}

}  // namespace sandhi
