// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/aligner.hpp"

#include <algorithm>
#include <array>

namespace sandhi {

namespace {

constexpr std::array<std::string_view, 7> kStageNames{
    "LemmaCng", "DerivedStem", "PronounTable", "IicSegment", "CausativePair", "PreverbJoin", "CompoundMerge",
};

constexpr std::array<std::string_view, kDiagnosticCodeCount> kDiagnosticNames{
    "CngManyToOne",        "DerivInflMismatch", "MultiCompoundSplit", "UnanalyzedWord",       "SecondaryDerivative",
    "IndeclinableClass",   "IicPfpMismatch",    "SandhiFailure",      "ComponentCapExceeded",
};

bool derivational_side_compatible(CngCode gold, const CandidateSegment& node, const CngTable& table) {
  if (node.der_cng && *node.der_cng == gold) return true;
  return std::any_of(node.der_morph.begin(), node.der_morph.end(),
                     [&](const MorphTag& t) { return table.codes_of(t).contains(gold); });
}

bool inflectional_side_compatible(CngCode gold, const CandidateSegment& node, const CngTable& table) {
  return cng_compatible(gold, node.cng, node.morph, table);
}

std::set<NodeId> run_stage(MatchStage stage, const PhonemeString& gold_lemma, CngCode gold_cng, const SegGraph& graph,
                           const ModificationTables& tables, const CngTable& cng) {
  std::set<NodeId> out;
  std::optional<PhonemeString> pronoun;
  if (stage == MatchStage::PronounTable) {
    const auto it = tables.pronoun_map.find(gold_lemma);
    if (it == tables.pronoun_map.end()) return out;
    pronoun = strip_boundaries(it->second);
  }
  for (const auto& node : graph.nodes()) {
    bool hit = false;
    switch (stage) {
      case MatchStage::LemmaCng:
        hit = strip_boundaries(node.lemma) == gold_lemma && inflectional_side_compatible(gold_cng, node, cng);
        break;
      case MatchStage::DerivedStem:
        // The gold side carries either the derivational or the inflectional
        // code, never both, so either side may agree.
        hit = node.der_lemma && strip_boundaries(*node.der_lemma) == gold_lemma &&
              (derivational_side_compatible(gold_cng, node, cng) || inflectional_side_compatible(gold_cng, node, cng));
        break;
      case MatchStage::PronounTable:
        hit = strip_boundaries(node.lemma) == *pronoun && inflectional_side_compatible(gold_cng, node, cng);
        break;
      case MatchStage::IicSegment:
        hit = std::any_of(node.morph.begin(), node.morph.end(), [](const MorphTag& t) { return t.is_iic(); }) &&
              strip_boundaries(node.word) == gold_lemma && inflectional_side_compatible(gold_cng, node, cng);
        break;
      default:
        break;
    }
    if (hit) out.insert(node.id);
  }
  return out;
}

MatchStage stage_for_provenance(Provenance p) {
  switch (p) {
    case Provenance::causative: return MatchStage::CausativePair;
    case Provenance::preverb_join: return MatchStage::PreverbJoin;
    case Provenance::compound_merge: return MatchStage::CompoundMerge;
    case Provenance::none: break;
  }
  return MatchStage::LemmaCng;
}

std::string slot_label(const MatchSet& m) {
  return "lemma '" + render_iast(m.lemma) + "' (cng " + std::to_string(m.cng.value) + ")";
}

bool is_conj_or_prep(const MorphTag& t) { return t.str() == "conj." || t.str() == "prep."; }

void diagnose_slot(const MatchSet& m, const SegGraph& graph, const RuleSet& rules, std::vector<Diagnostic>& out) {
  auto emit = [&](DiagnosticCode code, std::string detail) { out.push_back({code, m.chunk, m.lemma_index, std::move(detail)}); };

  if (m.nodes.empty()) {
    emit(DiagnosticCode::UnanalyzedWord, "no candidate for " + slot_label(m));
    if (rules.tables.taddhita_suffixes.contains(m.lemma)) {
      emit(DiagnosticCode::SecondaryDerivative, "gold splits off secondary suffix '" + render_iast(m.lemma) + "'");
    }
    for (const auto& node : graph.nodes()) {
      const bool same_form = strip_boundaries(node.word) == m.lemma || strip_boundaries(node.lemma) == m.lemma;
      const bool pfp_iic = std::any_of(node.morph.begin(), node.morph.end(), [](const MorphTag& t) {
        return t.is_iic() && t.str() != "iic.";
      });
      if (same_form && pfp_iic) {
        emit(DiagnosticCode::IicPfpMismatch, "node " + std::to_string(node.id) + " tagged '" +
                                                 node.morph.begin()->str() + "' against gold iic");
        break;
      }
    }
    return;
  }

  std::vector<const CandidateSegment*> matched;
  for (NodeId id : m.nodes) matched.push_back(graph.find(id));

  if (m.cng == kIndeclinableCng) {
    for (const auto* node : matched) {
      const auto it = std::find_if(node->morph.begin(), node->morph.end(), is_conj_or_prep);
      if (it != node->morph.end()) {
        emit(DiagnosticCode::IndeclinableClass, "segmenter class '" + it->str() + "' unified with ind.");
        break;
      }
    }
  }

  if (matched.size() < 2) return;

  if (is_derivational(m.cng) && m.stage == MatchStage::DerivedStem) {
    std::set<CngCode> inflectional;
    for (const auto* node : matched) inflectional.insert(node->cng);
    if (inflectional.size() > 1) {
      std::string codes;
      for (auto c : inflectional) codes += (codes.empty() ? "" : ",") + std::to_string(c.value);
      emit(DiagnosticCode::DerivInflMismatch, "derivational gold code " + std::to_string(m.cng.value) +
                                                  " matches inflectional codes {" + codes + "}");
    }
  }

  const auto gold_tags = rules.cng.tags_of(m.cng);
  if (gold_tags.size() > 1) {
    std::set<std::set<MorphTag>> analyses;
    bool all_under_gold = true;
    for (const auto* node : matched) {
      analyses.insert(node->morph);
      all_under_gold = all_under_gold && std::any_of(node->morph.begin(), node->morph.end(),
                                                     [&](const MorphTag& t) { return gold_tags.contains(t); });
    }
    if (analyses.size() > 1 && all_under_gold) {
      std::string tags;
      for (const auto& a : analyses) {
        for (const auto& t : a) tags += (tags.empty() ? "" : ", ") + t.str();
      }
      emit(DiagnosticCode::CngManyToOne, "code " + std::to_string(m.cng.value) + " covers " + tags);
    }
  }
}

ModificationOutcome apply_modification(Modification m, const SegGraph& graph, const std::set<PhonemeString>& targets,
                                       const RuleSet& rules, const AlignOptions& options) {
  switch (m) {
    case Modification::causative: return modify_causative(graph, targets, rules.tables, options);
    case Modification::preverb_join: return modify_preverb_join(graph, rules.sandhi, options);
    case Modification::compound_merge: return modify_compound_merge(graph, targets, rules.sandhi, options);
  }
  return {graph, {}, {}};
}

}  // namespace

std::string_view to_string(MatchStage stage) { return kStageNames[static_cast<std::size_t>(stage)]; }

std::optional<MatchStage> match_stage_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kStageNames.size(); ++i) {
    if (kStageNames[i] == s) return static_cast<MatchStage>(i);
  }
  return std::nullopt;
}

std::string_view to_string(DiagnosticCode code) { return kDiagnosticNames[static_cast<std::size_t>(code)]; }

std::optional<DiagnosticCode> diagnostic_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kDiagnosticNames.size(); ++i) {
    if (kDiagnosticNames[i] == s) return static_cast<DiagnosticCode>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Modification m) {
  switch (m) {
    case Modification::causative: return "causative";
    case Modification::preverb_join: return "preverb";
    case Modification::compound_merge: return "compound";
  }
  return "?";
}

std::optional<Modification> modification_from_string(std::string_view s) {
  for (auto m : {Modification::causative, Modification::preverb_join, Modification::compound_merge}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

bool cng_compatible(CngCode gold, CngCode node_code, const std::set<MorphTag>& node_tags, const CngTable& table) {
  if (node_code == gold) return true;
  return std::any_of(node_tags.begin(), node_tags.end(),
                     [&](const MorphTag& t) { return table.codes_of(t).contains(gold); });
}

std::vector<MatchSet> match_lemma(const DcsSentence& sentence, const SegGraph& graph, const ModificationTables& tables,
                                  const CngTable& cng) {
  constexpr std::array<MatchStage, 4> kStages{MatchStage::LemmaCng, MatchStage::DerivedStem, MatchStage::PronounTable,
                                              MatchStage::IicSegment};
  std::vector<MatchSet> out;
  out.reserve(sentence.slot_count());
  for (std::size_t c = 0; c < sentence.lemmas.size(); ++c) {
    for (std::size_t j = 0; j < sentence.lemmas[c].size(); ++j) {
      MatchSet m;
      m.chunk = c;
      m.lemma_index = j;
      m.lemma = strip_boundaries(sentence.lemmas[c][j]);
      m.cng = sentence.cngs[c][j];
      for (MatchStage stage : kStages) {
        auto hits = run_stage(stage, m.lemma, m.cng, graph, tables, cng);
        if (!hits.empty()) {
          m.nodes = std::move(hits);
          m.stage = stage;
          break;
        }
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

Category categorize(std::span<const MatchSet> match_sets) {
  bool missing = false;
  bool multiple = false;
  for (const auto& m : match_sets) {
    missing = missing || m.nodes.empty();
    multiple = multiple || m.nodes.size() > 1;
  }
  if (missing) return multiple ? Category::missing_and_multiple : Category::some_missing;
  return multiple ? Category::some_multiple : Category::all_single;
}

std::set<PhonemeString> unmatched_lemmas(std::span<const MatchSet> match_sets) {
  std::set<PhonemeString> out;
  for (const auto& m : match_sets) {
    if (m.nodes.empty()) out.insert(m.lemma);
  }
  return out;
}

SentenceAlignment align_sentence(const DcsSentence& sentence, const SegGraph& graph, const RuleSet& rules,
                                 const AlignOptions& options) {
  SentenceAlignment out;
  out.graph = graph;
  auto& result = out.result;
  result.sent_id = sentence.sent_id;
  result.match_sets = match_lemma(sentence, graph, rules.tables, rules.cng);
  result.category_before = categorize(result.match_sets);
  result.category = result.category_before;

  if (result.category_before == Category::some_missing || result.category_before == Category::missing_and_multiple) {
    const auto targets = unmatched_lemmas(result.match_sets);
    for (Modification m : options.order) {
      auto step = apply_modification(m, out.graph, targets, rules, options);
      out.graph = std::move(step.graph);
      result.synthesized.insert(result.synthesized.end(), step.added.begin(), step.added.end());
      result.diagnostics.insert(result.diagnostics.end(), step.diagnostics.begin(), step.diagnostics.end());
    }
    if (!result.synthesized.empty()) {
      auto rematched = match_lemma(sentence, out.graph, rules.tables, rules.cng);
      for (std::size_t i = 0; i < rematched.size(); ++i) {
        auto& slot = result.match_sets[i];
        if (!slot.nodes.empty()) continue;
        slot = std::move(rematched[i]);
        if (slot.nodes.empty()) continue;
        // Report the modification that produced the match, in the order the
        // modifications ran.
        for (Modification m : options.order) {
          const auto wanted = m == Modification::causative      ? Provenance::causative
                              : m == Modification::preverb_join ? Provenance::preverb_join
                                                                : Provenance::compound_merge;
          const bool produced = std::any_of(slot.nodes.begin(), slot.nodes.end(), [&](NodeId id) {
            const auto* node = out.graph.find(id);
            return node != nullptr && node->synthetic == wanted;
          });
          if (produced) {
            slot.stage = stage_for_provenance(wanted);
            break;
          }
        }
      }
      result.category = categorize(result.match_sets);
    }
  }

  for (const auto& m : result.match_sets) diagnose_slot(m, out.graph, rules, result.diagnostics);
  return out;
}

}  // namespace sandhi
