// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "sandhi/errors.hpp"

namespace sandhi {

namespace {

using json = nlohmann::ordered_json;

json optional_phonemes(const std::optional<PhonemeString>& ps) {
  return ps ? json(render_iast(*ps)) : json(nullptr);
}

json tag_list(const std::set<MorphTag>& tags) {
  json out = json::array();
  for (const auto& t : tags) out.push_back(t.str());
  return out;
}

template <typename T>
std::optional<T> optional_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

Category category_from_int(int value, SentenceId id) {
  if (value < 1 || value > 4) throw MalformedRecord("category out of range: " + std::to_string(value), id);
  return static_cast<Category>(value);
}

}  // namespace

std::uint64_t percent_tenths(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return 0;
  // round(1000 * num / den) with halves going up
  return (2000 * num + den) / (2 * den);
}

Report summarize(std::span<const AlignmentResult> results) {
  Report r;
  for (const auto& result : results) {
    ++r.total;
    ++r.category[static_cast<std::size_t>(to_int(result.category) - 1)];
    for (const auto& d : result.diagnostics) ++r.diagnostics[static_cast<std::size_t>(d.code)];

    const bool was_unmatched = result.category_before == Category::some_missing ||
                               result.category_before == Category::missing_and_multiple;
    if (!was_unmatched) continue;
    ++r.sent_for_modification;
    const bool modified = !result.synthesized.empty();
    if (modified) ++r.modified_count;
    const bool still_unmatched =
        result.category == Category::some_missing || result.category == Category::missing_and_multiple;
    if (still_unmatched) ++(modified ? r.modified_unmatched : r.unmodified_unmatched);
  }
  r.fully_matched = r.category[0] + r.category[1];
  r.matched_pct_tenths = percent_tenths(r.fully_matched, r.total);
  r.single_pct_tenths = percent_tenths(r.category[0], r.fully_matched);
  return r;
}

std::string report_to_json(const Report& r) {
  json categories = json::object();
  for (std::size_t i = 0; i < r.category.size(); ++i) categories[std::to_string(i + 1)] = r.category[i];
  json diagnostics = json::object();
  for (std::size_t i = 0; i < kDiagnosticCodeCount; ++i) {
    diagnostics[std::string(to_string(static_cast<DiagnosticCode>(i)))] = r.diagnostics[i];
  }
  json out;
  out["total"] = r.total;
  out["categories"] = std::move(categories);
  out["fully_matched"] = r.fully_matched;
  out["sent_for_modification"] = r.sent_for_modification;
  out["modified_count"] = r.modified_count;
  out["unmodified_unmatched"] = r.unmodified_unmatched;
  out["modified_unmatched"] = r.modified_unmatched;
  out["diagnostics"] = std::move(diagnostics);
  out["matched_pct"] = r.matched_pct();
  out["single_pct"] = r.single_pct();
  return out.dump(2) + "\n";
}

std::string alignment_to_json(const AlignmentResult& result) {
  json match_sets = json::array();
  for (const auto& m : result.match_sets) {
    json slot;
    slot["chunk"] = m.chunk;
    slot["lemma_index"] = m.lemma_index;
    slot["lemma"] = render_iast(m.lemma);
    slot["cng"] = m.cng.value;
    slot["stage"] = m.stage ? json(std::string(to_string(*m.stage))) : json(nullptr);
    slot["nodes"] = m.nodes;
    match_sets.push_back(std::move(slot));
  }
  json diagnostics = json::array();
  for (const auto& d : result.diagnostics) {
    json entry;
    entry["code"] = std::string(to_string(d.code));
    entry["chunk"] = d.chunk ? json(*d.chunk) : json(nullptr);
    entry["lemma_index"] = d.lemma_index ? json(*d.lemma_index) : json(nullptr);
    entry["detail"] = d.detail;
    diagnostics.push_back(std::move(entry));
  }
  json out;
  out["sent_id"] = result.sent_id;
  out["category_before"] = to_int(result.category_before);
  out["category"] = to_int(result.category);
  out["match_sets"] = std::move(match_sets);
  out["synthesized"] = result.synthesized;
  out["diagnostics"] = std::move(diagnostics);
  return out.dump();
}

AlignmentResult parse_alignment_line(std::string_view line) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw MalformedRecord(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedRecord("alignment record is not an object");

  AlignmentResult r;
  try {
    r.sent_id = doc.at("sent_id").get<SentenceId>();
    r.category_before = category_from_int(doc.at("category_before").get<int>(), r.sent_id);
    r.category = category_from_int(doc.at("category").get<int>(), r.sent_id);
    for (const auto& slot : doc.at("match_sets")) {
      MatchSet m;
      m.chunk = slot.at("chunk").get<std::size_t>();
      m.lemma_index = slot.at("lemma_index").get<std::size_t>();
      m.lemma = parse_iast(slot.at("lemma").get<std::string>());
      m.cng = CngCode{slot.at("cng").get<int>()};
      if (const auto stage = optional_field<std::string>(slot, "stage")) {
        m.stage = match_stage_from_string(*stage);
        if (!m.stage) throw MalformedRecord("unknown stage '" + *stage + "'", r.sent_id);
      }
      m.nodes = slot.at("nodes").get<std::set<NodeId>>();
      r.match_sets.push_back(std::move(m));
    }
    r.synthesized = doc.at("synthesized").get<std::vector<NodeId>>();
    for (const auto& entry : doc.at("diagnostics")) {
      Diagnostic d;
      const auto code = entry.at("code").get<std::string>();
      const auto parsed = diagnostic_from_string(code);
      if (!parsed) throw MalformedRecord("unknown diagnostic '" + code + "'", r.sent_id);
      d.code = *parsed;
      d.chunk = optional_field<std::size_t>(entry, "chunk");
      d.lemma_index = optional_field<std::size_t>(entry, "lemma_index");
      d.detail = entry.at("detail").get<std::string>();
      r.diagnostics.push_back(std::move(d));
    }
  } catch (const json::exception& e) {
    throw MalformedRecord(std::string("bad alignment record: ") + e.what(), r.sent_id);
  } catch (const UnknownSymbol& e) {
    throw MalformedRecord(e.what(), r.sent_id);
  }
  return r;
}

std::string gold_to_json(const AlignmentResult& result, const DcsSentence& sentence, const SegGraph& graph) {
  if (result.category != Category::all_single) {
    throw std::invalid_argument("gold output needs a category 1 sentence, got " +
                                std::to_string(to_int(result.category)));
  }
  std::vector<std::pair<const MatchSet*, const CandidateSegment*>> entries;
  for (const auto& m : result.match_sets) {
    const auto* node = graph.find(*m.nodes.begin());
    if (node == nullptr) throw std::invalid_argument("matched node missing from graph");
    entries.emplace_back(&m, node);
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second->char_pos, x.first->chunk, x.first->lemma_index) <
           std::tie(y.second->char_pos, y.first->chunk, y.first->lemma_index);
  });

  json segments = json::array();
  for (const auto& [m, node] : entries) {
    json s;
    s["word"] = render_iast(node->word);
    s["lemma"] = render_iast(node->lemma);
    s["sense"] = node->sense;
    s["morph"] = tag_list(node->morph);
    s["cng"] = node->cng.value;
    s["pre_verb"] = optional_phonemes(node->pre_verb);
    s["der_pre_verb"] = optional_phonemes(node->der_pre_verb);
    s["der_lemma"] = optional_phonemes(node->der_lemma);
    s["der_sense"] = node->der_sense;
    s["der_morph"] = tag_list(node->der_morph);
    s["der_cng"] = node->der_cng ? json(node->der_cng->value) : json(nullptr);
    s["char_pos"] = {node->char_pos.start, node->char_pos.end};
    s["node"] = node->id;
    s["dcs_chunk"] = m->chunk;
    s["dcs_lemma"] = render_iast(m->lemma);
    s["dcs_cng"] = m->cng.value;
    s["stage"] = std::string(to_string(*m->stage));
    segments.push_back(std::move(s));
  }
  json out;
  out["sent_id"] = sentence.sent_id;
  out["text"] = render_iast(sentence.text);
  out["segments"] = std::move(segments);
  return out.dump();
}

}  // namespace sandhi
