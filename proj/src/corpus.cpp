// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>

#include <json.hpp>

#include "sandhi/errors.hpp"

namespace sandhi {

namespace {

using nlohmann::json;

int parse_cng_value(const json& value, std::optional<SentenceId> id) {
  if (value.is_number_integer()) return value.get<int>();
  // Table-1 style dumps quote the codes.
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    int out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc{} && ptr == s.data() + s.size() && !s.empty()) return out;
  }
  throw MalformedRecord("cng entries must be integers", id);
}

const json& require(const json& obj, const char* key, std::optional<SentenceId> id) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw MalformedRecord(std::string("missing field '") + key + "'", id);
  return *it;
}

std::vector<std::string> string_list(const json& value, const char* what, std::optional<SentenceId> id) {
  if (!value.is_array()) throw MalformedRecord(std::string(what) + " must be a list", id);
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw MalformedRecord(std::string(what) + " entries must be strings", id);
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Sense indices never appear on the gold side; "siddha_1" or "hita2" is an
// input error, not a lemma.
bool has_homonymy_index(std::string_view lemma) {
  if (lemma.find('_') != std::string_view::npos) return true;
  return !lemma.empty() && std::isdigit(static_cast<unsigned char>(lemma.back()));
}

PhonemeString parse_in_context(const std::string& text, SentenceId id, const std::string& field) {
  try {
    return parse_iast(text);
  } catch (const UnknownSymbol& e) {
    throw UnknownSymbol(e.position(), e.code_point(), "sent_id " + std::to_string(id) + ", " + field);
  }
}

// Structural checks shared by to_sentence and validate_corpus. Returns the
// first problem, if any.
std::optional<std::pair<CorpusIssueKind, std::string>> structural_problem(const RawDcsRecord& raw) {
  if (raw.chunks.size() != raw.lemmas.size() || raw.chunks.size() != raw.cngs.size()) {
    return std::make_pair(CorpusIssueKind::LengthMismatch, std::string("length mismatch"));
  }
  for (std::size_t i = 0; i < raw.chunks.size(); ++i) {
    if (raw.lemmas[i].empty() || raw.cngs[i].empty()) {
      return std::make_pair(CorpusIssueKind::EmptyChunk, std::string("empty chunk analysis"));
    }
    if (raw.lemmas[i].size() != raw.cngs[i].size()) {
      return std::make_pair(CorpusIssueKind::LengthMismatch, std::string("length mismatch"));
    }
  }
  if (raw.chunks.empty()) return std::make_pair(CorpusIssueKind::EmptyChunk, std::string("no chunks"));
  return std::nullopt;
}

}  // namespace

std::string_view to_string(CorpusIssueKind kind) {
  switch (kind) {
    case CorpusIssueKind::LengthMismatch: return "LengthMismatch";
    case CorpusIssueKind::EmptyChunk: return "EmptyChunk";
    case CorpusIssueKind::BadPhoneme: return "BadPhoneme";
    case CorpusIssueKind::DuplicateId: return "DuplicateId";
  }
  return "?";
}

std::size_t DcsSentence::slot_count() const {
  std::size_t n = 0;
  for (const auto& chunk : lemmas) n += chunk.size();
  return n;
}

RawDcsRecord parse_raw_record(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw MalformedRecord(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw MalformedRecord("record is not a JSON object");

  RawDcsRecord raw;
  const auto& id_field = require(obj, "sent_id", std::nullopt);
  if (!id_field.is_number_integer()) throw MalformedRecord("sent_id must be an integer");
  raw.sent_id = id_field.get<SentenceId>();
  const auto id = raw.sent_id;

  const auto& text = require(obj, "text", id);
  if (!text.is_string()) throw MalformedRecord("text must be a string", id);
  raw.text = text.get<std::string>();
  raw.chunks = string_list(require(obj, "chunks", id), "chunks", id);

  const auto& lemmas = require(obj, "lemmas", id);
  if (!lemmas.is_array()) throw MalformedRecord("lemmas must be a list of lists", id);
  for (const auto& inner : lemmas) raw.lemmas.push_back(string_list(inner, "lemmas", id));

  const auto& cng = require(obj, "cng", id);
  if (!cng.is_array()) throw MalformedRecord("cng must be a list of lists", id);
  for (const auto& inner : cng) {
    if (!inner.is_array()) throw MalformedRecord("cng must be a list of lists", id);
    std::vector<int> codes;
    for (const auto& v : inner) codes.push_back(parse_cng_value(v, id));
    raw.cngs.push_back(std::move(codes));
  }
  return raw;
}

DcsSentence to_sentence(const RawDcsRecord& raw) {
  const SentenceId id = raw.sent_id.value_or(0);
  if (const auto problem = structural_problem(raw)) throw MalformedRecord(problem->second, id);

  DcsSentence s;
  s.sent_id = id;
  s.text = parse_in_context(raw.text, id, "text");
  for (std::size_t i = 0; i < raw.chunks.size(); ++i) {
    s.chunks.push_back(parse_in_context(raw.chunks[i], id, "chunks[" + std::to_string(i) + "]"));
    std::vector<PhonemeString> chunk_lemmas;
    std::vector<CngCode> chunk_cngs;
    for (std::size_t j = 0; j < raw.lemmas[i].size(); ++j) {
      const auto& lemma = raw.lemmas[i][j];
      if (has_homonymy_index(lemma)) throw MalformedRecord("homonymy index in lemma '" + lemma + "'", id);
      chunk_lemmas.push_back(
          parse_in_context(lemma, id, "lemmas[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
      chunk_cngs.push_back(CngCode{raw.cngs[i][j]});
    }
    s.lemmas.push_back(std::move(chunk_lemmas));
    s.cngs.push_back(std::move(chunk_cngs));
  }
  return s;
}

DcsSentence parse_dcs_record(std::string_view line) { return to_sentence(parse_raw_record(line)); }

std::vector<CorpusIssue> validate_corpus(std::span<const RawDcsRecord> records) {
  std::vector<CorpusIssue> issues;
  std::map<SentenceId, std::size_t> seen;
  for (const auto& raw : records) {
    const SentenceId id = raw.sent_id.value_or(0);
    if (++seen[id] == 2) issues.push_back({id, CorpusIssueKind::DuplicateId, "sent_id " + std::to_string(id)});
    if (const auto problem = structural_problem(raw)) issues.push_back({id, problem->first, problem->second});

    auto check_text = [&](const std::string& text, const std::string& field) {
      try {
        parse_iast(text);
      } catch (const UnknownSymbol& e) {
        issues.push_back({id, CorpusIssueKind::BadPhoneme, field + ": " + e.what()});
      }
    };
    check_text(raw.text, "text");
    for (std::size_t i = 0; i < raw.chunks.size(); ++i) check_text(raw.chunks[i], "chunks[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < raw.lemmas.size(); ++i) {
      for (std::size_t j = 0; j < raw.lemmas[i].size(); ++j) {
        const auto field = "lemmas[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        if (has_homonymy_index(raw.lemmas[i][j])) {
          issues.push_back({id, CorpusIssueKind::BadPhoneme, field + ": homonymy index in '" + raw.lemmas[i][j] + "'"});
        } else {
          check_text(raw.lemmas[i][j], field);
        }
      }
    }
  }
  return issues;
}

std::vector<DcsSentence> read_corpus(std::istream& in, const std::string& source) {
  std::vector<DcsSentence> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_dcs_record(line));
    } catch (const MalformedRecord& e) {
      throw MalformedRecord(source + ":" + std::to_string(line_no) + ": " + e.reason(), e.sent_id());
    } catch (const UnknownSymbol& e) {
      throw UnknownSymbol(e.position(), e.code_point(), source + ":" + std::to_string(line_no) + ", " + e.context());
    }
  }
  return out;
}

DcsSentence normalize_sentence(const DcsSentence& sentence, const GeminationRules& rules) {
  DcsSentence out = sentence;
  out.text = normalize(sentence.text, rules);
  for (auto& chunk : out.chunks) chunk = normalize(chunk, rules);
  for (auto& chunk : out.lemmas) {
    for (auto& lemma : chunk) lemma = normalize(lemma, rules);
  }
  return out;
}

PhonemeString reassemble_chunks(const DcsSentence& sentence) {
  PhonemeString out;
  for (std::size_t i = 0; i < sentence.chunks.size(); ++i) {
    if (i > 0) out.push_back(Phoneme::space);
    out.append(sentence.chunks[i]);
  }
  return out;
}

}  // namespace sandhi
