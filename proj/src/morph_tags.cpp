// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/morph_tags.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "sandhi/errors.hpp"
#include "text_util.hpp"

namespace sandhi {

namespace {

// Insert a space after every '.' or ']' that runs into the next token, then
// collapse whitespace.
std::string canonical_tag(std::string_view text) {
  std::string spaced;
  for (std::size_t i = 0; i < text.size(); ++i) {
    spaced.push_back(text[i]);
    if ((text[i] == '.' || text[i] == ']') && i + 1 < text.size() && text[i + 1] != ' ') spaced.push_back(' ');
  }
  std::string out;
  bool pending_space = false;
  for (char ch : detail::trim(spaced)) {
    if (ch == ' ' || ch == '\t') {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ch);
  }
  return out;
}

}  // namespace

MorphTag::MorphTag(std::string_view text) : text_(canonical_tag(text)) {
  if (text_.empty()) throw std::invalid_argument("empty morphological tag");
}

std::string_view MorphTag::last_token() const noexcept {
  const std::string_view view = text_;
  const auto space = view.rfind(' ');
  return space == std::string_view::npos ? view : view.substr(space + 1);
}

CngTable CngTable::load(std::istream& in, const std::string& source) {
  CngTable table;
  for (const auto& line : detail::read_data_lines(in)) {
    const auto fields = detail::split(line.content, '\t');
    if (fields.size() != 2) throw RuleFileError(source, line.line_no, "expected tag<TAB>code");
    const auto code_text = detail::trim(fields[1]);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(code_text.data(), code_text.data() + code_text.size(), value);
    if (ec != std::errc{} || ptr != code_text.data() + code_text.size()) {
      throw RuleFileError(source, line.line_no, "bad CNG code '" + std::string(code_text) + "'");
    }
    if (detail::trim(fields[0]).empty()) throw RuleFileError(source, line.line_no, "empty tag");
    table.add(MorphTag(fields[0]), CngCode{value}, line.extended);
  }
  return table;
}

CngTable CngTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open CNG table: " + path);
  return load(in, path);
}

void CngTable::add(const MorphTag& tag, CngCode code, bool extended) {
  const auto range = by_tag_.equal_range(tag);
  for (auto it = range.first; it != range.second; ++it) {
    if (it->second == code) return;
  }
  by_tag_.emplace(tag, code);
  by_code_.emplace(code, tag);
  if (extended) extended_.emplace(tag, code);
}

std::set<CngCode> CngTable::codes_of(const MorphTag& tag) const {
  std::set<CngCode> out;
  const auto range = by_tag_.equal_range(tag);
  for (auto it = range.first; it != range.second; ++it) out.insert(it->second);
  return out;
}

std::set<MorphTag> CngTable::tags_of(CngCode code) const {
  std::set<MorphTag> out;
  const auto range = by_code_.equal_range(code);
  for (auto it = range.first; it != range.second; ++it) out.insert(it->second);
  return out;
}

bool CngTable::is_extended(const MorphTag& tag, CngCode code) const { return extended_.contains({tag, code}); }

std::set<CngCode> codes_of(const MorphTag& tag, const CngTable& table) { return table.codes_of(tag); }

std::set<MorphTag> tags_of(CngCode code, const CngTable& table) { return table.tags_of(code); }

}  // namespace sandhi
