// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>

#include "sandhi/aligner.hpp"
#include "sandhi/errors.hpp"
#include "text_util.hpp"

namespace sandhi {

namespace {

namespace fs = std::filesystem;

PhonemeString parse_entry(std::string_view text, const std::string& source, std::size_t line) {
  const auto trimmed = detail::trim(text);
  if (trimmed.empty()) throw RuleFileError(source, line, "empty entry");
  try {
    return parse_iast(trimmed);
  } catch (const UnknownSymbol& e) {
    throw RuleFileError(source, line, e.what());
  }
}

std::ifstream open_required(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rule file: " + path.string());
  return in;
}

}  // namespace

std::map<PhonemeString, PhonemeString> ModificationTables::load_pairs(std::istream& in, const std::string& source) {
  std::map<PhonemeString, PhonemeString> forward;
  std::set<PhonemeString> targets;
  for (const auto& line : detail::read_data_lines(in)) {
    const auto fields = detail::split(line.content, '\t');
    if (fields.size() != 2) throw RuleFileError(source, line.line_no, "expected two tab-separated columns");
    auto key = parse_entry(fields[0], source, line.line_no);
    auto value = parse_entry(fields[1], source, line.line_no);
    if (forward.contains(key)) throw RuleFileError(source, line.line_no, "duplicate key '" + fields[0] + "'");
    if (!targets.insert(value).second) {
      throw RuleFileError(source, line.line_no, "value '" + fields[1] + "' mapped twice");
    }
    forward.emplace(std::move(key), std::move(value));
  }
  return forward;
}

std::set<PhonemeString> ModificationTables::load_suffixes(std::istream& in, const std::string& source) {
  std::set<PhonemeString> out;
  for (const auto& line : detail::read_data_lines(in)) out.insert(parse_entry(line.content, source, line.line_no));
  return out;
}

RuleSet RuleSet::load_directory(const std::string& dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw ConfigError("rule directory does not exist: " + dir);

  RuleSet rules;
  rules.sandhi = SandhiRuleTable::load_files((root / "sandhi_rules.txt").string(), (root / "preverbs.txt").string());
  rules.cng = CngTable::load_file((root / "cng_table.tsv").string());
  {
    const auto path = root / "causative_pairs.tsv";
    auto in = open_required(path);
    rules.tables.causative_pairs = ModificationTables::load_pairs(in, path.string());
  }
  {
    const auto path = root / "pronoun_map.tsv";
    auto in = open_required(path);
    rules.tables.pronoun_map = ModificationTables::load_pairs(in, path.string());
  }
  if (const auto path = root / "gemination.txt"; fs::exists(path)) {
    rules.gemination = GeminationRules::load_file(path.string());
  }
  if (const auto path = root / "taddhita_suffixes.txt"; fs::exists(path)) {
    auto in = open_required(path);
    rules.tables.taddhita_suffixes = ModificationTables::load_suffixes(in, path.string());
  }
  return rules;
}

}  // namespace sandhi
