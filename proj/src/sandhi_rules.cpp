// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/sandhi_rules.hpp"

#include <fstream>
#include <istream>
#include <vector>

#include "sandhi/errors.hpp"
#include "text_util.hpp"

namespace sandhi {

namespace {

PhonemeString parse_field(std::string_view field, const std::string& source, std::size_t line) {
  try {
    return parse_iast(detail::trim(field));
  } catch (const UnknownSymbol& e) {
    throw RuleFileError(source, line, e.what());
  }
}

PhonemeString trim_boundaries(const PhonemeString& ps) {
  std::size_t first = 0;
  std::size_t last = ps.size();
  while (first < last && is_boundary(ps[first])) ++first;
  while (last > first && is_boundary(ps[last - 1])) --last;
  return ps.substr(first, last - first);
}

std::vector<PhonemeString> split_on_hyphen(const PhonemeString& ps) {
  std::vector<PhonemeString> parts(1);
  for (Phoneme p : ps) {
    if (p == Phoneme::hyphen) {
      parts.emplace_back();
    } else if (p != Phoneme::space) {
      parts.back().push_back(p);
    }
  }
  std::erase_if(parts, [](const PhonemeString& s) { return s.empty(); });
  return parts;
}

bool contains_r_sound(const PhonemeString& ps) {
  for (Phoneme p : ps) {
    if (p == Phoneme::r || p == Phoneme::r_vocalic || p == Phoneme::rr_vocalic || p == Phoneme::ssa) return true;
  }
  return false;
}

// End (exclusive) of the first syllable: onset, nucleus, and any coda
// consonants that do not begin the next syllable.
std::size_t first_syllable_end(const PhonemeString& stem) {
  std::size_t i = 0;
  while (i < stem.size() && !is_vowel(stem[i])) ++i;
  if (i == stem.size()) return i;
  ++i;
  std::size_t j = i;
  while (j < stem.size() && !is_vowel(stem[j])) ++j;
  if (j == stem.size()) return j;
  return j > i ? j - 1 : i;
}

void retroflex_n(PhonemeString& stem) {
  auto& v = stem.mutable_phonemes();
  const auto end = first_syllable_end(stem);
  for (std::size_t i = 0; i < end; ++i) {
    if (v[i] == Phoneme::n) {
      v[i] = Phoneme::nna;
      return;
    }
  }
}

void retroflex_s(PhonemeString& stem) {
  auto& v = stem.mutable_phonemes();
  if (v.size() < 2 || v[0] != Phoneme::s) return;
  const Phoneme next = v[1];
  const bool conditioning = is_vowel(next) || next == Phoneme::t || next == Phoneme::th || next == Phoneme::m ||
                            next == Phoneme::y || next == Phoneme::v;
  if (!conditioning) return;
  v[0] = Phoneme::ssa;
  // ṣ cannot precede a dental stop.
  if (next == Phoneme::t) v[1] = Phoneme::tt;
  if (next == Phoneme::th) v[1] = Phoneme::tth;
}

PhonemeString attach_one(const PhonemeString& preverb, PhonemeString stem, const SandhiRuleTable& rules) {
  const auto flags = rules.preverb_flags(preverb);
  if (flags.natva) retroflex_n(stem);
  if (flags.satva) retroflex_s(stem);
  return vowel_sandhi_join(preverb, stem, rules);
}

}  // namespace

void SandhiRuleTable::load_vowel_rules(std::istream& in, const std::string& source) {
  for (const auto& line : detail::read_data_lines(in)) {
    const auto plus = line.content.find('+');
    const auto eq = line.content.find('=');
    if (plus == std::string::npos || eq == std::string::npos || eq < plus) {
      throw RuleFileError(source, line.line_no, "expected <final>+<initial>=<replacement>");
    }
    const auto final_ps = parse_field(std::string_view(line.content).substr(0, plus), source, line.line_no);
    const auto initial_ps =
        parse_field(std::string_view(line.content).substr(plus + 1, eq - plus - 1), source, line.line_no);
    auto replacement = parse_field(std::string_view(line.content).substr(eq + 1), source, line.line_no);
    if (final_ps.size() != 1 || initial_ps.size() != 1 || !is_vowel(final_ps.front()) ||
        !is_vowel(initial_ps.front())) {
      throw RuleFileError(source, line.line_no, "rule sides must be single vowels");
    }
    if (replacement.empty()) throw RuleFileError(source, line.line_no, "empty replacement");
    const auto key = std::make_pair(final_ps.front(), initial_ps.front());
    if (!vowel_rules_.emplace(key, std::move(replacement)).second) {
      throw RuleFileError(source, line.line_no, "duplicate rule for " + line.content.substr(0, eq));
    }
  }
}

void SandhiRuleTable::load_preverbs(std::istream& in, const std::string& source) {
  for (const auto& line : detail::read_data_lines(in)) {
    const auto fields = detail::split(line.content, '\t');
    auto preverb = parse_field(fields[0], source, line.line_no);
    if (preverb.empty()) throw RuleFileError(source, line.line_no, "empty preverb");
    PreverbFlags flags;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      for (const auto& word : detail::split(fields[i], ' ')) {
        const auto flag = detail::trim(word);
        if (flag.empty()) continue;
        if (flag == "natva") {
          flags.natva = true;
        } else if (flag == "satva") {
          flags.satva = true;
        } else {
          throw RuleFileError(source, line.line_no, "unknown flag '" + std::string(flag) + "'");
        }
      }
    }
    if (flags.natva && !contains_r_sound(preverb)) {
      throw RuleFileError(source, line.line_no, "natva requires r, ṛ or ṣ in the preverb");
    }
    if (flags.satva && !is_iu_vowel(preverb.back())) {
      throw RuleFileError(source, line.line_no, "satva requires a final i/u vowel");
    }
    if (!preverbs_.emplace(std::move(preverb), flags).second) {
      throw RuleFileError(source, line.line_no, "duplicate preverb");
    }
  }
}

SandhiRuleTable SandhiRuleTable::load_files(const std::string& vowel_rules_path, const std::string& preverbs_path) {
  SandhiRuleTable table;
  std::ifstream rules(vowel_rules_path);
  if (!rules) throw ConfigError("cannot open sandhi rules: " + vowel_rules_path);
  table.load_vowel_rules(rules, vowel_rules_path);
  std::ifstream preverbs(preverbs_path);
  if (!preverbs) throw ConfigError("cannot open preverb list: " + preverbs_path);
  table.load_preverbs(preverbs, preverbs_path);
  return table;
}

const PhonemeString& SandhiRuleTable::vowel_rule(Phoneme final_vowel, Phoneme initial_vowel) const {
  const auto it = vowel_rules_.find({final_vowel, initial_vowel});
  if (it == vowel_rules_.end()) {
    throw MissingRule(std::string(iast_of(final_vowel)), std::string(iast_of(initial_vowel)));
  }
  return it->second;
}

bool SandhiRuleTable::has_vowel_rule(Phoneme final_vowel, Phoneme initial_vowel) const {
  return vowel_rules_.contains({final_vowel, initial_vowel});
}

PreverbFlags SandhiRuleTable::preverb_flags(const PhonemeString& preverb) const {
  const auto it = preverbs_.find(strip_boundaries(preverb));
  if (it == preverbs_.end()) throw UnknownPreverb(render_iast(preverb));
  return it->second;
}

bool SandhiRuleTable::is_preverb(const PhonemeString& preverb) const {
  return preverbs_.contains(strip_boundaries(preverb));
}

PhonemeString vowel_sandhi_join(const PhonemeString& left, const PhonemeString& right, const SandhiRuleTable& rules) {
  auto lhs = trim_boundaries(left);
  const auto rhs = trim_boundaries(right);
  if (lhs.empty()) return rhs;
  if (rhs.empty()) return lhs;
  if (!is_vowel(lhs.back()) || !is_vowel(rhs.front())) return lhs + rhs;

  const auto& replacement = rules.vowel_rule(lhs.back(), rhs.front());
  lhs.pop_back();
  lhs.append(replacement);
  lhs.append(rhs.substr(1));
  return lhs;
}

PhonemeString apply_preverb(const PhonemeString& preverb, const PhonemeString& stem, const SandhiRuleTable& rules) {
  const auto chain = split_on_hyphen(preverb);
  if (chain.empty()) throw UnknownPreverb(render_iast(preverb));
  auto result = strip_boundaries(stem);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) result = attach_one(*it, std::move(result), rules);
  return result;
}

}  // namespace sandhi
