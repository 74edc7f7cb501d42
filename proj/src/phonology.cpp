// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/phonology.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <ostream>

#include "sandhi/errors.hpp"
#include "text_util.hpp"

namespace sandhi {

namespace {

struct Spelling {
  Phoneme phoneme;
  std::u32string_view iast;
};

// Canonical spellings. Order matches the enum.
constexpr std::array<Spelling, kPhonemeCount> kSpellings{{
    {Phoneme::a, U"a"},          {Phoneme::aa, U"ā"},         {Phoneme::i, U"i"},
    {Phoneme::ii, U"ī"},         {Phoneme::u, U"u"},          {Phoneme::uu, U"ū"},
    {Phoneme::r_vocalic, U"ṛ"},  {Phoneme::rr_vocalic, U"ṝ"}, {Phoneme::l_vocalic, U"ḷ"},
    {Phoneme::ll_vocalic, U"ḹ"}, {Phoneme::e, U"e"},          {Phoneme::ai, U"ai"},
    {Phoneme::o, U"o"},          {Phoneme::au, U"au"},        {Phoneme::k, U"k"},
    {Phoneme::kh, U"kh"},        {Phoneme::g, U"g"},          {Phoneme::gh, U"gh"},
    {Phoneme::nga, U"ṅ"},        {Phoneme::c, U"c"},          {Phoneme::ch, U"ch"},
    {Phoneme::j, U"j"},          {Phoneme::jh, U"jh"},        {Phoneme::nya, U"ñ"},
    {Phoneme::tt, U"ṭ"},         {Phoneme::tth, U"ṭh"},       {Phoneme::dd, U"ḍ"},
    {Phoneme::ddh, U"ḍh"},       {Phoneme::nna, U"ṇ"},        {Phoneme::t, U"t"},
    {Phoneme::th, U"th"},        {Phoneme::d, U"d"},          {Phoneme::dh, U"dh"},
    {Phoneme::n, U"n"},          {Phoneme::p, U"p"},          {Phoneme::ph, U"ph"},
    {Phoneme::b, U"b"},          {Phoneme::bh, U"bh"},        {Phoneme::m, U"m"},
    {Phoneme::y, U"y"},          {Phoneme::r, U"r"},          {Phoneme::l, U"l"},
    {Phoneme::v, U"v"},          {Phoneme::sha, U"ś"},        {Phoneme::ssa, U"ṣ"},
    {Phoneme::s, U"s"},          {Phoneme::h, U"h"},          {Phoneme::anusvara, U"ṃ"},
    {Phoneme::visarga, U"ḥ"},    {Phoneme::avagraha, U"'"},   {Phoneme::hyphen, U"-"},
    {Phoneme::space, U" "},
}};

constexpr std::size_t index_of(Phoneme p) { return static_cast<std::size_t>(p); }

// (base, combining mark) -> precomposed. Applied repeatedly, so ṝ can be
// built as r + U+0323 + U+0304.
struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

constexpr std::array<Composition, 19> kCompositions{{
    {U'a', U'̄', U'ā'}, {U'i', U'̄', U'ī'}, {U'u', U'̄', U'ū'},
    {U'r', U'̣', U'ṛ'}, {U'ṛ', U'̄', U'ṝ'}, {U'l', U'̣', U'ḷ'},
    {U'ḷ', U'̄', U'ḹ'}, {U'n', U'̇', U'ṅ'}, {U'n', U'̃', U'ñ'},
    {U't', U'̣', U'ṭ'}, {U'd', U'̣', U'ḍ'}, {U'n', U'̣', U'ṇ'},
    {U's', U'́', U'ś'}, {U's', U'̣', U'ṣ'}, {U'm', U'̣', U'ṃ'},
    {U'm', U'̇', U'ṁ'}, {U'h', U'̣', U'ḥ'}, {U'i', U'̈', U'ï'},
    {U'u', U'̈', U'ü'},
}};

bool is_combining(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

struct ComposedChar {
  char32_t cp;
  std::size_t source_index;
};

std::vector<ComposedChar> compose(const std::u32string& cps) {
  std::vector<ComposedChar> out;
  out.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_combining(cp) && !out.empty()) {
      const auto it = std::find_if(kCompositions.begin(), kCompositions.end(), [&](const Composition& c) {
        return c.base == out.back().cp && c.mark == cp;
      });
      if (it != kCompositions.end()) {
        out.back().cp = it->composed;
        continue;
      }
    }
    out.push_back({cp, i});
  }
  return out;
}

const std::map<std::u32string, Phoneme>& spelling_index() {
  static const std::map<std::u32string, Phoneme> index = [] {
    std::map<std::u32string, Phoneme> m;
    for (const auto& s : kSpellings) {
      if (s.phoneme == Phoneme::space) continue;
      m.emplace(std::u32string(s.iast), s.phoneme);
    }
    m.emplace(U"ṁ", Phoneme::anusvara);
    m.emplace(U"’", Phoneme::avagraha);
    // Diaeresis marks hiatus: aï is a + i, not ai.
    m.emplace(U"ï", Phoneme::i);
    m.emplace(U"ü", Phoneme::u);
    return m;
  }();
  return index;
}

bool is_space_cp(char32_t cp) { return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r'; }

}  // namespace

bool is_vowel(Phoneme p) noexcept { return p <= Phoneme::au; }

bool is_consonant(Phoneme p) noexcept { return p >= Phoneme::k && p <= Phoneme::h; }

bool is_boundary(Phoneme p) noexcept { return p == Phoneme::hyphen || p == Phoneme::space; }

bool is_stop(Phoneme p) noexcept { return p >= Phoneme::k && p <= Phoneme::m; }

std::optional<Varga> varga_of(Phoneme p) noexcept {
  if (!is_stop(p)) return std::nullopt;
  const auto offset = index_of(p) - index_of(Phoneme::k);
  return static_cast<Varga>(offset / 5);
}

Phoneme varga_nasal(Varga v) noexcept {
  return static_cast<Phoneme>(index_of(Phoneme::k) + static_cast<std::size_t>(v) * 5 + 4);
}

bool is_iu_vowel(Phoneme p) noexcept {
  return p == Phoneme::i || p == Phoneme::ii || p == Phoneme::u || p == Phoneme::uu;
}

std::string_view iast_of(Phoneme p) noexcept {
  // UTF-8 views of kSpellings, built once.
  static const std::array<std::string, kPhonemeCount> utf8 = [] {
    std::array<std::string, kPhonemeCount> out;
    for (std::size_t i = 0; i < kPhonemeCount; ++i) {
      for (char32_t cp : kSpellings[i].iast) detail::append_utf8(out[i], cp);
    }
    return out;
  }();
  return utf8[index_of(p)];
}

PhonemeString& PhonemeString::append(const PhonemeString& other) {
  phonemes_.insert(phonemes_.end(), other.phonemes_.begin(), other.phonemes_.end());
  return *this;
}

PhonemeString PhonemeString::substr(std::size_t pos, std::size_t count) const {
  pos = std::min(pos, phonemes_.size());
  count = std::min(count, phonemes_.size() - pos);
  return PhonemeString(phonemes_.begin() + static_cast<std::ptrdiff_t>(pos),
                       phonemes_.begin() + static_cast<std::ptrdiff_t>(pos + count));
}

PhonemeString operator+(PhonemeString lhs, const PhonemeString& rhs) {
  lhs.append(rhs);
  return lhs;
}

PhonemeString parse_iast(std::string_view text) {
  const auto chars = compose(detail::decode_utf8(text));
  const auto& index = spelling_index();
  PhonemeString out;
  std::size_t i = 0;
  while (i < chars.size()) {
    if (is_space_cp(chars[i].cp)) {
      out.push_back(Phoneme::space);
      while (i < chars.size() && is_space_cp(chars[i].cp)) ++i;
      continue;
    }
    // Digraphs (aspirates, ai, au) win over their first letter.
    if (i + 1 < chars.size()) {
      const std::u32string pair{chars[i].cp, chars[i + 1].cp};
      if (const auto it = index.find(pair); it != index.end()) {
        out.push_back(it->second);
        i += 2;
        continue;
      }
    }
    const auto it = index.find(std::u32string(1, chars[i].cp));
    if (it == index.end()) throw UnknownSymbol(chars[i].source_index, chars[i].cp);
    out.push_back(it->second);
    ++i;
  }
  return out;
}

std::string render_iast(const PhonemeString& ps) {
  std::string out;
  out.reserve(ps.size() * 2);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const bool hiatus = k > 0 && ps[k - 1] == Phoneme::a;
    if (hiatus && ps[k] == Phoneme::i) {
      out += "ï";
    } else if (hiatus && ps[k] == Phoneme::u) {
      out += "ü";
    } else {
      out += iast_of(ps[k]);
    }
  }
  return out;
}

std::string canonical_iast(std::string_view text) { return render_iast(parse_iast(text)); }

PhonemeString strip_boundaries(const PhonemeString& ps) {
  PhonemeString out;
  for (Phoneme p : ps) {
    if (!is_boundary(p)) out.push_back(p);
  }
  return out;
}

std::size_t phoneme_length(const PhonemeString& ps) noexcept {
  return static_cast<std::size_t>(std::count_if(ps.begin(), ps.end(), [](Phoneme p) { return !is_boundary(p); }));
}

PhonemeString normalize_anunasika(const PhonemeString& ps) {
  auto out = ps;
  auto& v = out.mutable_phonemes();
  // Right to left, so a run of ṃ before a stop resolves in one pass.
  for (std::size_t i = v.size(); i-- > 1;) {
    if (v[i - 1] != Phoneme::anusvara) continue;
    if (const auto varga = varga_of(v[i])) v[i - 1] = varga_nasal(*varga);
  }
  return out;
}

PhonemeString normalize_gemination(const PhonemeString& ps, const GeminationRules& rules) {
  PhonemeString out;
  std::size_t i = 0;
  while (i < ps.size()) {
    const Phoneme p = ps[i];
    out.push_back(p);
    ++i;
    if (!rules.triggers.contains(p) || i >= ps.size() || !is_consonant(ps[i])) continue;
    const Phoneme doubled = ps[i];
    out.push_back(doubled);
    ++i;
    while (i < ps.size() && ps[i] == doubled) ++i;
  }
  return out;
}

PhonemeString normalize(const PhonemeString& ps, const GeminationRules& rules) {
  return normalize_gemination(normalize_anunasika(ps), rules);
}

GeminationRules GeminationRules::load(std::istream& in, const std::string& source) {
  GeminationRules rules;
  rules.triggers.clear();
  for (const auto& line : detail::read_data_lines(in)) {
    PhonemeString ps;
    try {
      ps = parse_iast(detail::trim(line.content));
    } catch (const UnknownSymbol& e) {
      throw RuleFileError(source, line.line_no, e.what());
    }
    if (ps.size() != 1 || !is_consonant(ps.front())) {
      throw RuleFileError(source, line.line_no, "expected a single consonant");
    }
    rules.triggers.insert(ps.front());
  }
  return rules;
}

GeminationRules GeminationRules::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open gemination rules: " + path);
  return load(in, path);
}

std::ostream& operator<<(std::ostream& os, const PhonemeString& ps) { return os << render_iast(ps); }

}  // namespace sandhi
