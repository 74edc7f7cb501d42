// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sandhi {

// One token of the internal representation. Everything up to `avagraha` is a
// member of the Sanskrit inventory; `hyphen` and `space` are boundary markers
// that survive parsing so compounds and word breaks can be reconstructed.
enum class Phoneme : std::uint8_t {
  // vowels
  a, aa, i, ii, u, uu, r_vocalic, rr_vocalic, l_vocalic, ll_vocalic, e, ai, o, au,
  // stops, by varga
  k, kh, g, gh, nga,
  c, ch, j, jh, nya,
  tt, tth, dd, ddh, nna,
  t, th, d, dh, n,
  p, ph, b, bh, m,
  // semivowels, sibilants, h
  y, r, l, v,
  sha, ssa, s, h,
  anusvara, visarga, avagraha,
  // boundary pseudo-phonemes
  hyphen, space,
};

inline constexpr std::size_t kPhonemeCount = static_cast<std::size_t>(Phoneme::space) + 1;

enum class Varga : std::uint8_t { velar, palatal, retroflex, dental, labial };

bool is_vowel(Phoneme p) noexcept;
bool is_consonant(Phoneme p) noexcept;
bool is_boundary(Phoneme p) noexcept;
// k-series through m; nasals included.
bool is_stop(Phoneme p) noexcept;
std::optional<Varga> varga_of(Phoneme p) noexcept;
Phoneme varga_nasal(Varga v) noexcept;
// i/ī/u/ū: the vowels whose presence at the end of a preverb conditions ṣ.
bool is_iu_vowel(Phoneme p) noexcept;
// Canonical IAST spelling of a single phoneme.
std::string_view iast_of(Phoneme p) noexcept;

class PhonemeString {
 public:
  using value_type = Phoneme;
  using const_iterator = std::vector<Phoneme>::const_iterator;

  PhonemeString() = default;
  PhonemeString(std::initializer_list<Phoneme> ps) : phonemes_(ps) {}
  explicit PhonemeString(std::vector<Phoneme> ps) : phonemes_(std::move(ps)) {}
  template <typename It>
  PhonemeString(It first, It last) : phonemes_(first, last) {}

  std::size_t size() const noexcept { return phonemes_.size(); }
  bool empty() const noexcept { return phonemes_.empty(); }
  const_iterator begin() const noexcept { return phonemes_.begin(); }
  const_iterator end() const noexcept { return phonemes_.end(); }
  Phoneme operator[](std::size_t i) const { return phonemes_[i]; }
  Phoneme front() const { return phonemes_.front(); }
  Phoneme back() const { return phonemes_.back(); }
  std::span<const Phoneme> view() const noexcept { return phonemes_; }

  void push_back(Phoneme p) { phonemes_.push_back(p); }
  void pop_back() { phonemes_.pop_back(); }
  PhonemeString& append(const PhonemeString& other);
  PhonemeString substr(std::size_t pos, std::size_t count = static_cast<std::size_t>(-1)) const;
  std::vector<Phoneme>& mutable_phonemes() noexcept { return phonemes_; }

  friend bool operator==(const PhonemeString&, const PhonemeString&) = default;
  friend auto operator<=>(const PhonemeString&, const PhonemeString&) = default;

 private:
  std::vector<Phoneme> phonemes_;
};

PhonemeString operator+(PhonemeString lhs, const PhonemeString& rhs);

// Tokenizes IAST. Accepts precomposed or decomposed diacritics, `ṁ` for `ṃ`,
// ASCII or typographic apostrophe for avagraha, hyphen, whitespace (a run
// becomes one space), and ï/ü for i/u in hiatus after a. Throws
// UnknownSymbol for anything else.
PhonemeString parse_iast(std::string_view text);
// Writes ï/ü after a so that a + i does not read back as ai. A stop
// followed by h still reads back as the aspirate.
std::string render_iast(const PhonemeString& ps);
// render_iast(parse_iast(text)).
std::string canonical_iast(std::string_view text);

// Comparison form: hyphens and spaces removed.
PhonemeString strip_boundaries(const PhonemeString& ps);
// Number of non-boundary phonemes.
std::size_t phoneme_length(const PhonemeString& ps) noexcept;

// ṃ before a varga stop becomes that varga's nasal.
PhonemeString normalize_anunasika(const PhonemeString& ps);

// Consonants after which an identical consonant run is collapsed (dvitva).
struct GeminationRules {
  std::set<Phoneme> triggers{Phoneme::r, Phoneme::h};

  // One trigger phoneme per line in IAST; `#` starts a comment.
  static GeminationRules load(std::istream& in, const std::string& source = "<stream>");
  static GeminationRules load_file(const std::string& path);
};

PhonemeString normalize_gemination(const PhonemeString& ps, const GeminationRules& rules = {});

// Both normalizations, anusvāra first.
PhonemeString normalize(const PhonemeString& ps, const GeminationRules& rules = {});

std::ostream& operator<<(std::ostream& os, const PhonemeString& ps);

}  // namespace sandhi
