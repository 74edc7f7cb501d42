// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "sandhi/phonology.hpp"

namespace sandhi {

struct PreverbFlags {
  bool natva = false;  // retroflexes n in the stem's first syllable
  bool satva = false;  // retroflexes stem-initial s
};

// Junction rules for vowel sandhi plus the preverb inventory. Read-only once
// loaded.
class SandhiRuleTable {
 public:
  // `<final>+<initial>=<replacement>` per line, e.g. `i+u=yu`.
  void load_vowel_rules(std::istream& in, const std::string& source = "<stream>");
  // `preverb[<TAB>flag...]` per line; flags are `natva` and `satva`.
  void load_preverbs(std::istream& in, const std::string& source = "<stream>");

  static SandhiRuleTable load_files(const std::string& vowel_rules_path, const std::string& preverbs_path);

  // Throws MissingRule.
  const PhonemeString& vowel_rule(Phoneme final_vowel, Phoneme initial_vowel) const;
  bool has_vowel_rule(Phoneme final_vowel, Phoneme initial_vowel) const;
  // Throws UnknownPreverb.
  PreverbFlags preverb_flags(const PhonemeString& preverb) const;
  bool is_preverb(const PhonemeString& preverb) const;

  const std::map<std::pair<Phoneme, Phoneme>, PhonemeString>& vowel_rules() const noexcept { return vowel_rules_; }
  const std::map<PhonemeString, PreverbFlags>& preverbs() const noexcept { return preverbs_; }

 private:
  std::map<std::pair<Phoneme, Phoneme>, PhonemeString> vowel_rules_;
  std::map<PhonemeString, PreverbFlags> preverbs_;
};

// Joins two segments at one junction. Vowel+vowel junctions use the rule
// table; any junction with a consonant on either side is concatenation.
// Boundary markers at the junction are dropped.
PhonemeString vowel_sandhi_join(const PhonemeString& left, const PhonemeString& right, const SandhiRuleTable& rules);

// Attaches a preverb (or a hyphenated chain such as `sam-ā`) to a verbal
// stem, applying junction sandhi and ṇ/ṣ retroflexion.
PhonemeString apply_preverb(const PhonemeString& preverb, const PhonemeString& stem, const SandhiRuleTable& rules);

}  // namespace sandhi
