// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace sandhi {

// A morphological analysis label such as "n. sg. acc." or "pr. [1] ac. pl. 3".
// Spacing is canonicalized on construction so "n.sg.acc." and "n. sg. acc."
// compare equal.
class MorphTag {
 public:
  MorphTag() = default;
  // Throws std::invalid_argument on an empty tag.
  explicit MorphTag(std::string_view text);

  const std::string& str() const noexcept { return text_; }
  // Last whitespace-separated token, e.g. "iic." for "pfp. iic.".
  std::string_view last_token() const noexcept;
  bool is_iic() const noexcept { return last_token() == "iic."; }

  friend bool operator==(const MorphTag&, const MorphTag&) = default;
  friend auto operator<=>(const MorphTag&, const MorphTag&) = default;

 private:
  std::string text_;
};

struct CngCode {
  int value = 0;

  friend bool operator==(const CngCode&, const CngCode&) = default;
  friend auto operator<=>(const CngCode&, const CngCode&) = default;
};

// Negative codes are derivational-level (e.g. -190 for past participles).
constexpr bool is_derivational(CngCode code) noexcept { return code.value < 0; }

// The indeclinable code shared by ind., conj. and prep.
inline constexpr CngCode kIndeclinableCng{2};

// Many-to-many relation between tags and codes. Both directions are kept in
// sync; entries loaded with an `# extended` marker are tracked separately so
// callers can tell attested pairs from maintainer additions.
class CngTable {
 public:
  // `tag<TAB>code` per line; duplicates allowed.
  static CngTable load(std::istream& in, const std::string& source = "<stream>");
  static CngTable load_file(const std::string& path);

  void add(const MorphTag& tag, CngCode code, bool extended = false);

  std::set<CngCode> codes_of(const MorphTag& tag) const;
  std::set<MorphTag> tags_of(CngCode code) const;
  bool is_extended(const MorphTag& tag, CngCode code) const;

  const std::multimap<MorphTag, CngCode>& by_tag() const noexcept { return by_tag_; }
  const std::multimap<CngCode, MorphTag>& by_code() const noexcept { return by_code_; }

 private:
  std::multimap<MorphTag, CngCode> by_tag_;
  std::multimap<CngCode, MorphTag> by_code_;
  std::set<std::pair<MorphTag, CngCode>> extended_;
};

std::set<CngCode> codes_of(const MorphTag& tag, const CngTable& table);
std::set<MorphTag> tags_of(CngCode code, const CngTable& table);

}  // namespace sandhi
