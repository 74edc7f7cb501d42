// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

// Internal helpers shared by the loaders. Not installed.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sandhi::detail {

// Decodes UTF-8; invalid sequences decode to U+FFFD so the caller can report
// them as unknown symbols at the right position.
std::u32string decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t cp);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// One non-empty line of a line-based data file. Everything after `#` is a
// comment; a comment that starts with the word `extended` marks an entry
// added by the maintainers rather than attested in the source material.
struct DataLine {
  std::size_t line_no = 0;
  std::string content;
  bool extended = false;
};

std::vector<DataLine> read_data_lines(std::istream& in);

}  // namespace sandhi::detail
