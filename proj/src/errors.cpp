// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "sandhi/errors.hpp"

#include <cstdio>

#include "text_util.hpp"

namespace sandhi {

namespace {

std::string describe_code_point(char32_t cp) {
  char hex[16];
  std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(cp));
  std::string out = "'";
  detail::append_utf8(out, cp);
  return out + "' (" + hex + ")";
}

std::string unknown_symbol_message(std::size_t position, char32_t cp, const std::string& context) {
  std::string msg = "unknown symbol " + describe_code_point(cp) + " at position " + std::to_string(position);
  if (!context.empty()) msg += " in " + context;
  return msg;
}

std::string record_message(const std::string& reason, std::optional<long long> sent_id) {
  if (!sent_id) return "malformed record: " + reason;
  return "malformed record (sent_id " + std::to_string(*sent_id) + "): " + reason;
}

}  // namespace

UnknownSymbol::UnknownSymbol(std::size_t position, char32_t code_point, std::string context)
    : Error(unknown_symbol_message(position, code_point, context)),
      position_(position),
      code_point_(code_point),
      context_(std::move(context)) {}

MissingRule::MissingRule(std::string final_sound, std::string initial_sound)
    : Error("no sandhi rule for " + final_sound + "+" + initial_sound),
      final_(std::move(final_sound)),
      initial_(std::move(initial_sound)) {}

UnknownPreverb::UnknownPreverb(std::string preverb)
    : Error("unknown preverb '" + preverb + "'"), preverb_(std::move(preverb)) {}

RuleFileError::RuleFileError(std::string source, std::size_t line, const std::string& reason)
    : Error(source + ":" + std::to_string(line) + ": " + reason), source_(std::move(source)), line_(line) {}

MalformedRecord::MalformedRecord(std::string reason, std::optional<long long> sent_id)
    : Error(record_message(reason, sent_id)), reason_(std::move(reason)), sent_id_(sent_id) {}

DuplicateNodeId::DuplicateNodeId(long long id) : Error("duplicate node id " + std::to_string(id)), id_(id) {}

SpanOutOfRange::SpanOutOfRange(long long id, const std::string& detail)
    : Error("node " + std::to_string(id) + ": " + detail), id_(id) {}

MalformedDocument::MalformedDocument(const std::string& reason) : Error("malformed GraphML: " + reason) {}

MissingAttribute::MissingAttribute(std::string name)
    : Error("missing attribute '" + name + "'"), name_(std::move(name)) {}

TooManyComponents::TooManyComponents(std::size_t count, std::size_t cap)
    : Error(std::to_string(count) + " compound components exceed the cap of " + std::to_string(cap)),
      count_(count),
      cap_(cap) {}

}  // namespace sandhi
