// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sandhi {

// Base of every error raised by the library. Callers that only want to report
// can catch this; callers that recover catch the concrete type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A character outside the IAST inventory. `position` counts code points from
// the start of the input.
class UnknownSymbol : public Error {
 public:
  UnknownSymbol(std::size_t position, char32_t code_point, std::string context = {});

  std::size_t position() const noexcept { return position_; }
  char32_t code_point() const noexcept { return code_point_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::size_t position_;
  char32_t code_point_;
  std::string context_;
};

class MissingRule : public Error {
 public:
  MissingRule(std::string final_sound, std::string initial_sound);

  const std::string& final_sound() const noexcept { return final_; }
  const std::string& initial_sound() const noexcept { return initial_; }

 private:
  std::string final_;
  std::string initial_;
};

class UnknownPreverb : public Error {
 public:
  explicit UnknownPreverb(std::string preverb);
  const std::string& preverb() const noexcept { return preverb_; }

 private:
  std::string preverb_;
};

// Syntax or consistency error in a rule/table data file.
class RuleFileError : public Error {
 public:
  RuleFileError(std::string source, std::size_t line, const std::string& reason);
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class MalformedRecord : public Error {
 public:
  MalformedRecord(std::string reason, std::optional<long long> sent_id = std::nullopt);
  const std::string& reason() const noexcept { return reason_; }
  std::optional<long long> sent_id() const noexcept { return sent_id_; }

 private:
  std::string reason_;
  std::optional<long long> sent_id_;
};

class DuplicateNodeId : public Error {
 public:
  explicit DuplicateNodeId(long long id);
  long long id() const noexcept { return id_; }

 private:
  long long id_;
};

class SpanOutOfRange : public Error {
 public:
  SpanOutOfRange(long long id, const std::string& detail);
  long long id() const noexcept { return id_; }

 private:
  long long id_;
};

class MalformedDocument : public Error {
 public:
  explicit MalformedDocument(const std::string& reason);
};

class MissingAttribute : public Error {
 public:
  explicit MissingAttribute(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class TooManyComponents : public Error {
 public:
  TooManyComponents(std::size_t count, std::size_t cap);
  std::size_t count() const noexcept { return count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

// Configuration or I/O failure in the pipeline driver.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sandhi
