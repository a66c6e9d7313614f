// Copyright 2026 The Hylos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hylos {

// Root of every domain error raised by the engine. The CLI maps these to exit
// code 1 and the HTTP layer to 4xx responses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public Error {
 public:
  NotFound(std::string kind, std::string id)
      : Error(kind + " not found: " + id), kind_(std::move(kind)), id_(std::move(id)) {}
  const std::string& kind() const { return kind_; }
  const std::string& id() const { return id_; }

 private:
  std::string kind_;
  std::string id_;
};

// Structurally invalid input (bad identifier, missing title, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class MalformedBody : public Error {
 public:
  using Error::Error;
};

class EmptySource : public Error {
 public:
  EmptySource() : Error("no sectional titles or headwords to derive a slide from") {}
};

class VocabError : public Error {
 public:
  VocabError(std::string field, const std::string& value)
      : Error("invalid vocabulary value for " + field + ": '" + value + "'"),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class DuplicateChild : public Error {
 public:
  using Error::Error;
};

class InvalidSelector : public Error {
 public:
  using Error::Error;
};

class DanglingSelector : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class EmptyLink : public Error {
 public:
  EmptyLink() : Error("a link needs at least one arc") {}
};

class InvalidArcrole : public Error {
 public:
  using Error::Error;
};

// Removal refused because other entities still reference the target.
class DependencyError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class QueryError : public Error {
 public:
  using Error::Error;
};

class UnknownContext : public Error {
 public:
  explicit UnknownContext(const std::string& id)
      : Error("unknown link context: " + id) {}
};

class RenderError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "integrity check failed";
    for (const auto& item : items) out += "\n  " + item;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace hylos
