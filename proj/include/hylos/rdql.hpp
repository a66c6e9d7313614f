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

// RDQL subset:
//
//   query   := "SELECT" ("*" | var+) "WHERE" pattern+ ["USING" binding ("," binding)*]
//   pattern := "(" term "," term "," term ")"
//   binding := name "FOR" "<" absolute-iri ">"
//   term    := var | "<" (prefixed-name | absolute-iri) ">" | quoted-literal ["@" lang]
//
// Keywords are case-insensitive; patterns may be separated by commas or
// whitespace. A bracketed token containing "://" is an absolute IRI,
// anything else a prefixed name resolved through the USING table.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/errors.hpp"
#include "hylos/graph.hpp"

namespace hylos::rdql {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("RDQL syntax error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownPrefix : public Error {
 public:
  explicit UnknownPrefix(std::string prefix)
      : Error("unknown prefix '" + prefix + "'"), prefix_(std::move(prefix)) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

struct QueryTerm {
  enum class Kind { Variable, Iri, Prefixed, Literal };

  Kind kind = Kind::Variable;
  // Variable name without '?', IRI text, prefixed name, or literal text.
  std::string text;
  std::string lang;  // literals only

  static QueryTerm variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
  static QueryTerm iri(std::string iri) { return {Kind::Iri, std::move(iri), {}}; }
  static QueryTerm prefixed(std::string name) { return {Kind::Prefixed, std::move(name), {}}; }
  static QueryTerm literal(std::string text, std::string lang = {}) {
    return {Kind::Literal, std::move(text), std::move(lang)};
  }

  bool is_variable() const { return kind == Kind::Variable; }
  bool operator==(const QueryTerm&) const = default;
};

struct TriplePattern {
  QueryTerm subject;
  QueryTerm predicate;
  QueryTerm object;

  bool operator==(const TriplePattern&) const = default;
};

struct PrefixBinding {
  std::string name;
  std::string iri;

  bool operator==(const PrefixBinding&) const = default;
};

struct Query {
  bool select_all = true;
  std::vector<std::string> variables;  // when !select_all
  std::vector<TriplePattern> patterns;
  std::vector<PrefixBinding> prefixes;

  // Variables in first-occurrence order across the patterns.
  std::vector<std::string> pattern_variables() const;
  bool operator==(const Query&) const = default;
};

struct BindingTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Term>> rows;

  // Header of ?-prefixed names, then one N-Triples term per cell.
  std::string to_tsv() const;
  bool operator==(const BindingTable&) const = default;
};

Query parse(std::string_view text);

// Canonical text; parse(print(q)) == q.
std::string print(const Query& query);

// Replaces prefixed names with absolute IRIs. Throws UnknownPrefix.
Query expand(const Query& query);

// Conjunctive evaluation with left-to-right nested-loop joins. Rows are
// duplicate-free and sorted by their serialized terms. Throws QueryError when
// the query still holds prefixed names.
BindingTable evaluate(const Query& query, const Graph& graph);

}  // namespace hylos::rdql
