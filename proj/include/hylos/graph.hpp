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

// RDF statement graph: IRIs and plain/language-tagged literals only (no blank
// nodes, no typed literals). Triples are kept sorted by their N-Triples
// serialization, which gives every query a deterministic order.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hylos {

class Term {
 public:
  enum class Kind { Iri, Literal };

  Term() = default;
  static Term iri(std::string value);
  static Term literal(std::string text, std::string lang = {});

  Kind kind() const { return kind_; }
  bool is_iri() const { return kind_ == Kind::Iri; }
  bool is_literal() const { return kind_ == Kind::Literal; }
  const std::string& value() const { return value_; }
  const std::string& lang() const { return lang_; }

  // N-Triples form: <iri> or "text"@lang.
  const std::string& to_ntriples() const { return key_; }

  bool operator==(const Term& other) const { return key_ == other.key_; }
  std::strong_ordering operator<=>(const Term& other) const { return key_ <=> other.key_; }

 private:
  Term(Kind kind, std::string value, std::string lang);

  Kind kind_ = Kind::Iri;
  std::string value_;
  std::string lang_;
  std::string key_;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  std::string to_ntriples() const;
  bool operator==(const Triple&) const = default;
  std::strong_ordering operator<=>(const Triple&) const = default;
};

struct TriplePatternMatch {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;
};

// Immutable, indexed set of triples.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Triple> triples);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const std::vector<Triple>& triples() const { return triples_; }
  bool contains(const Triple& t) const;

  // Triples agreeing with every bound component, in graph order.
  std::vector<Triple> match(const TriplePatternMatch& pattern) const;

  // Every distinct term, sorted.
  std::vector<Term> terms() const;

  // A new graph holding this graph's triples plus `more`.
  Graph with(const std::vector<Triple>& more) const;

  std::string to_ntriples() const;
  // FNV-1a over the N-Triples dump; equal graphs hash equal.
  std::uint64_t fingerprint() const;

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  using Index = std::unordered_map<std::string, std::vector<std::uint32_t>>;
  std::vector<Triple> triples_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
};

// Throws FormatError with the 1-based line number.
std::vector<Triple> parse_ntriples(std::string_view text);

std::string escape_ntriples_literal(std::string_view text);

std::uint64_t fnv1a(std::string_view data);

}  // namespace hylos
