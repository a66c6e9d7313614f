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

// Fragment selectors: an XPath subset of absolute child steps with 1-based
// positional predicates, plus an optional character range into the text
// content of the selected element. Serialized as e.g.
//
//   /paragraph/section[2]/p[1]@0+7
//
// Positions of 1 are omitted when printing. Character offsets count Unicode
// code points.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/xml.hpp"

namespace hylos {

struct SelectorStep {
  std::string name;
  std::size_t position = 1;

  bool operator==(const SelectorStep&) const = default;
};

struct CharRange {
  std::size_t start = 0;
  std::size_t length = 1;

  bool operator==(const CharRange&) const = default;
};

struct Selector {
  std::vector<SelectorStep> steps;
  std::optional<CharRange> range;

  // Throws InvalidSelector.
  static Selector parse(std::string_view text);
  std::string to_string() const;
  // Throws InvalidSelector when a structural invariant is broken.
  void validate() const;

  bool operator==(const Selector&) const = default;
};

struct FragmentSpan {
  // Indices into xml::Node::children from the body root to the element.
  std::vector<std::size_t> child_indices;
  std::string element_name;
  std::optional<CharRange> range;
  // Text of the range, or the element's whole text content.
  std::string text;

  bool operator==(const FragmentSpan&) const = default;
};

// Throws DanglingSelector or RangeError.
FragmentSpan resolve_selector(const Selector& selector, const xml::Node& body);
// Also throws MalformedBody when the body does not parse.
FragmentSpan resolve_selector(const Selector& selector, std::string_view body);

std::size_t count_code_points(std::string_view text);
// Byte offset of the code point with the given index (size() when past the end).
std::size_t code_point_offset(std::string_view text, std::size_t index);

}  // namespace hylos
