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

// Minimal XML document object model on top of expat. Element names are kept
// as written (qualified, e.g. "rdf:Description"); no namespace processing.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hylos/errors.hpp"

namespace hylos::xml {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error("XML syntax error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Node {
  // Raw nodes carry pre-serialized markup and are only produced by writers.
  enum class Kind { Element, Text, Raw };

  Kind kind = Kind::Element;
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Node> children;
  std::string text;
  bool cdata = false;

  static Node element(std::string name);
  static Node text_node(std::string text, bool cdata = false);
  static Node raw(std::string markup);

  bool is_element() const { return kind == Kind::Element; }
  bool is_text() const { return kind == Kind::Text; }

  const std::string* attribute(std::string_view key) const;
  Node& set_attribute(std::string key, std::string value);

  Node& append(Node child);
  Node& add_element(std::string child_name);
  // Appends <child_name>text</child_name>.
  Node& add_text_element(std::string child_name, std::string value);

  // Child elements, optionally restricted to one name.
  std::vector<const Node*> elements(std::string_view child_name = {}) const;
  const Node* first(std::string_view child_name) const;

  // Concatenated text of all descendant text nodes in document order.
  std::string text_content() const;

  bool operator==(const Node&) const = default;
};

// Parses a complete document with a single root element.
Node parse(std::string_view text);

// Compact serialization, no indentation and no prolog.
std::string serialize(const Node& node);

// Full document with an XML prolog. Elements whose content is elements only
// are indented; anything with mixed content is written compactly.
std::string to_document(const Node& root);

std::string escape_text(std::string_view text);
std::string escape_attribute(std::string_view text);

// True when the byte is XML whitespace.
inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_blank(std::string_view text);

}  // namespace hylos::xml
