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

#include "hylos/xml.hpp"

#include <expat.h>

#include <algorithm>
#include <memory>

namespace hylos::xml {

Node Node::element(std::string name) {
  Node n;
  n.kind = Kind::Element;
  n.name = std::move(name);
  return n;
}

Node Node::text_node(std::string text, bool cdata) {
  Node n;
  n.kind = Kind::Text;
  n.text = std::move(text);
  n.cdata = cdata;
  return n;
}

Node Node::raw(std::string markup) {
  Node n;
  n.kind = Kind::Raw;
  n.text = std::move(markup);
  return n;
}

const std::string* Node::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

Node& Node::set_attribute(std::string key, std::string value) {
  for (auto& [k, v] : attributes) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  attributes.emplace_back(std::move(key), std::move(value));
  return *this;
}

Node& Node::append(Node child) {
  children.push_back(std::move(child));
  return children.back();
}

Node& Node::add_element(std::string child_name) {
  return append(element(std::move(child_name)));
}

Node& Node::add_text_element(std::string child_name, std::string value) {
  Node& child = add_element(std::move(child_name));
  if (!value.empty()) child.append(text_node(std::move(value)));
  return child;
}

std::vector<const Node*> Node::elements(std::string_view child_name) const {
  std::vector<const Node*> out;
  for (const auto& child : children) {
    if (child.is_element() && (child_name.empty() || child.name == child_name)) {
      out.push_back(&child);
    }
  }
  return out;
}

const Node* Node::first(std::string_view child_name) const {
  for (const auto& child : children) {
    if (child.is_element() && child.name == child_name) return &child;
  }
  return nullptr;
}

namespace {

void collect_text(const Node& node, std::string& out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  for (const auto& child : node.children) collect_text(child, out);
}

struct ParseState {
  std::vector<Node*> stack;
  Node root;
  bool have_root = false;
  bool in_cdata = false;
};

void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
  auto* state = static_cast<ParseState*>(user);
  Node element = Node::element(name);
  for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
    element.attributes.emplace_back(attrs[i], attrs[i + 1]);
  }
  if (state->stack.empty()) {
    state->root = std::move(element);
    state->have_root = true;
    state->stack.push_back(&state->root);
  } else {
    Node& added = state->stack.back()->append(std::move(element));
    state->stack.push_back(&added);
  }
}

void on_end(void* user, const XML_Char*) {
  static_cast<ParseState*>(user)->stack.pop_back();
}

void on_text(void* user, const XML_Char* s, int len) {
  auto* state = static_cast<ParseState*>(user);
  if (state->stack.empty()) return;
  Node* parent = state->stack.back();
  if (!parent->children.empty() && parent->children.back().is_text() &&
      parent->children.back().cdata == state->in_cdata) {
    parent->children.back().text.append(s, static_cast<std::size_t>(len));
  } else {
    parent->append(Node::text_node(std::string(s, static_cast<std::size_t>(len)),
                                   state->in_cdata));
  }
}

void on_cdata_start(void* user) { static_cast<ParseState*>(user)->in_cdata = true; }
void on_cdata_end(void* user) { static_cast<ParseState*>(user)->in_cdata = false; }

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

void write_cdata(std::string& out, std::string_view text) {
  out += "<![CDATA[";
  std::size_t pos = 0;
  while (true) {
    auto hit = text.find("]]>", pos);
    if (hit == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, hit + 2 - pos));
    out += "]]><![CDATA[";
    pos = hit + 2;
  }
  out += "]]>";
}

void write_open(std::string& out, const Node& node) {
  out += '<';
  out += node.name;
  for (const auto& [k, v] : node.attributes) {
    out += ' ';
    out += k;
    out += "=\"";
    out += escape_attribute(v);
    out += '"';
  }
}

void write_compact(std::string& out, const Node& node) {
  switch (node.kind) {
    case Node::Kind::Text:
      if (node.cdata) {
        write_cdata(out, node.text);
      } else {
        out += escape_text(node.text);
      }
      return;
    case Node::Kind::Raw:
      out += node.text;
      return;
    case Node::Kind::Element:
      break;
  }
  write_open(out, node);
  if (node.children.empty()) {
    out += "/>";
    return;
  }
  out += '>';
  for (const auto& child : node.children) write_compact(out, child);
  out += "</";
  out += node.name;
  out += '>';
}

bool element_only(const Node& node) {
  bool any = false;
  for (const auto& child : node.children) {
    if (child.is_text()) {
      if (!is_blank(child.text) || child.cdata) return false;
    } else {
      any = true;
    }
  }
  return any;
}

void write_indented(std::string& out, const Node& node, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (!node.is_element() || !element_only(node)) {
    write_compact(out, node);
    out += '\n';
    return;
  }
  write_open(out, node);
  out += ">\n";
  for (const auto& child : node.children) {
    if (child.is_text()) continue;
    write_indented(out, child, depth + 1);
  }
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "</";
  out += node.name;
  out += ">\n";
}

}  // namespace

std::string Node::text_content() const {
  std::string out;
  collect_text(*this, out);
  return out;
}

Node parse(std::string_view text) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreate("UTF-8"));
  ParseState state;
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetCdataSectionHandler(parser.get(), on_cdata_start, on_cdata_end);
  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw SyntaxError(XML_GetCurrentLineNumber(parser.get()),
                      XML_GetCurrentColumnNumber(parser.get()),
                      XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!state.have_root) throw SyntaxError(1, 0, "no root element");
  return std::move(state.root);
}

std::string serialize(const Node& node) {
  std::string out;
  write_compact(out, node);
  return out;
}

std::string to_document(const Node& root) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  write_indented(out, root, 0);
  return out;
}

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attribute(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), is_space);
}

}  // namespace hylos::xml
