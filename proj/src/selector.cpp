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

#include "hylos/selector.hpp"

#include <charconv>

#include "hylos/errors.hpp"

namespace hylos {

namespace {

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.' || c == ':';
}

class SelectorReader {
 public:
  explicit SelectorReader(std::string_view text) : text_(text) {}

  Selector read() {
    Selector sel;
    if (text_.empty()) fail("empty selector");
    while (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      SelectorStep step;
      step.name = name();
      if (peek('[')) {
        ++pos_;
        step.position = number();
        expect(']');
      }
      sel.steps.push_back(std::move(step));
    }
    if (sel.steps.empty()) fail("selector must start with '/'");
    if (peek('@')) {
      ++pos_;
      CharRange range;
      range.start = number();
      expect('+');
      range.length = number();
      sel.range = range;
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    sel.validate();
    return sel;
  }

 private:
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    std::size_t begin = pos_;
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("expected an element name");
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::size_t number() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidSelector("invalid selector '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Selector Selector::parse(std::string_view text) { return SelectorReader(text).read(); }

std::string Selector::to_string() const {
  std::string out;
  for (const auto& step : steps) {
    out += '/';
    out += step.name;
    if (step.position != 1) out += "[" + std::to_string(step.position) + "]";
  }
  if (range) out += "@" + std::to_string(range->start) + "+" + std::to_string(range->length);
  return out;
}

void Selector::validate() const {
  if (steps.empty()) throw InvalidSelector("selector has no steps");
  for (const auto& step : steps) {
    if (step.name.empty() || !is_name_start(step.name.front())) {
      throw InvalidSelector("invalid element name '" + step.name + "' in selector");
    }
    for (char c : step.name) {
      if (!is_name_char(c)) throw InvalidSelector("invalid element name '" + step.name + "'");
    }
    if (step.position < 1) {
      throw InvalidSelector("selector positions are 1-based (got 0 at " + step.name + ")");
    }
  }
  if (range && range->length < 1) throw InvalidSelector("character range length must be >= 1");
}

std::size_t count_code_points(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::size_t code_point_offset(std::string_view text, std::size_t index) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) continue;
    if (n == index) return i;
    ++n;
  }
  return text.size();
}

FragmentSpan resolve_selector(const Selector& selector, const xml::Node& body) {
  selector.validate();
  const auto& first = selector.steps.front();
  if (first.name != body.name || first.position != 1) {
    throw DanglingSelector("selector " + selector.to_string() + " does not match root <" +
                           body.name + ">");
  }
  FragmentSpan span;
  const xml::Node* current = &body;
  for (std::size_t s = 1; s < selector.steps.size(); ++s) {
    const auto& step = selector.steps[s];
    std::size_t seen = 0;
    const xml::Node* next = nullptr;
    for (std::size_t i = 0; i < current->children.size(); ++i) {
      const auto& child = current->children[i];
      if (child.is_element() && child.name == step.name && ++seen == step.position) {
        next = &child;
        span.child_indices.push_back(i);
        break;
      }
    }
    if (!next) {
      throw DanglingSelector("selector " + selector.to_string() + ": no " + step.name + "[" +
                             std::to_string(step.position) + "]");
    }
    current = next;
  }
  span.element_name = current->name;
  std::string text = current->text_content();
  if (selector.range) {
    const auto& r = *selector.range;
    std::size_t available = count_code_points(text);
    if (r.start + r.length > available) {
      throw RangeError("character range " + std::to_string(r.start) + "+" +
                       std::to_string(r.length) + " exceeds " + std::to_string(available) +
                       " characters of <" + current->name + ">");
    }
    std::size_t begin = code_point_offset(text, r.start);
    std::size_t end = code_point_offset(text, r.start + r.length);
    span.range = r;
    span.text = text.substr(begin, end - begin);
  } else {
    span.text = std::move(text);
  }
  return span;
}

FragmentSpan resolve_selector(const Selector& selector, std::string_view body) {
  xml::Node root;
  try {
    root = xml::parse(body);
  } catch (const xml::SyntaxError& e) {
    throw MalformedBody(e.what());
  }
  return resolve_selector(selector, root);
}

}  // namespace hylos
