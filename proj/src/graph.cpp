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

#include "hylos/graph.hpp"

#include <algorithm>
#include <cctype>

#include "hylos/errors.hpp"

namespace hylos {

Term::Term(Kind kind, std::string value, std::string lang)
    : kind_(kind), value_(std::move(value)), lang_(std::move(lang)) {
  if (kind_ == Kind::Iri) {
    key_ = "<" + value_ + ">";
  } else {
    key_ = "\"" + escape_ntriples_literal(value_) + "\"";
    if (!lang_.empty()) key_ += "@" + lang_;
  }
}

Term Term::iri(std::string value) { return Term(Kind::Iri, std::move(value), {}); }

Term Term::literal(std::string text, std::string lang) {
  return Term(Kind::Literal, std::move(text), std::move(lang));
}

std::string Triple::to_ntriples() const {
  return subject.to_ntriples() + " " + predicate.to_ntriples() + " " + object.to_ntriples() +
         " .";
}

Graph::Graph(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  for (std::uint32_t i = 0; i < triples_.size(); ++i) {
    by_subject_[triples_[i].subject.to_ntriples()].push_back(i);
    by_predicate_[triples_[i].predicate.to_ntriples()].push_back(i);
    by_object_[triples_[i].object.to_ntriples()].push_back(i);
  }
}

bool Graph::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::vector<Triple> Graph::match(const TriplePatternMatch& pattern) const {
  // Start from the smallest applicable index; postings are in graph order.
  const std::vector<std::uint32_t>* best = nullptr;
  bool any_bound = false;
  auto consider = [&](const Index& index, const std::optional<Term>& term) {
    if (!term) return true;
    any_bound = true;
    auto it = index.find(term->to_ntriples());
    if (it == index.end()) return false;
    if (!best || it->second.size() < best->size()) best = &it->second;
    return true;
  };
  if (!consider(by_subject_, pattern.subject) || !consider(by_predicate_, pattern.predicate) ||
      !consider(by_object_, pattern.object)) {
    return {};
  }

  auto agrees = [&](const Triple& t) {
    return (!pattern.subject || t.subject == *pattern.subject) &&
           (!pattern.predicate || t.predicate == *pattern.predicate) &&
           (!pattern.object || t.object == *pattern.object);
  };
  if (!any_bound) return triples_;
  std::vector<Triple> out;
  for (auto i : *best) {
    if (agrees(triples_[i])) out.push_back(triples_[i]);
  }
  return out;
}

std::vector<Term> Graph::terms() const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    out.push_back(t.subject);
    out.push_back(t.predicate);
    out.push_back(t.object);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph Graph::with(const std::vector<Triple>& more) const {
  std::vector<Triple> all = triples_;
  all.insert(all.end(), more.begin(), more.end());
  return Graph(std::move(all));
}

std::string Graph::to_ntriples() const {
  std::string out;
  for (const auto& t : triples_) {
    out += t.to_ntriples();
    out += '\n';
  }
  return out;
}

std::uint64_t Graph::fingerprint() const { return fnv1a(to_ntriples()); }

std::string escape_ntriples_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace {

class NTriplesLine {
 public:
  NTriplesLine(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  bool blank() {
    skip_space();
    return pos_ == text_.size() || text_[pos_] == '#';
  }

  Triple read() {
    Triple t;
    t.subject = iri();
    t.predicate = iri();
    t.object = term();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '.') fail("expected '.'");
    ++pos_;
    skip_space();
    if (pos_ != text_.size() && text_[pos_] != '#') fail("trailing characters");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  Term iri() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '<') fail("expected '<'");
    auto end = text_.find('>', pos_);
    if (end == std::string_view::npos) fail("unterminated IRI");
    Term t = Term::iri(std::string(text_.substr(pos_ + 1, end - pos_ - 1)));
    pos_ = end + 1;
    return t;
  }

  Term term() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '"') return literal();
    return iri();
  }

  Term literal() {
    ++pos_;
    std::string value;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated literal");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        value += c;
        continue;
      }
      if (pos_ >= text_.size()) fail("dangling escape");
      char e = text_[pos_++];
      switch (e) {
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 't': value += '\t'; break;
        case '"': value += '"'; break;
        case '\\': value += '\\'; break;
        default: fail(std::string("unsupported escape \\") + e);
      }
    }
    std::string lang;
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '-')) {
        lang += text_[pos_++];
      }
      if (lang.empty()) fail("empty language tag");
    }
    return Term::literal(std::move(value), std::move(lang));
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError("N-Triples line " + std::to_string(line_) + ": " + why);
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view text) {
  std::vector<Triple> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    NTriplesLine reader(line, line_no);
    if (!reader.blank()) out.push_back(reader.read());
    start = end + 1;
  }
  return out;
}

}  // namespace hylos
