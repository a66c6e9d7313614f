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

#include "hylos/rdql.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "hylos/namespaces.hpp"

namespace hylos::rdql {

namespace {

struct Token {
  enum class Kind { Word, Star, Variable, Bracketed, String, LParen, RParen, Comma, End };
  Kind kind = Kind::End;
  std::string text;
  std::string lang;
  std::size_t position = 0;
};

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}
bool is_var_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token tok;
    tok.position = pos_;
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    switch (c) {
      case '*': ++pos_; tok.kind = Token::Kind::Star; return tok;
      case '(': ++pos_; tok.kind = Token::Kind::LParen; return tok;
      case ')': ++pos_; tok.kind = Token::Kind::RParen; return tok;
      case ',': ++pos_; tok.kind = Token::Kind::Comma; return tok;
      case '?': return variable(tok);
      case '<': return bracketed(tok);
      case '"': return string(tok);
      default: break;
    }
    if (is_word_start(c)) {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
      tok.kind = Token::Kind::Word;
      tok.text = std::string(text_.substr(begin, pos_ - begin));
      return tok;
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

 private:
  Token variable(Token tok) {
    std::size_t begin = ++pos_;
    while (pos_ < text_.size() && is_var_char(text_[pos_])) ++pos_;
    if (pos_ == begin) throw SyntaxError(tok.position, "empty variable name");
    tok.kind = Token::Kind::Variable;
    tok.text = std::string(text_.substr(begin, pos_ - begin));
    return tok;
  }

  Token bracketed(Token tok) {
    auto end = text_.find('>', pos_);
    if (end == std::string_view::npos) throw SyntaxError(tok.position, "unbalanced '<'");
    std::string_view inner = text_.substr(pos_ + 1, end - pos_ - 1);
    for (char c : inner) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"') {
        throw SyntaxError(tok.position, "invalid character in IRI reference");
      }
    }
    if (inner.empty()) throw SyntaxError(tok.position, "empty IRI reference");
    pos_ = end + 1;
    tok.kind = Token::Kind::Bracketed;
    tok.text = std::string(inner);
    return tok;
  }

  Token string(Token tok) {
    ++pos_;
    std::string value;
    while (true) {
      if (pos_ >= text_.size()) throw SyntaxError(tok.position, "unterminated string literal");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw SyntaxError(tok.position, "unterminated string literal");
        char e = text_[pos_++];
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default: throw SyntaxError(pos_ - 2, std::string("unsupported escape \\") + e);
        }
        continue;
      }
      value += c;
    }
    if (pos_ < text_.size() && text_[pos_] == '@') {
      std::size_t begin = ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == begin) throw SyntaxError(begin, "empty language tag");
      tok.lang = std::string(text_.substr(begin, pos_ - begin));
    }
    tok.kind = Token::Kind::String;
    tok.text = std::move(value);
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool keyword(const Token& tok, std::string_view word) {
  if (tok.kind != Token::Kind::Word || tok.text.size() != word.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(tok.text[i])) != word[i]) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Query run() {
    Query q;
    if (!keyword(tok_, "SELECT")) fail("expected SELECT");
    advance();
    std::vector<std::pair<std::string, std::size_t>> selected;
    if (tok_.kind == Token::Kind::Star) {
      advance();
    } else {
      q.select_all = false;
      while (tok_.kind == Token::Kind::Variable) {
        selected.emplace_back(tok_.text, tok_.position);
        advance();
        if (tok_.kind == Token::Kind::Comma) advance();
      }
      if (selected.empty()) fail("expected '*' or variables after SELECT");
    }
    if (!keyword(tok_, "WHERE")) fail("expected WHERE");
    advance();
    if (tok_.kind != Token::Kind::LParen) fail("expected at least one triple pattern");
    while (true) {
      q.patterns.push_back(pattern());
      if (tok_.kind == Token::Kind::Comma) {
        advance();
        if (tok_.kind != Token::Kind::LParen) fail("expected '(' after ','");
      }
      if (tok_.kind != Token::Kind::LParen) break;
    }
    if (keyword(tok_, "USING")) {
      advance();
      while (true) {
        q.prefixes.push_back(binding(q.prefixes));
        if (tok_.kind != Token::Kind::Comma) break;
        advance();
      }
    }
    if (tok_.kind != Token::Kind::End) fail("unexpected trailing input");

    auto known = q.pattern_variables();
    for (const auto& [name, position] : selected) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw SyntaxError(position, "selected variable ?" + name + " does not occur in a pattern");
      }
      if (std::find(q.variables.begin(), q.variables.end(), name) != q.variables.end()) {
        throw SyntaxError(position, "variable ?" + name + " selected twice");
      }
      q.variables.push_back(name);
    }
    return q;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& why) const { throw SyntaxError(tok_.position, why); }

  TriplePattern pattern() {
    advance();  // '('
    TriplePattern p;
    p.subject = term();
    expect_comma();
    p.predicate = term();
    expect_comma();
    p.object = term();
    if (tok_.kind != Token::Kind::RParen) fail("expected ')'");
    advance();
    return p;
  }

  void expect_comma() {
    if (tok_.kind != Token::Kind::Comma) fail("expected ','");
    advance();
  }

  QueryTerm term() {
    QueryTerm t;
    switch (tok_.kind) {
      case Token::Kind::Variable:
        t = QueryTerm::variable(tok_.text);
        break;
      case Token::Kind::Bracketed:
        if (looks_absolute(tok_.text)) {
          t = QueryTerm::iri(tok_.text);
        } else {
          auto colon = tok_.text.find(':');
          if (colon == std::string::npos || colon == 0) {
            fail("expected prefix:name or an absolute IRI inside <>");
          }
          t = QueryTerm::prefixed(tok_.text);
        }
        break;
      case Token::Kind::String:
        t = QueryTerm::literal(tok_.text, tok_.lang);
        break;
      case Token::Kind::RParen:
        fail("unbalanced parentheses: pattern needs three terms");
      default:
        fail("expected a variable, <IRI> or string literal");
    }
    advance();
    return t;
  }

  PrefixBinding binding(const std::vector<PrefixBinding>& seen) {
    if (tok_.kind != Token::Kind::Word) fail("expected a prefix name");
    PrefixBinding b;
    b.name = tok_.text;
    for (const auto& other : seen) {
      if (other.name == b.name) fail("prefix '" + b.name + "' declared twice");
    }
    advance();
    if (!keyword(tok_, "FOR")) fail("expected FOR");
    advance();
    if (tok_.kind != Token::Kind::Bracketed || !looks_absolute(tok_.text)) {
      fail("expected <absolute IRI> after FOR");
    }
    b.iri = tok_.text;
    advance();
    return b;
  }

  Lexer lexer_;
  Token tok_;
};

std::string print_term(const QueryTerm& t) {
  switch (t.kind) {
    case QueryTerm::Kind::Variable:
      return "?" + t.text;
    case QueryTerm::Kind::Iri:
    case QueryTerm::Kind::Prefixed:
      return "<" + t.text + ">";
    case QueryTerm::Kind::Literal: {
      std::string out = "\"";
      for (char c : t.text) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\t': out += "\\t"; break;
          case '\r': out += "\\r"; break;
          default: out += c;
        }
      }
      out += '"';
      if (!t.lang.empty()) out += "@" + t.lang;
      return out;
    }
  }
  return {};
}

class Evaluator {
 public:
  Evaluator(const Query& query, const Graph& graph) : query_(query), graph_(graph) {
    all_ = query.pattern_variables();
    columns_ = query.select_all ? all_ : query.variables;
    for (const auto& c : columns_) {
      projection_.push_back(static_cast<std::size_t>(
          std::find(all_.begin(), all_.end(), c) - all_.begin()));
    }
    bindings_.resize(all_.size());
  }

  BindingTable run() {
    join(0);
    BindingTable table;
    table.columns = columns_;
    table.rows.assign(rows_.begin(), rows_.end());
    return table;
  }

 private:
  std::size_t slot(const std::string& name) const {
    return static_cast<std::size_t>(std::find(all_.begin(), all_.end(), name) - all_.begin());
  }

  // Constant or currently bound value for a pattern position.
  std::optional<Term> resolve(const QueryTerm& t) const {
    switch (t.kind) {
      case QueryTerm::Kind::Variable:
        return bindings_[slot(t.text)];
      case QueryTerm::Kind::Iri:
        return Term::iri(t.text);
      case QueryTerm::Kind::Literal:
        return Term::literal(t.text, t.lang);
      case QueryTerm::Kind::Prefixed:
        throw QueryError("query is not expanded: <" + t.text + ">");
    }
    return std::nullopt;
  }

  void join(std::size_t index) {
    if (index == query_.patterns.size()) {
      std::vector<Term> row;
      row.reserve(projection_.size());
      for (auto i : projection_) row.push_back(*bindings_[i]);
      rows_.insert(std::move(row));
      return;
    }
    const TriplePattern& p = query_.patterns[index];
    TriplePatternMatch m{resolve(p.subject), resolve(p.predicate), resolve(p.object)};
    if ((m.subject && !m.subject->is_iri()) || (m.predicate && !m.predicate->is_iri())) return;

    for (const Triple& t : graph_.match(m)) {
      std::vector<std::size_t> newly_bound;
      bool ok = bind(p.subject, t.subject, newly_bound) &&
                bind(p.predicate, t.predicate, newly_bound) &&
                bind(p.object, t.object, newly_bound);
      if (ok) join(index + 1);
      for (auto i : newly_bound) bindings_[i].reset();
    }
  }

  // Binds a variable position, checking repeats of one variable in a pattern.
  bool bind(const QueryTerm& q, const Term& value, std::vector<std::size_t>& newly_bound) {
    if (!q.is_variable()) return true;
    auto& b = bindings_[slot(q.text)];
    if (b) return *b == value;
    b = value;
    newly_bound.push_back(slot(q.text));
    return true;
  }

  const Query& query_;
  const Graph& graph_;
  std::vector<std::string> all_;
  std::vector<std::string> columns_;
  std::vector<std::size_t> projection_;
  std::vector<std::optional<Term>> bindings_;
  std::set<std::vector<Term>> rows_;
};

}  // namespace

std::vector<std::string> Query::pattern_variables() const {
  std::vector<std::string> out;
  auto note = [&](const QueryTerm& t) {
    if (t.is_variable() && std::find(out.begin(), out.end(), t.text) == out.end()) {
      out.push_back(t.text);
    }
  };
  for (const auto& p : patterns) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  return out;
}

std::string BindingTable::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += '\t';
    out += "?" + columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += row[i].to_ntriples();
    }
    out += '\n';
  }
  return out;
}

Query parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Query& query) {
  std::string out = "SELECT";
  if (query.select_all) {
    out += " *";
  } else {
    for (const auto& v : query.variables) out += " ?" + v;
  }
  out += " WHERE";
  for (const auto& p : query.patterns) {
    out += " (" + print_term(p.subject) + ", " + print_term(p.predicate) + ", " +
           print_term(p.object) + ")";
  }
  if (!query.prefixes.empty()) {
    out += " USING";
    for (std::size_t i = 0; i < query.prefixes.size(); ++i) {
      out += (i ? ", " : " ") + query.prefixes[i].name + " FOR <" + query.prefixes[i].iri + ">";
    }
  }
  return out;
}

Query expand(const Query& query) {
  Query out = query;
  auto fix = [&](QueryTerm& t) {
    if (t.kind != QueryTerm::Kind::Prefixed) return;
    auto colon = t.text.find(':');
    std::string prefix = t.text.substr(0, colon);
    auto it = std::find_if(query.prefixes.begin(), query.prefixes.end(),
                           [&](const PrefixBinding& b) { return b.name == prefix; });
    if (it == query.prefixes.end()) throw UnknownPrefix(prefix);
    t = QueryTerm::iri(it->iri + t.text.substr(colon + 1));
  };
  for (auto& p : out.patterns) {
    fix(p.subject);
    fix(p.predicate);
    fix(p.object);
  }
  return out;
}

BindingTable evaluate(const Query& query, const Graph& graph) {
  return Evaluator(query, graph).run();
}

}  // namespace hylos::rdql
