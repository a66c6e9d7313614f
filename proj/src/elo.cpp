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

#include "hylos/elo.hpp"

#include <regex>

#include "hylos/errors.hpp"
#include "hylos/vocabulary.hpp"
#include "hylos/xml.hpp"

namespace hylos {

namespace {

xml::Node parse_body(std::string_view body) {
  try {
    return xml::parse(body);
  } catch (const xml::SyntaxError& e) {
    throw MalformedBody(std::string("paragraph body is not well-formed: ") + e.what());
  }
}

const xml::Node* find_block(const xml::Node& node) {
  if (node.is_element() && (node.name == "p" || node.name == "para")) return &node;
  for (const auto& child : node.children) {
    if (!child.is_element()) continue;
    if (const auto* hit = find_block(child)) return hit;
  }
  return nullptr;
}

bool is_utf8_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Validates one vocabulary-typed member, throwing VocabError.
void check_vocab(std::string_view field, const std::optional<std::string>& value) {
  if (value && !Vocabulary::lom().contains(field, *value)) {
    throw VocabError(std::string(field), *value);
  }
}

void check_obligatory(const ObligatoryFields& f) {
  check_vocab("semanticDensity", f.semantic_density);
  check_vocab("difficulty", f.difficulty);
  check_vocab("context", f.context);
  check_vocab("learningResourceType", f.learning_resource_type);
  check_vocab("structure", f.structure);
  check_vocab("documentStatus", f.document_status);
}

}  // namespace

const std::vector<std::string>& obligatory_field_names() {
  static const std::vector<std::string> names = {
      "keywords", "semanticDensity",      "difficulty", "context",
      "learningResourceType", "structure", "documentStatus"};
  return names;
}

std::string reformat_description(std::string_view text, std::size_t limit) {
  std::string normalized;
  normalized.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (xml::is_space(c)) {
      pending_space = !normalized.empty();
      continue;
    }
    if (pending_space) normalized += ' ';
    pending_space = false;
    normalized += c;
  }

  // Byte offset of the code point at index `limit`, if the text is longer.
  std::size_t count = 0;
  std::size_t cut = std::string::npos;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (is_utf8_continuation(static_cast<unsigned char>(normalized[i]))) continue;
    if (count == limit) {
      cut = i;
      break;
    }
    ++count;
  }
  if (cut == std::string::npos) return normalized;
  if (normalized[cut] == ' ') return normalized.substr(0, cut);
  auto space = normalized.rfind(' ', cut);
  if (space == std::string::npos || space == 0) return normalized.substr(0, cut);
  return normalized.substr(0, space);
}

std::string first_text_block(std::string_view body) {
  xml::Node root = parse_body(body);
  const xml::Node* block = find_block(root);
  return (block ? *block : root).text_content();
}

LomMetadata autogen_metadata(const ParagraphContent& paragraph, const TechnicalFacts& tech,
                             std::string_view author, const AuthorPresets& presets) {
  if (tech.format.empty() || tech.location.empty() || tech.created.empty() ||
      tech.modified.empty()) {
    throw ValidationError("technical facts incomplete: format, location and dates are required");
  }
  check_obligatory(presets.last_used);
  check_vocab("intendedEndUserRole", presets.intended_end_user_role);

  LomMetadata meta;
  if (!paragraph.title.empty()) meta.title = paragraph.title;
  meta.coverage = paragraph.sectional_titles;
  std::string description = reformat_description(first_text_block(paragraph.body));
  if (!description.empty()) meta.description = std::move(description);

  meta.technical.format = tech.format;
  meta.technical.size = tech.size;
  meta.technical.location = tech.location;
  meta.technical.created = tech.created;
  meta.technical.modified = tech.modified;
  meta.aggregation_level = tech.aggregation_level;
  if (!author.empty()) meta.lifecycle.author = std::string(author);

  meta.language = presets.language;
  meta.educational.intended_end_user_role = presets.intended_end_user_role;
  return set_obligatory_fields(std::move(meta), presets.last_used);
}

LomMetadata set_obligatory_fields(LomMetadata meta, const ObligatoryFields& fields) {
  check_obligatory(fields);
  if (fields.keywords) meta.keywords = *fields.keywords;
  if (fields.semantic_density) meta.educational.semantic_density = fields.semantic_density;
  if (fields.difficulty) meta.educational.difficulty = fields.difficulty;
  if (fields.context) meta.educational.context = fields.context;
  if (fields.learning_resource_type) {
    meta.educational.learning_resource_type = fields.learning_resource_type;
  }
  if (fields.structure) meta.structure = fields.structure;
  if (fields.document_status) meta.lifecycle.document_status = fields.document_status;
  return meta;
}

ValidationReport validate_for_publication(const Elo& elo) {
  const LomMetadata& m = elo.metadata;
  const auto& vocab = Vocabulary::lom();
  ValidationReport report;

  auto check = [&](const std::string& field, const std::optional<std::string>& value) {
    if (!value || value->empty()) {
      report.push_back(field);
    } else if (!vocab.contains(field, *value)) {
      report.push_back(field + ": invalid vocabulary value");
    }
  };

  if (m.keywords.empty()) {
    report.push_back("keywords");
  } else {
    for (const auto& k : m.keywords) {
      if (k.empty()) {
        report.push_back("keywords: empty keyword");
        break;
      }
    }
  }
  check("semanticDensity", m.educational.semantic_density);
  check("difficulty", m.educational.difficulty);
  check("context", m.educational.context);
  check("learningResourceType", m.educational.learning_resource_type);
  check("structure", m.structure);
  check("documentStatus", m.lifecycle.document_status);

  const auto& role = m.educational.intended_end_user_role;
  if (role && !vocab.contains("intendedEndUserRole", *role)) {
    report.push_back("intendedEndUserRole: invalid vocabulary value");
  }
  if (m.aggregation_level && (*m.aggregation_level < 1 || *m.aggregation_level > 4)) {
    report.push_back("aggregationLevel: out of range");
  }
  if (m.language && !is_valid_language_tag(*m.language)) {
    report.push_back("language: invalid tag");
  }
  // ISO-8601 timestamps of equal shape order lexicographically.
  if (m.technical.created && m.technical.modified &&
      *m.technical.modified < *m.technical.created) {
    report.push_back("modified: precedes created");
  }
  return report;
}

SlideContent derive_standard_slide(const ParagraphContent& paragraph) {
  if (paragraph.sectional_titles.empty() && paragraph.headwords.empty()) {
    throw EmptySource();
  }
  SlideContent slide;
  slide.title = paragraph.title;
  slide.bullets =
      paragraph.sectional_titles.empty() ? paragraph.headwords : paragraph.sectional_titles;
  return slide;
}

bool is_valid_slug(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) return false;
  }
  return true;
}

bool is_valid_language_tag(std::string_view tag) {
  static const std::regex pattern("[A-Za-z]{2,8}(-[A-Za-z0-9]{1,8})*");
  return std::regex_match(tag.begin(), tag.end(), pattern);
}

void validate_structure(const Elo& elo) {
  if (!is_valid_slug(elo.id)) {
    throw ValidationError("invalid ELO identifier '" + elo.id + "' (expected [a-z0-9-]+)");
  }
  if (elo.paragraph.title.empty()) {
    throw ValidationError("ELO " + elo.id + ": paragraph title is empty");
  }
  parse_body(elo.paragraph.body);
  if (elo.slide) {
    bool has_body = elo.slide->body && !xml::is_blank(*elo.slide->body);
    if (elo.slide->bullets.empty() && !has_body) {
      throw ValidationError("ELO " + elo.id + ": slide has neither bullets nor body");
    }
    if (has_body) parse_body(*elo.slide->body);
  }
}

}  // namespace hylos
