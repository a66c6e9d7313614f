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

// eLearning Object information model: content entities plus a LOM metadata
// subset, and the metadata acquisition rules of the authoring workflow.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hylos {

struct ParagraphContent {
  std::string title;
  std::vector<std::string> headwords;
  std::vector<std::string> sectional_titles;
  // Well-formed XML with a single root element, conventionally <paragraph>.
  std::string body;

  bool operator==(const ParagraphContent&) const = default;
};

struct SlideContent {
  std::string title;
  std::vector<std::string> bullets;
  std::optional<std::string> body;

  bool operator==(const SlideContent&) const = default;
};

struct TechnicalMetadata {
  std::optional<std::string> format;
  std::optional<std::uint64_t> size;
  std::optional<std::string> location;
  std::optional<std::string> created;
  std::optional<std::string> modified;

  bool operator==(const TechnicalMetadata&) const = default;
};

struct LifecycleMetadata {
  std::optional<std::string> author;
  std::optional<std::string> document_status;

  bool operator==(const LifecycleMetadata&) const = default;
};

struct EducationalMetadata {
  std::optional<std::string> semantic_density;
  std::optional<std::string> difficulty;
  std::optional<std::string> context;
  std::optional<std::string> learning_resource_type;
  std::optional<std::string> intended_end_user_role;

  bool operator==(const EducationalMetadata&) const = default;
};

// Unset fields are absent (nullopt or empty list), never empty strings.
struct LomMetadata {
  std::optional<std::string> title;
  std::optional<std::string> description;
  std::vector<std::string> keywords;
  std::vector<std::string> coverage;
  std::optional<std::string> language;
  std::optional<std::string> structure;
  std::optional<int> aggregation_level;
  TechnicalMetadata technical;
  LifecycleMetadata lifecycle;
  EducationalMetadata educational;

  bool operator==(const LomMetadata&) const = default;
};

struct Elo {
  std::string id;
  LomMetadata metadata;
  ParagraphContent paragraph;
  std::optional<SlideContent> slide;
  std::vector<std::string> glossary_refs;
  std::vector<std::string> bibliography_refs;
  std::vector<std::string> taxonomy_refs;
  std::vector<std::string> person_refs;

  bool operator==(const Elo&) const = default;
};

// A partial record of the seven fields that must be filled in by hand before
// publication. Absent members are left untouched by set_obligatory_fields.
struct ObligatoryFields {
  std::optional<std::vector<std::string>> keywords;
  std::optional<std::string> semantic_density;
  std::optional<std::string> difficulty;
  std::optional<std::string> context;
  std::optional<std::string> learning_resource_type;
  std::optional<std::string> structure;
  std::optional<std::string> document_status;

  bool operator==(const ObligatoryFields&) const = default;
};

struct AuthorPresets {
  std::optional<std::string> language;
  std::optional<std::string> intended_end_user_role;
  // Values remembered from the author's previous editing session.
  ObligatoryFields last_used;
};

// Facts the storage layer knows about a stored object.
struct TechnicalFacts {
  std::string format;
  std::uint64_t size = 0;
  std::string location;
  std::string created;
  std::string modified;
  int aggregation_level = 1;
};

// Missing or invalid field names; empty means publishable.
using ValidationReport = std::vector<std::string>;

inline constexpr std::size_t kDescriptionLimit = 500;

// LOM field names of the seven obligatory fields, in authoring-sheet order.
const std::vector<std::string>& obligatory_field_names();

LomMetadata autogen_metadata(const ParagraphContent& paragraph, const TechnicalFacts& tech,
                             std::string_view author, const AuthorPresets& presets);

ValidationReport validate_for_publication(const Elo& elo);

SlideContent derive_standard_slide(const ParagraphContent& paragraph);

LomMetadata set_obligatory_fields(LomMetadata meta, const ObligatoryFields& fields);

// Collapses whitespace runs to single spaces, trims, and cuts at the last word
// boundary that keeps at most `limit` characters (code points).
std::string reformat_description(std::string_view text,
                                 std::size_t limit = kDescriptionLimit);

// Text of the first <p>/<para> element of a body, or of the whole body when it
// has no such element. Throws MalformedBody.
std::string first_text_block(std::string_view body);

bool is_valid_slug(std::string_view id);
bool is_valid_language_tag(std::string_view tag);

// Structural checks required before storing: slug id, non-empty title,
// well-formed bodies, non-empty slide. Throws ValidationError/MalformedBody.
void validate_structure(const Elo& elo);

}  // namespace hylos
