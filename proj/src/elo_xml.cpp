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

#include "hylos/elo_xml.hpp"

#include <charconv>

#include "hylos/errors.hpp"

namespace hylos {

namespace {

void put(xml::Node& parent, const char* name, const std::optional<std::string>& value) {
  if (value) parent.add_text_element(name, *value);
}

void put_list(xml::Node& parent, const char* name, const std::vector<std::string>& items) {
  if (items.empty()) return;
  xml::Node& list = parent.add_element(name);
  for (const auto& item : items) list.add_text_element("item", item);
}

// Embeds an XML fragment in canonical compact form.
void put_body(xml::Node& parent, const std::string& body) {
  xml::Node& holder = parent.add_element("body");
  holder.append(xml::Node::raw(xml::serialize(xml::parse(body))));
}

std::optional<std::string> get(const xml::Node& parent, std::string_view name) {
  const xml::Node* child = parent.first(name);
  if (!child) return std::nullopt;
  return child->text_content();
}

std::vector<std::string> get_list(const xml::Node& parent, std::string_view name) {
  std::vector<std::string> out;
  if (const xml::Node* list = parent.first(name)) {
    for (const auto* item : list->elements("item")) out.push_back(item->text_content());
  }
  return out;
}

std::string get_body(const xml::Node& holder) {
  auto roots = holder.elements();
  if (roots.size() != 1) {
    throw FormatError("<body> must contain exactly one root element");
  }
  return xml::serialize(*roots.front());
}

template <typename Int>
std::optional<Int> get_number(const xml::Node& parent, std::string_view name) {
  auto text = get(parent, name);
  if (!text) return std::nullopt;
  Int value{};
  auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
  if (ec != std::errc() || ptr != text->data() + text->size()) {
    throw FormatError("<" + std::string(name) + "> is not a number: '" + *text + "'");
  }
  return value;
}

const xml::Node& require(const xml::Node& parent, std::string_view name) {
  const xml::Node* child = parent.first(name);
  if (!child) {
    throw FormatError("<" + parent.name + "> lacks required <" + std::string(name) + ">");
  }
  return *child;
}

}  // namespace

xml::Node elo_to_xml(const Elo& elo) {
  xml::Node root = xml::Node::element("elo");
  root.set_attribute("id", elo.id);

  const LomMetadata& m = elo.metadata;
  xml::Node& meta = root.add_element("metadata");
  put(meta, "title", m.title);
  put(meta, "description", m.description);
  put_list(meta, "keywords", m.keywords);
  put_list(meta, "coverage", m.coverage);
  put(meta, "language", m.language);
  put(meta, "structure", m.structure);
  if (m.aggregation_level) {
    meta.add_text_element("aggregationLevel", std::to_string(*m.aggregation_level));
  }
  put(meta, "format", m.technical.format);
  if (m.technical.size) meta.add_text_element("size", std::to_string(*m.technical.size));
  put(meta, "location", m.technical.location);
  put(meta, "created", m.technical.created);
  put(meta, "modified", m.technical.modified);
  put(meta, "author", m.lifecycle.author);
  put(meta, "documentStatus", m.lifecycle.document_status);
  put(meta, "semanticDensity", m.educational.semantic_density);
  put(meta, "difficulty", m.educational.difficulty);
  put(meta, "context", m.educational.context);
  put(meta, "learningResourceType", m.educational.learning_resource_type);
  put(meta, "intendedEndUserRole", m.educational.intended_end_user_role);

  xml::Node& para = root.add_element("paragraph");
  para.add_text_element("title", elo.paragraph.title);
  put_list(para, "headwords", elo.paragraph.headwords);
  put_list(para, "sectionalTitles", elo.paragraph.sectional_titles);
  put_body(para, elo.paragraph.body);

  if (elo.slide) {
    xml::Node& slide = root.add_element("slide");
    slide.add_text_element("title", elo.slide->title);
    put_list(slide, "bullets", elo.slide->bullets);
    if (elo.slide->body) put_body(slide, *elo.slide->body);
  }

  xml::Node& refs = root.add_element("refs");
  auto put_refs = [&](const char* kind, const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
      refs.add_element("ref").set_attribute("kind", kind).set_attribute("id", id);
    }
  };
  put_refs("glossary", elo.glossary_refs);
  put_refs("bibliography", elo.bibliography_refs);
  put_refs("taxonomy", elo.taxonomy_refs);
  put_refs("person", elo.person_refs);
  return root;
}

std::string write_elo(const Elo& elo) { return xml::to_document(elo_to_xml(elo)); }

Elo elo_from_xml(const xml::Node& root) {
  if (root.name != "elo") throw FormatError("root element must be <elo>, found <" + root.name + ">");
  const std::string* id = root.attribute("id");
  if (!id) throw FormatError("<elo> lacks the id attribute");

  Elo elo;
  elo.id = *id;
  if (const xml::Node* meta = root.first("metadata")) {
    LomMetadata& m = elo.metadata;
    m.title = get(*meta, "title");
    m.description = get(*meta, "description");
    m.keywords = get_list(*meta, "keywords");
    m.coverage = get_list(*meta, "coverage");
    m.language = get(*meta, "language");
    m.structure = get(*meta, "structure");
    m.aggregation_level = get_number<int>(*meta, "aggregationLevel");
    m.technical.format = get(*meta, "format");
    m.technical.size = get_number<std::uint64_t>(*meta, "size");
    m.technical.location = get(*meta, "location");
    m.technical.created = get(*meta, "created");
    m.technical.modified = get(*meta, "modified");
    m.lifecycle.author = get(*meta, "author");
    m.lifecycle.document_status = get(*meta, "documentStatus");
    m.educational.semantic_density = get(*meta, "semanticDensity");
    m.educational.difficulty = get(*meta, "difficulty");
    m.educational.context = get(*meta, "context");
    m.educational.learning_resource_type = get(*meta, "learningResourceType");
    m.educational.intended_end_user_role = get(*meta, "intendedEndUserRole");
  }

  const xml::Node& para = require(root, "paragraph");
  elo.paragraph.title = get(para, "title").value_or("");
  elo.paragraph.headwords = get_list(para, "headwords");
  elo.paragraph.sectional_titles = get_list(para, "sectionalTitles");
  elo.paragraph.body = get_body(require(para, "body"));

  if (const xml::Node* slide = root.first("slide")) {
    SlideContent s;
    s.title = get(*slide, "title").value_or("");
    s.bullets = get_list(*slide, "bullets");
    if (const xml::Node* body = slide->first("body")) s.body = get_body(*body);
    elo.slide = std::move(s);
  }

  if (const xml::Node* refs = root.first("refs")) {
    for (const auto* ref : refs->elements("ref")) {
      const std::string* kind = ref->attribute("kind");
      const std::string* ref_id = ref->attribute("id");
      if (!kind || !ref_id) throw FormatError("<ref> needs kind and id attributes");
      if (*kind == "glossary") {
        elo.glossary_refs.push_back(*ref_id);
      } else if (*kind == "bibliography") {
        elo.bibliography_refs.push_back(*ref_id);
      } else if (*kind == "taxonomy") {
        elo.taxonomy_refs.push_back(*ref_id);
      } else if (*kind == "person") {
        elo.person_refs.push_back(*ref_id);
      } else {
        throw FormatError("unknown reference kind '" + *kind + "'");
      }
    }
  }
  return elo;
}

Elo read_elo(std::string_view text) { return elo_from_xml(xml::parse(text)); }

}  // namespace hylos
