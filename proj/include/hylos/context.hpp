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

// Link contexts: authored, query-defined selection schemes over the link
// layer's RDF model. A context never creates links or anchors; it picks the
// reified link statements its query binds.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/graph.hpp"
#include "hylos/linkbase.hpp"
#include "hylos/namespaces.hpp"
#include "hylos/rdql.hpp"

namespace hylos {

struct LangText {
  std::string lang;
  std::string text;

  bool operator==(const LangText&) const = default;
};

struct LinkContext {
  std::string id;  // rdf:about
  std::string creator;
  LangText title;
  LangText description;
  std::string query_text;
  rdql::Query query;  // parsed and expanded at registration

  bool operator==(const LinkContext&) const = default;
};

// Reads the RDF/XML context document:
//   rdf:RDF / rdf:Description[@rdf:about] with dc:Creator, dc:Title,
//   dc:Description and the query as the text of mir:link-context.
// Throws FormatError or QueryError.
LinkContext parse_context(std::string_view document);
// Builds a context from parts, validating the query. Throws QueryError.
LinkContext make_context(std::string id, std::string creator, LangText title,
                         LangText description, std::string query_text);
std::string write_context(const LinkContext& context);

class ContextRegistry {
 public:
  // Replaces an existing context with the same id, keeping its position.
  void add(LinkContext context);
  void remove(std::string_view id);
  const LinkContext& get(std::string_view id) const;  // throws UnknownContext
  const LinkContext* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }
  // Registration order.
  const std::vector<LinkContext>& all() const { return contexts_; }

  bool operator==(const ContextRegistry&) const = default;

 private:
  std::vector<LinkContext> contexts_;
};

// Ordered, duplicate-free set of active context ids.
class ContextSet {
 public:
  ContextSet() = default;
  const std::vector<std::string>& ids() const { return ids_; }
  bool contains(std::string_view id) const;
  bool empty() const { return ids_.empty(); }

  bool operator==(const ContextSet&) const = default;

 private:
  friend ContextSet activate(ContextSet, const ContextRegistry&, std::string_view);
  friend ContextSet deactivate(ContextSet, std::string_view);
  std::vector<std::string> ids_;
};

// Idempotent; throws UnknownContext.
ContextSet activate(ContextSet set, const ContextRegistry& registry, std::string_view id);
// No-op for ids that are not members.
ContextSet deactivate(ContextSet set, std::string_view id);

struct SelectedLink {
  std::string link;       // link IRI or arc node IRI
  std::string subject;    // target anchor IRI
  std::string predicate;  // arcrole
  std::string object;     // source anchor IRI
  std::optional<std::string> title;
  std::string via_context;

  bool operator==(const SelectedLink&) const = default;
};

// Every bound IRI typed rdf:Statement in the graph counts as a selected link;
// other bindings are ignored. Ordered by link IRI.
std::vector<SelectedLink> select_links(const LinkContext& context, const Graph& graph,
                                       std::string_view lang = "en");

// Links of the active contexts whose source anchor sits on `doc`. Ordered by
// context activation order, then link IRI. Throws NotFound when the graph has
// no such ELO.
std::vector<SelectedLink> links_for_document(std::string_view doc, const ContextSet& contexts,
                                             const ContextRegistry& registry,
                                             const Graph& graph, const LinkBase& base,
                                             const IriScheme& iris = IriScheme(),
                                             std::string_view lang = "en");

}  // namespace hylos
