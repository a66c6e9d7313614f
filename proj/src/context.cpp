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

#include "hylos/context.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hylos/errors.hpp"
#include "hylos/xml.hpp"

namespace hylos {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Element names are matched case-insensitively ("dc:Title" and "dc:title").
const xml::Node* child_named(const xml::Node& parent, std::string_view name) {
  for (const auto* child : parent.elements()) {
    if (lower(child->name) == name) return child;
  }
  return nullptr;
}

const xml::Node* find_description(const xml::Node& node) {
  if (node.name == "rdf:Description") return &node;
  for (const auto* child : node.elements()) {
    if (const auto* hit = find_description(*child)) return hit;
  }
  return nullptr;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && xml::is_space(s[b])) ++b;
  while (e > b && xml::is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

LangText lang_text(const xml::Node* node) {
  if (!node) return {};
  const std::string* lang = node->attribute("xml:lang");
  return {lang ? *lang : "", node->text_content()};
}

bool valid_context_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

std::optional<std::string> pick_title(const Graph& graph, const Term& node,
                                      std::string_view lang) {
  auto titles = graph.match({node, Term::iri(ns::dc("title")), std::nullopt});
  for (const auto& t : titles) {
    if (t.object.is_literal() && t.object.lang() == lang) return t.object.value();
  }
  for (const auto& t : titles) {
    if (t.object.is_literal()) return t.object.value();
  }
  return std::nullopt;
}

std::optional<std::string> single_iri(const Graph& graph, const Term& node,
                                      const std::string& predicate) {
  auto hits = graph.match({node, Term::iri(predicate), std::nullopt});
  if (hits.empty() || !hits.front().object.is_iri()) return std::nullopt;
  return hits.front().object.value();
}

}  // namespace

LinkContext make_context(std::string id, std::string creator, LangText title,
                         LangText description, std::string query_text) {
  if (!valid_context_id(id)) throw FormatError("invalid link context id '" + id + "'");
  LinkContext ctx;
  ctx.id = std::move(id);
  ctx.creator = std::move(creator);
  ctx.title = std::move(title);
  ctx.description = std::move(description);
  ctx.query_text = trim(query_text);
  try {
    ctx.query = rdql::expand(rdql::parse(ctx.query_text));
  } catch (const rdql::SyntaxError& e) {
    throw QueryError("link context " + ctx.id + ": " + e.what());
  } catch (const rdql::UnknownPrefix& e) {
    throw QueryError("link context " + ctx.id + ": " + e.what());
  }
  return ctx;
}

LinkContext parse_context(std::string_view document) {
  xml::Node root = xml::parse(document);
  if (root.name != "rdf:RDF") throw FormatError("link context root must be rdf:RDF");
  const xml::Node* desc = find_description(root);
  if (!desc) throw FormatError("link context lacks rdf:Description");
  const std::string* about = desc->attribute("rdf:about");
  if (!about || about->empty()) throw FormatError("rdf:Description lacks rdf:about");
  const xml::Node* query = child_named(*desc, "mir:link-context");
  if (!query) throw FormatError("link context " + *about + " lacks mir:link-context");

  const xml::Node* creator = child_named(*desc, "dc:creator");
  return make_context(*about, creator ? creator->text_content() : "",
                      lang_text(child_named(*desc, "dc:title")),
                      lang_text(child_named(*desc, "dc:description")), query->text_content());
}

std::string write_context(const LinkContext& context) {
  xml::Node root = xml::Node::element("rdf:RDF");
  root.set_attribute("xmlns:rdf", std::string(ns::kRdf));
  root.set_attribute("xmlns:mir", std::string(ns::kMir));
  root.set_attribute("xmlns:dc", std::string(ns::kDc));
  xml::Node& desc = root.add_element("rdf:Description");
  desc.set_attribute("rdf:about", context.id);
  desc.add_text_element("dc:Creator", context.creator);
  auto put_lang = [&](const char* name, const LangText& value) {
    xml::Node& node = desc.add_text_element(name, value.text);
    if (!value.lang.empty()) node.set_attribute("xml:lang", value.lang);
  };
  put_lang("dc:Title", context.title);
  put_lang("dc:Description", context.description);
  desc.add_element("mir:link-context").append(xml::Node::text_node(context.query_text, true));
  return xml::to_document(root);
}

void ContextRegistry::add(LinkContext context) {
  for (auto& existing : contexts_) {
    if (existing.id == context.id) {
      existing = std::move(context);
      return;
    }
  }
  contexts_.push_back(std::move(context));
}

void ContextRegistry::remove(std::string_view id) {
  auto it = std::find_if(contexts_.begin(), contexts_.end(),
                         [&](const LinkContext& c) { return c.id == id; });
  if (it == contexts_.end()) throw UnknownContext(std::string(id));
  contexts_.erase(it);
}

const LinkContext& ContextRegistry::get(std::string_view id) const {
  if (const auto* c = find(id)) return *c;
  throw UnknownContext(std::string(id));
}

const LinkContext* ContextRegistry::find(std::string_view id) const {
  for (const auto& c : contexts_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool ContextSet::contains(std::string_view id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

ContextSet activate(ContextSet set, const ContextRegistry& registry, std::string_view id) {
  if (!registry.contains(id)) throw UnknownContext(std::string(id));
  if (!set.contains(id)) set.ids_.emplace_back(id);
  return set;
}

ContextSet deactivate(ContextSet set, std::string_view id) {
  std::erase(set.ids_, std::string(id));
  return set;
}

std::vector<SelectedLink> select_links(const LinkContext& context, const Graph& graph,
                                       std::string_view lang) {
  const Term rdf_type = Term::iri(ns::rdf("type"));
  const Term statement = Term::iri(ns::rdf("Statement"));
  const Term mir_arc = Term::iri(ns::mir("arc"));

  std::set<Term> candidates;
  for (const auto& row : rdql::evaluate(context.query, graph).rows) {
    for (const auto& term : row) {
      if (term.is_iri() && graph.contains({term, rdf_type, statement})) candidates.insert(term);
    }
  }

  std::vector<SelectedLink> out;
  for (const auto& node : candidates) {
    auto subject = single_iri(graph, node, ns::rdf("subject"));
    auto predicate = single_iri(graph, node, ns::rdf("predicate"));
    auto object = single_iri(graph, node, ns::rdf("object"));
    if (!subject || !predicate || !object) continue;
    auto title = pick_title(graph, node, lang);
    if (!title) {
      // Arc nodes of multi-arc links carry no titles; use the owning link's.
      auto owners = graph.match({std::nullopt, mir_arc, node});
      if (!owners.empty()) title = pick_title(graph, owners.front().subject, lang);
    }
    out.push_back({node.value(), *subject, *predicate, *object, title, context.id});
  }
  return out;
}

std::vector<SelectedLink> links_for_document(std::string_view doc, const ContextSet& contexts,
                                             const ContextRegistry& registry,
                                             const Graph& graph, const LinkBase& base,
                                             const IriScheme& iris, std::string_view lang) {
  if (!graph.contains({Term::iri(iris.elo(doc)), Term::iri(ns::rdf("type")),
                       Term::iri(ns::mir("ELO"))})) {
    throw NotFound("ELO", std::string(doc));
  }
  std::vector<SelectedLink> out;
  for (const auto& id : contexts.ids()) {
    for (auto& sel : select_links(registry.get(id), graph, lang)) {
      auto source = iris.anchor_id(sel.object);
      const Anchor* anchor = source ? base.find_anchor(*source) : nullptr;
      if (anchor && anchor->resource == doc) out.push_back(std::move(sel));
    }
  }
  return out;
}

}  // namespace hylos
