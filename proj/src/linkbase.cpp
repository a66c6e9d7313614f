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

#include "hylos/linkbase.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <tuple>

#include "hylos/errors.hpp"
#include "hylos/namespaces.hpp"

namespace hylos {

namespace {

std::string mint(const auto& existing, std::string_view stem) {
  for (std::size_t n = existing.size() + 1;; ++n) {
    std::string candidate = std::string(stem) + std::to_string(n);
    if (existing.find(candidate) == existing.end()) return candidate;
  }
}

bool is_date(std::string_view text) {
  static const std::regex pattern(
      R"(\d{4}-\d{2}-\d{2}(T\d{2}:\d{2}(:\d{2}(\.\d+)?)?(Z|[+-]\d{2}:\d{2})?)?)");
  return std::regex_match(text.begin(), text.end(), pattern);
}

bool touches(const Link& link, std::string_view anchor, std::optional<Direction> direction) {
  return std::any_of(link.arcs.begin(), link.arcs.end(), [&](const Arc& arc) {
    bool from = arc.from == anchor;
    bool to = arc.to == anchor;
    if (!direction) return from || to;
    return *direction == Direction::From ? from : to;
  });
}

}  // namespace

bool Anchor::is_external() const { return looks_absolute(resource); }

std::optional<std::string> Link::title_for(std::string_view lang) const {
  for (const auto& t : titles) {
    if (t.lang == lang) return t.text;
  }
  if (!titles.empty()) return titles.front().text;
  return std::nullopt;
}

bool is_valid_path_space(std::string_view space) {
  static const std::regex pattern(R"(([A-Za-z0-9._-]+(/[A-Za-z0-9._-]+)*)?)");
  return std::regex_match(space.begin(), space.end(), pattern);
}

bool is_valid_link_id(std::string_view id) {
  return is_valid_slug(id) && !id.starts_with("elo-") && !id.starts_with("anchor-");
}

std::string LinkBase::create_anchor(const Repository& repo, AnchorDraft draft) {
  Anchor anchor;
  if (draft.id) {
    if (!is_valid_slug(*draft.id)) {
      throw ValidationError("invalid anchor identifier '" + *draft.id + "'");
    }
    if (anchors_.count(*draft.id)) {
      throw ValidationError("anchor " + *draft.id + " already exists");
    }
    anchor.id = *draft.id;
  } else {
    anchor.id = mint(anchors_, "a");
  }
  anchor.resource = std::move(draft.resource);
  anchor.selector = std::move(draft.selector);
  anchor.title = std::move(draft.title);
  anchor.label = std::move(draft.label);

  if (anchor.is_external()) {
    if (!is_absolute_iri(anchor.resource)) {
      throw ValidationError("invalid external resource IRI '" + anchor.resource + "'");
    }
    if (anchor.selector) {
      throw InvalidSelector("selectors are only supported on ELO content");
    }
  } else {
    const Elo& elo = repo.get_elo(anchor.resource);
    if (anchor.selector) {
      anchor.selector->validate();
      try {
        resolve_selector(*anchor.selector, elo.paragraph.body);
      } catch (const DanglingSelector& e) {
        throw InvalidSelector(e.what());
      } catch (const RangeError& e) {
        throw InvalidSelector(e.what());
      }
    }
  }
  std::string id = anchor.id;
  anchors_.emplace(id, std::move(anchor));
  return id;
}

std::string LinkBase::create_link(LinkDraft draft) {
  if (draft.arcs.empty()) throw EmptyLink();
  Link link;
  if (draft.id) {
    if (!is_valid_link_id(*draft.id)) {
      throw ValidationError("invalid link identifier '" + *draft.id +
                            "' (slug not starting with elo- or anchor-)");
    }
    if (links_.count(*draft.id)) throw ValidationError("link " + *draft.id + " already exists");
    link.id = *draft.id;
  } else {
    link.id = mint(links_, "link");
  }
  for (auto& arc : draft.arcs) {
    if (!anchors_.count(arc.from)) throw NotFound("anchor", arc.from);
    if (!anchors_.count(arc.to)) throw NotFound("anchor", arc.to);
    auto expanded = expand_known_prefix(arc.arcrole);
    if (!expanded) throw InvalidArcrole("arcrole is not an absolute IRI: '" + arc.arcrole + "'");
    arc.arcrole = std::move(*expanded);
  }
  if (!is_valid_path_space(draft.path_space)) {
    throw ValidationError("invalid path space '" + draft.path_space + "'");
  }
  if (!is_date(draft.created)) {
    throw ValidationError("created is not an ISO-8601 date: '" + draft.created + "'");
  }
  link.arcs = std::move(draft.arcs);
  link.titles = std::move(draft.titles);
  link.creator = std::move(draft.creator);
  link.created = std::move(draft.created);
  link.path_space = std::move(draft.path_space);
  std::string id = link.id;
  links_.emplace(id, std::move(link));
  return id;
}

void LinkBase::insert_anchor(Anchor anchor) {
  std::string id = anchor.id;
  anchors_.insert_or_assign(std::move(id), std::move(anchor));
}

void LinkBase::insert_link(Link link) {
  std::string id = link.id;
  links_.insert_or_assign(std::move(id), std::move(link));
}

const Anchor& LinkBase::anchor(std::string_view id) const {
  if (const Anchor* a = find_anchor(id)) return *a;
  throw NotFound("anchor", std::string(id));
}

const Link& LinkBase::link(std::string_view id) const {
  if (const Link* l = find_link(id)) return *l;
  throw NotFound("link", std::string(id));
}

const Anchor* LinkBase::find_anchor(std::string_view id) const {
  auto it = anchors_.find(id);
  return it == anchors_.end() ? nullptr : &it->second;
}

const Link* LinkBase::find_link(std::string_view id) const {
  auto it = links_.find(id);
  return it == links_.end() ? nullptr : &it->second;
}

void LinkBase::remove_anchor(std::string_view id, bool cascade) {
  auto it = anchors_.find(id);
  if (it == anchors_.end()) throw NotFound("anchor", std::string(id));
  auto users = links_using(id);
  if (!users.empty() && !cascade) {
    std::string names;
    for (const auto& u : users) names += (names.empty() ? "" : ", ") + u;
    throw DependencyError("anchor " + std::string(id) + " is used by links: " + names);
  }
  for (const auto& u : users) links_.erase(u);
  anchors_.erase(it);
}

void LinkBase::remove_link(std::string_view id) {
  auto it = links_.find(id);
  if (it == links_.end()) throw NotFound("link", std::string(id));
  links_.erase(it);
}

std::vector<std::string> LinkBase::anchors_on(std::string_view resource) const {
  std::vector<std::string> out;
  for (const auto& [id, a] : anchors_) {
    if (a.resource == resource) out.push_back(id);
  }
  return out;
}

std::vector<std::string> LinkBase::links_using(std::string_view anchor_id) const {
  std::vector<std::string> out;
  for (const auto& [id, l] : links_) {
    if (touches(l, anchor_id, std::nullopt)) out.push_back(id);
  }
  return out;
}

std::vector<Link> LinkBase::query_links(const LinkQuery& query) const {
  std::vector<Link> out;
  for (const auto& [id, l] : links_) {
    if (query.path_space_prefix && !l.path_space.starts_with(*query.path_space_prefix)) continue;
    if (query.touching_anchor && !touches(l, *query.touching_anchor, query.direction)) continue;
    out.push_back(l);
  }
  std::stable_sort(out.begin(), out.end(), [](const Link& a, const Link& b) {
    return std::tie(a.path_space, a.id) < std::tie(b.path_space, b.id);
  });
  return out;
}

std::vector<std::string> LinkBase::integrity_violations(const Repository& repo) const {
  std::vector<std::string> out;
  for (const auto& [id, a] : anchors_) {
    if (a.is_external()) {
      if (!is_absolute_iri(a.resource)) {
        out.push_back("anchor " + id + " has an invalid resource IRI " + a.resource);
      }
    } else if (!repo.contains(a.resource)) {
      out.push_back("anchor " + id + " references missing ELO " + a.resource);
    }
  }
  for (const auto& [id, l] : links_) {
    if (l.arcs.empty()) out.push_back("link " + id + " has no arcs");
    for (const auto& arc : l.arcs) {
      if (!anchors_.count(arc.from)) {
        out.push_back("link " + id + " references missing anchor " + arc.from);
      }
      if (!anchors_.count(arc.to)) {
        out.push_back("link " + id + " references missing anchor " + arc.to);
      }
      if (!is_absolute_iri(arc.arcrole)) {
        out.push_back("link " + id + " has a non-absolute arcrole " + arc.arcrole);
      }
    }
  }
  return out;
}

xml::Node linkbase_to_xml(const LinkBase& base) {
  xml::Node root = xml::Node::element("linkbase");
  for (const auto& [id, a] : base.anchors()) {
    xml::Node& node = root.add_element("anchor");
    node.set_attribute("id", a.id).set_attribute("resource", a.resource);
    if (a.selector) node.set_attribute("selector", a.selector->to_string());
    if (a.title) node.set_attribute("title", *a.title);
    if (a.label) node.set_attribute("label", *a.label);
  }
  for (const auto& [id, l] : base.links()) {
    xml::Node& node = root.add_element("link");
    node.set_attribute("id", l.id)
        .set_attribute("space", l.path_space)
        .set_attribute("creator", l.creator)
        .set_attribute("created", l.created);
    for (const auto& arc : l.arcs) {
      xml::Node& a = node.add_element("arc");
      a.set_attribute("from", arc.from).set_attribute("to", arc.to).set_attribute("arcrole",
                                                                                  arc.arcrole);
      if (arc.title) a.set_attribute("title", *arc.title);
    }
    for (const auto& t : l.titles) node.add_text_element("title", t.text).set_attribute("lang", t.lang);
  }
  return root;
}

std::string write_linkbase(const LinkBase& base) { return xml::to_document(linkbase_to_xml(base)); }

LinkBase linkbase_from_xml(const xml::Node& root) {
  if (root.name != "linkbase") throw FormatError("root element must be <linkbase>");
  auto need = [](const xml::Node& node, std::string_view key) -> std::string {
    const std::string* value = node.attribute(key);
    if (!value) {
      throw FormatError("<" + node.name + "> lacks the " + std::string(key) + " attribute");
    }
    return *value;
  };
  auto maybe = [](const xml::Node& node, std::string_view key) -> std::optional<std::string> {
    const std::string* value = node.attribute(key);
    return value ? std::optional<std::string>(*value) : std::nullopt;
  };

  LinkBase base;
  for (const auto* node : root.elements("anchor")) {
    Anchor a;
    a.id = need(*node, "id");
    a.resource = need(*node, "resource");
    if (auto sel = maybe(*node, "selector")) a.selector = Selector::parse(*sel);
    a.title = maybe(*node, "title");
    a.label = maybe(*node, "label");
    if (base.find_anchor(a.id)) throw FormatError("duplicate anchor id " + a.id);
    base.insert_anchor(std::move(a));
  }
  for (const auto* node : root.elements("link")) {
    Link l;
    l.id = need(*node, "id");
    l.path_space = maybe(*node, "space").value_or("");
    l.creator = maybe(*node, "creator").value_or("");
    l.created = maybe(*node, "created").value_or("");
    for (const auto* arc : node->elements("arc")) {
      l.arcs.push_back({need(*arc, "from"), need(*arc, "to"), need(*arc, "arcrole"),
                        maybe(*arc, "title")});
    }
    for (const auto* title : node->elements("title")) {
      l.titles.push_back({maybe(*title, "lang").value_or(""), title->text_content()});
    }
    if (base.find_link(l.id)) throw FormatError("duplicate link id " + l.id);
    base.insert_link(std::move(l));
  }
  return base;
}

LinkBase read_linkbase(std::string_view text) { return linkbase_from_xml(xml::parse(text)); }

}  // namespace hylos
