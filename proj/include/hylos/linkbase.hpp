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

// The link base: anchors and links stored as first-class entities outside the
// content they connect.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/repository.hpp"
#include "hylos/selector.hpp"
#include "hylos/xml.hpp"

namespace hylos {

struct Anchor {
  std::string id;
  // ELO id, or an absolute IRI for external resources.
  std::string resource;
  // Absent for generic anchors that denote the whole resource.
  std::optional<Selector> selector;
  std::optional<std::string> title;
  std::optional<std::string> label;

  bool is_external() const;
  bool operator==(const Anchor&) const = default;
};

struct Arc {
  std::string from;
  std::string to;
  std::string arcrole;  // absolute IRI
  std::optional<std::string> title;

  bool operator==(const Arc&) const = default;
};

struct LinkTitle {
  std::string lang;
  std::string text;

  bool operator==(const LinkTitle&) const = default;
};

struct Link {
  std::string id;
  std::vector<Arc> arcs;
  std::vector<LinkTitle> titles;
  std::string creator;
  std::string created;
  std::string path_space;

  // First title in `lang`, else the first title at all.
  std::optional<std::string> title_for(std::string_view lang) const;
  bool operator==(const Link&) const = default;
};

struct AnchorDraft {
  std::optional<std::string> id;  // minted as a<n> when absent
  std::string resource;
  std::optional<Selector> selector;
  std::optional<std::string> title;
  std::optional<std::string> label;
};

struct LinkDraft {
  std::optional<std::string> id;  // minted as link<n> when absent
  std::vector<Arc> arcs;          // arcroles may use rdf:, dc: or mir: names
  std::vector<LinkTitle> titles;
  std::string creator;
  std::string created;  // supplied clock reading, ISO-8601
  std::string path_space;
};

enum class Direction { From, To };

struct LinkQuery {
  std::optional<std::string> path_space_prefix;
  std::optional<std::string> touching_anchor;
  // Only meaningful together with touching_anchor.
  std::optional<Direction> direction;
};

class LinkBase {
 public:
  // Throws NotFound (resource), InvalidSelector, ValidationError (id).
  std::string create_anchor(const Repository& repo, AnchorDraft draft);
  // Throws NotFound (anchor), EmptyLink, InvalidArcrole, ValidationError (id).
  std::string create_link(LinkDraft draft);

  // Raw inserts used when loading a stored link base; integrity is checked
  // separately with integrity_violations().
  void insert_anchor(Anchor anchor);
  void insert_link(Link link);

  const Anchor& anchor(std::string_view id) const;
  const Link& link(std::string_view id) const;
  const Anchor* find_anchor(std::string_view id) const;
  const Link* find_link(std::string_view id) const;

  // Throws DependencyError when links use the anchor and cascade is off.
  void remove_anchor(std::string_view id, bool cascade = false);
  void remove_link(std::string_view id);
  std::vector<std::string> anchors_on(std::string_view resource) const;
  std::vector<std::string> links_using(std::string_view anchor_id) const;

  // Conjunctive filter ordered by (path_space, id).
  std::vector<Link> query_links(const LinkQuery& query = {}) const;

  const std::map<std::string, Anchor, std::less<>>& anchors() const { return anchors_; }
  const std::map<std::string, Link, std::less<>>& links() const { return links_; }
  bool empty() const { return anchors_.empty() && links_.empty(); }

  std::vector<std::string> integrity_violations(const Repository& repo) const;

  bool operator==(const LinkBase&) const = default;

 private:
  std::map<std::string, Anchor, std::less<>> anchors_;
  std::map<std::string, Link, std::less<>> links_;
};

bool is_valid_path_space(std::string_view space);
bool is_valid_link_id(std::string_view id);

// <linkbase> document format.
xml::Node linkbase_to_xml(const LinkBase& base);
std::string write_linkbase(const LinkBase& base);
// Throws FormatError / InvalidSelector for schema violations.
LinkBase linkbase_from_xml(const xml::Node& root);
LinkBase read_linkbase(std::string_view text);

}  // namespace hylos
