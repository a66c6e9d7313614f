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

#include "hylos/statements.hpp"

namespace hylos {

namespace {

struct Emitter {
  Term subject;
  std::vector<Triple>& out;

  void add(const std::string& predicate, Term object) {
    out.push_back({subject, Term::iri(predicate), std::move(object)});
  }
  void text(const std::string& predicate, const std::optional<std::string>& value) {
    if (value && !value->empty()) add(predicate, Term::literal(*value));
  }
  void texts(const std::string& predicate, const std::vector<std::string>& values) {
    for (const auto& v : values) {
      if (!v.empty()) add(predicate, Term::literal(v));
    }
  }
};

}  // namespace

std::vector<Triple> elo_statements(const Elo& elo, const IriScheme& iris) {
  std::vector<Triple> out;
  Emitter e{Term::iri(iris.elo(elo.id)), out};
  const LomMetadata& m = elo.metadata;

  e.add(ns::rdf("type"), Term::iri(ns::mir("ELO")));
  e.text(ns::dc("title"), m.title);
  e.text(ns::dc("description"), m.description);
  e.texts(ns::dc("subject"), m.keywords);
  e.texts(ns::dc("coverage"), m.coverage);
  e.text(ns::dc("language"), m.language);
  e.text(ns::dc("format"), m.technical.format);
  e.text(ns::dc("creator"), m.lifecycle.author);
  e.text(ns::mir("structure"), m.structure);
  if (m.aggregation_level) {
    e.add(ns::mir("aggregationLevel"), Term::literal(std::to_string(*m.aggregation_level)));
  }
  if (m.technical.size) e.add(ns::mir("size"), Term::literal(std::to_string(*m.technical.size)));
  e.text(ns::mir("location"), m.technical.location);
  e.text(ns::mir("created"), m.technical.created);
  e.text(ns::mir("modified"), m.technical.modified);
  e.text(ns::mir("documentStatus"), m.lifecycle.document_status);
  e.text(ns::mir("semanticDensity"), m.educational.semantic_density);
  e.text(ns::mir("difficulty"), m.educational.difficulty);
  e.text(ns::mir("context"), m.educational.context);
  e.text(ns::mir("learningResourceType"), m.educational.learning_resource_type);
  e.text(ns::mir("intendedEndUserRole"), m.educational.intended_end_user_role);
  return out;
}

std::vector<Triple> anchor_statements(const Anchor& anchor,
                                      const std::vector<Triple>& owning_elo_triples,
                                      const IriScheme& iris) {
  std::vector<Triple> out;
  Emitter e{Term::iri(iris.anchor(anchor.id)), out};
  const Term rdf_type = Term::iri(ns::rdf("type"));

  if (!anchor.is_external()) {
    // Inherited descriptors; the ELO's own typing is not passed on.
    for (const auto& t : owning_elo_triples) {
      if (t.predicate == rdf_type) continue;
      e.add(t.predicate.value(), t.object);
    }
    e.add(ns::mir("inheritedFrom"), Term::iri(iris.elo(anchor.resource)));
  }
  e.text(ns::dc("title"), anchor.title);
  e.text(ns::mir("label"), anchor.label);
  e.add(ns::mir("anchorOf"), Term::iri(iris.resource(anchor.resource)));
  return out;
}

std::vector<Triple> link_statements(const Link& link, const IriScheme& iris) {
  std::vector<Triple> out;
  const Term link_node = Term::iri(iris.link(link.id));

  auto reify = [&](const Term& node, const Arc& arc) {
    Emitter e{node, out};
    e.add(ns::rdf("type"), Term::iri(ns::rdf("Statement")));
    e.add(ns::rdf("subject"), Term::iri(iris.anchor(arc.to)));
    e.add(ns::rdf("predicate"), Term::iri(arc.arcrole));
    e.add(ns::rdf("object"), Term::iri(iris.anchor(arc.from)));
    e.text(ns::mir("arcTitle"), arc.title);
  };

  if (link.arcs.size() == 1) {
    reify(link_node, link.arcs.front());
  } else {
    for (std::size_t k = 0; k < link.arcs.size(); ++k) {
      Term arc_node = Term::iri(iris.arc(link.id, k + 1));
      reify(arc_node, link.arcs[k]);
      out.push_back({link_node, Term::iri(ns::mir("arc")), arc_node});
    }
  }

  Emitter e{link_node, out};
  for (const auto& title : link.titles) {
    if (!title.text.empty()) e.add(ns::dc("title"), Term::literal(title.text, title.lang));
  }
  e.text(ns::dc("creator"), link.creator);
  e.text(ns::dc("date"), link.created);
  e.text(ns::mir("pathSpace"), link.path_space);
  return out;
}

Graph build_model(const Repository& repo, const LinkBase& base, const IriScheme& iris) {
  std::vector<Triple> all;
  for (const auto& [id, elo] : repo.elos()) {
    auto triples = elo_statements(elo, iris);
    all.insert(all.end(), triples.begin(), triples.end());
  }
  for (const auto& [id, anchor] : base.anchors()) {
    std::vector<Triple> owning;
    if (!anchor.is_external() && repo.contains(anchor.resource)) {
      owning = elo_statements(repo.get_elo(anchor.resource), iris);
    }
    auto triples = anchor_statements(anchor, owning, iris);
    all.insert(all.end(), triples.begin(), triples.end());
  }
  for (const auto& [id, link] : base.links()) {
    auto triples = link_statements(link, iris);
    all.insert(all.end(), triples.begin(), triples.end());
  }
  return Graph(std::move(all));
}

}  // namespace hylos
