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

#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "hylos/context.hpp"
#include "hylos/linkbase.hpp"
#include "hylos/vocabulary.hpp"
#include "hylos/xml.hpp"

namespace hylos::testing {

namespace {

const std::vector<std::string> kPlainWords = {"hamster", "pollen", "fever", "allergy",
                                              "spring", "summer", "nose",  "eyes",
                                              "dust",    "air",    "vet",   "course"};
const std::vector<std::string> kHostileWords = {"<b>",    "a&b",   "\"quoted\"", "it's",
                                                "]]>",    "x<y>z", "&amp;",      "Grüße",
                                                "naïve",  "日本",  "→",          "--",
                                                "<!--",   "'",     "\"",         "&#38;"};

std::string pick_word(Rng& rng, bool hostile) {
  if (hostile && coin(rng, 0.4)) return kHostileWords[pick(rng, kHostileWords.size())];
  return kPlainWords[pick(rng, kPlainWords.size())];
}

std::optional<std::string> maybe_vocab(Rng& rng, const char* field) {
  if (coin(rng, 0.3)) return std::nullopt;
  const auto& values = Vocabulary::lom().values(field);
  return values[pick(rng, values.size())];
}

std::string random_body(Rng& rng) {
  xml::Node root = xml::Node::element("paragraph");
  std::size_t paragraphs = 1 + pick(rng, 3);
  for (std::size_t i = 0; i < paragraphs; ++i) {
    xml::Node& p = root.add_element("p");
    p.append(xml::Node::text_node(random_text(rng, true)));
    if (coin(rng, 0.4)) {
      p.add_text_element(coin(rng) ? "em" : "strong", random_text(rng, true, 3));
      p.append(xml::Node::text_node(" " + random_text(rng, false, 3)));
    }
  }
  if (coin(rng, 0.3)) {
    xml::Node& section = root.add_element("section");
    section.add_text_element("title", random_text(rng, false, 2));
    section.add_text_element("para", random_text(rng, true));
  }
  return xml::serialize(root);
}

std::vector<std::string> random_list(Rng& rng, std::size_t max, bool hostile) {
  std::vector<std::string> out(pick(rng, max + 1));
  for (auto& item : out) item = random_text(rng, hostile, 3);
  return out;
}

std::string random_date(Rng& rng, int year) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, 1 + static_cast<int>(pick(rng, 12)),
                1 + static_cast<int>(pick(rng, 28)));
  return buf;
}

const std::vector<std::string> kArcroles = {"mir:BackgroundInfo", "mir:Example",
                                            "http://example.org/rel/seeAlso"};

const std::vector<std::string> kContextQueries = {
    "SELECT * WHERE (?link, <rdf:predicate>, <mir:BackgroundInfo>) USING rdf FOR "
    "<http://www.w3.org/1999/02/22-rdf-syntax-ns#>, mir FOR <http://www.rz.fhtw-berlin.de/MIR#>",
    "SELECT ?l WHERE (?l, <rdf:type>, <rdf:Statement>) USING rdf FOR "
    "<http://www.w3.org/1999/02/22-rdf-syntax-ns#>",
    "select ?l ?t where (?l, <http://purl.org/dc/elements/1.1/title>, ?t)"};

}  // namespace

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string random_text(Rng& rng, bool hostile, std::size_t max_words) {
  std::size_t words = 1 + pick(rng, max_words);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) out += ' ';
    out += pick_word(rng, hostile);
  }
  return out;
}

Dag random_dag(Rng& rng, std::size_t max_nodes) {
  Dag dag;
  std::size_t n = 1 + pick(rng, max_nodes);
  for (std::size_t i = 0; i < n; ++i) dag.ids.push_back("n" + std::to_string(i));
  std::shuffle(dag.ids.begin(), dag.ids.end(), rng);
  for (const auto& id : dag.ids) dag.repo.put_elo(make_elo(id, "Node " + id));

  double density = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, density)) candidates.emplace_back(i, j);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (auto [i, j] : candidates) {
    const auto& parent = dag.ids[i];
    std::size_t width = dag.repo.children(parent).size();
    dag.repo.attach_child(parent, dag.ids[j], pick(rng, width + 2));
    dag.edges.emplace_back(parent, dag.ids[j]);
  }
  return dag;
}

const std::vector<Term>& term_pool() {
  static const std::vector<Term> pool = {
      Term::iri("http://example.org/a"), Term::iri("http://example.org/b"),
      Term::iri("http://example.org/c"), Term::iri("http://example.org/p"),
      Term::iri("http://example.org/q"), Term::literal("x"),
      Term::literal("y"),                Term::literal("x", "en")};
  return pool;
}

Graph random_graph(Rng& rng, std::size_t max_triples) {
  const auto& pool = term_pool();
  std::size_t iris = 5;
  std::vector<Triple> triples;
  std::size_t n = pick(rng, max_triples + 1);
  for (std::size_t i = 0; i < n; ++i) {
    triples.push_back({pool[pick(rng, iris)], pool[3 + pick(rng, 2)], pool[pick(rng, pool.size())]});
  }
  return Graph(std::move(triples));
}

rdql::Query random_query(Rng& rng, const Graph& graph) {
  const auto& pool = term_pool();
  const std::vector<std::string> vars = {"x", "y", "z"};
  auto constant = [&](const Term& t) {
    return t.is_iri() ? rdql::QueryTerm::iri(t.value()) : rdql::QueryTerm::literal(t.value(), t.lang());
  };
  rdql::Query q;
  std::size_t patterns = 1 + pick(rng, 3);
  for (std::size_t i = 0; i < patterns; ++i) {
    // Seed half of the patterns from an existing triple so results are not
    // dominated by empty tables.
    std::optional<Triple> seed;
    if (!graph.empty() && coin(rng)) seed = graph.triples()[pick(rng, graph.size())];
    auto term = [&](const Term* from) {
      if (coin(rng, 0.55)) return rdql::QueryTerm::variable(vars[pick(rng, vars.size())]);
      return constant(from ? *from : pool[pick(rng, pool.size())]);
    };
    rdql::TriplePattern p{term(seed ? &seed->subject : nullptr),
                          term(seed ? &seed->predicate : nullptr),
                          term(seed ? &seed->object : nullptr)};
    q.patterns.push_back(p);
  }
  auto in_patterns = q.pattern_variables();
  if (!in_patterns.empty() && coin(rng)) {
    q.select_all = false;
    std::shuffle(in_patterns.begin(), in_patterns.end(), rng);
    in_patterns.resize(1 + pick(rng, in_patterns.size()));
    q.variables = in_patterns;
  }
  return q;
}

Elo random_elo(Rng& rng, const std::string& id) {
  Elo elo;
  elo.id = id;
  elo.paragraph.title = random_text(rng, true, 4);
  elo.paragraph.headwords = random_list(rng, 3, true);
  elo.paragraph.sectional_titles = random_list(rng, 3, true);
  elo.paragraph.body = random_body(rng);
  if (coin(rng, 0.3)) {
    SlideContent slide;
    slide.title = random_text(rng, true, 3);
    slide.bullets = random_list(rng, 3, true);
    if (slide.bullets.empty() || coin(rng, 0.3)) slide.body = random_body(rng);
    elo.slide = slide;
  }

  LomMetadata& m = elo.metadata;
  if (coin(rng, 0.8)) m.title = elo.paragraph.title;
  if (coin(rng, 0.7)) m.description = random_text(rng, true, 10);
  m.keywords = random_list(rng, 3, true);
  m.coverage = random_list(rng, 2, true);
  if (coin(rng, 0.7)) m.language = coin(rng) ? "en" : "de-AT";
  m.structure = maybe_vocab(rng, "structure");
  if (coin(rng, 0.7)) m.aggregation_level = 1 + static_cast<int>(pick(rng, 4));
  if (coin(rng, 0.6)) m.technical.format = "text/xml";
  if (coin(rng, 0.6)) m.technical.size = pick(rng, 100000);
  if (coin(rng, 0.6)) m.technical.location = "elos/" + id + ".xml";
  if (coin(rng, 0.6)) {
    m.technical.created = random_date(rng, 2003);
    m.technical.modified = random_date(rng, 2004);
  }
  if (coin(rng, 0.6)) m.lifecycle.author = random_text(rng, true, 2);
  m.lifecycle.document_status = maybe_vocab(rng, "documentStatus");
  m.educational.semantic_density = maybe_vocab(rng, "semanticDensity");
  m.educational.difficulty = maybe_vocab(rng, "difficulty");
  m.educational.context = maybe_vocab(rng, "context");
  m.educational.learning_resource_type = maybe_vocab(rng, "learningResourceType");
  m.educational.intended_end_user_role = maybe_vocab(rng, "intendedEndUserRole");
  return elo;
}

State random_state(Rng& rng) {
  State state;
  if (coin(rng, 0.3)) state.config.base = "http://example.org/kb#";
  if (coin(rng, 0.3)) state.config.language = "de";

  Dag dag = random_dag(rng, 8);
  for (const auto& id : dag.ids) {
    Elo elo = random_elo(rng, id);
    state.repo.put_elo(elo);
  }
  for (const auto& [parent, kids] : dag.repo.edges()) {
    for (std::size_t i = 0; i < kids.size(); ++i) state.repo.attach_child(parent, kids[i], i);
  }

  Registries& reg = state.repo.registries();
  for (int i = 0; i < static_cast<int>(pick(rng, 4)); ++i) {
    reg.glossary["g" + std::to_string(i)] = random_text(rng, true, 4);
  }
  for (int i = 0; i < static_cast<int>(pick(rng, 3)); ++i) {
    reg.person["p" + std::to_string(i)] = random_text(rng, false, 2);
  }
  for (const auto& id : dag.ids) {
    Elo elo = state.repo.get_elo(id);
    for (const auto& [gid, label] : reg.glossary) {
      if (coin(rng, 0.3)) elo.glossary_refs.push_back(gid);
    }
    for (const auto& [pid, label] : reg.person) {
      if (coin(rng, 0.3)) elo.person_refs.push_back(pid);
    }
    state.repo.put_elo(elo);
  }

  std::vector<std::string> anchors;
  std::size_t anchor_count = pick(rng, 7);
  for (std::size_t i = 0; i < anchor_count; ++i) {
    AnchorDraft draft;
    if (coin(rng, 0.7)) draft.id = "anc-" + std::to_string(i);
    if (coin(rng, 0.15)) {
      draft.resource = "http://example.org/ext/" + std::to_string(i);
    } else {
      const Elo& elo = state.repo.get_elo(dag.ids[pick(rng, dag.ids.size())]);
      draft.resource = elo.id;
      if (coin(rng, 0.6)) {
        xml::Node body = xml::parse(elo.paragraph.body);
        std::size_t len = utf8_length(body.first("p")->text_content());
        Selector s;
        s.steps = {{"paragraph", 1}, {"p", 1}};
        if (coin(rng) && len > 0) {
          std::size_t start = pick(rng, len);
          s.range = CharRange{start, 1 + pick(rng, len - start)};
        }
        draft.selector = s;
      }
    }
    if (coin(rng, 0.5)) draft.title = random_text(rng, true, 3);
    if (coin(rng, 0.3)) draft.label = random_text(rng, true, 2);
    anchors.push_back(state.base.create_anchor(state.repo, draft));
  }

  if (!anchors.empty()) {
    std::size_t link_count = pick(rng, 6);
    for (std::size_t i = 0; i < link_count; ++i) {
      LinkDraft draft;
      if (coin(rng, 0.7)) draft.id = "l" + std::to_string(i);
      std::size_t arcs = 1 + pick(rng, 2);
      for (std::size_t k = 0; k < arcs; ++k) {
        Arc arc{anchors[pick(rng, anchors.size())], anchors[pick(rng, anchors.size())],
                kArcroles[pick(rng, kArcroles.size())], std::nullopt};
        if (coin(rng, 0.3)) arc.title = random_text(rng, true, 2);
        draft.arcs.push_back(arc);
      }
      if (coin(rng, 0.7)) draft.titles.push_back({"en", random_text(rng, true, 3)});
      if (coin(rng, 0.3)) draft.titles.push_back({"de", random_text(rng, true, 3)});
      draft.creator = random_text(rng, true, 2);
      draft.created = random_date(rng, 2004);
      draft.path_space = coin(rng) ? "course1/unit" + std::to_string(pick(rng, 3)) : "";
      state.base.create_link(draft);
    }
  }

  std::size_t contexts = pick(rng, 3);
  for (std::size_t i = 0; i < contexts; ++i) {
    state.contexts.add(make_context("ctx-" + std::to_string(i), random_text(rng, true, 2),
                                    {"en", random_text(rng, true, 3)},
                                    {coin(rng) ? "en" : "", random_text(rng, true, 5)},
                                    kContextQueries[pick(rng, kContextQueries.size())]));
  }
  return state;
}

State random_single_arc_state(Rng& rng, std::size_t links) {
  State state;
  std::size_t elos = 2 + pick(rng, 6);
  for (std::size_t i = 0; i < elos; ++i) {
    state.repo.put_elo(random_elo(rng, "elo" + std::to_string(i)));
  }
  std::vector<std::string> anchors;
  std::size_t anchor_count = 2 + pick(rng, 12);
  for (std::size_t i = 0; i < anchor_count; ++i) {
    AnchorDraft draft;
    draft.resource = coin(rng, 0.1) ? "http://example.org/ext/" + std::to_string(i)
                                    : "elo" + std::to_string(pick(rng, elos));
    if (coin(rng)) draft.title = random_text(rng, false, 2);
    anchors.push_back(state.base.create_anchor(state.repo, draft));
  }
  for (std::size_t i = 0; i < links; ++i) {
    LinkDraft draft;
    draft.arcs.push_back({anchors[pick(rng, anchors.size())], anchors[pick(rng, anchors.size())],
                          kArcroles[pick(rng, kArcroles.size())], std::nullopt});
    if (coin(rng)) draft.titles.push_back({"en", random_text(rng, false, 3)});
    draft.creator = "gen";
    draft.created = random_date(rng, 2004);
    state.base.create_link(draft);
  }
  return state;
}

std::size_t utf8_length(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

}  // namespace hylos::testing
