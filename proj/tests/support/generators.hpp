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

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hylos/graph.hpp"
#include "hylos/persistence.hpp"
#include "hylos/rdql.hpp"
#include "hylos/repository.hpp"

namespace hylos::testing {

using Rng = std::mt19937;

std::size_t pick(Rng& rng, std::size_t n);
bool coin(Rng& rng, double p = 0.5);

// Non-empty text; with `hostile` it mixes in markup characters, quotes and
// non-ASCII letters.
std::string random_text(Rng& rng, bool hostile, std::size_t max_words = 6);

struct Dag {
  Repository repo;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Edges only run forward in a random node order, so the result is acyclic by
// construction. Children are attached at random positions.
Dag random_dag(Rng& rng, std::size_t max_nodes);

// Terms drawn from a small fixed pool so joins and repeats are frequent.
const std::vector<Term>& term_pool();
Graph random_graph(Rng& rng, std::size_t max_triples);
// Expanded query over the pool with at most 3 patterns and 3 variables.
rdql::Query random_query(Rng& rng, const Graph& graph);

// A structurally valid ELO whose body is in canonical form.
Elo random_elo(Rng& rng, const std::string& id);

// A consistent state: ELOs, structure, registries, anchors, links, contexts.
State random_state(Rng& rng);

// ELOs with anchors and `links` single-arc links between random anchors.
State random_single_arc_state(Rng& rng, std::size_t links);

std::size_t utf8_length(std::string_view text);

}  // namespace hylos::testing
