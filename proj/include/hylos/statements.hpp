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

// Translation of ELO metadata, anchors and links into RDF statements.
//
// ELO metadata becomes (elo, predicate-for-field, value). Anchors inherit the
// statements of the ELO they sit on, re-subjected to the anchor, and add their
// own title and label. Links are reified: the link node is an rdf:Statement
// whose rdf:subject is the arc's target anchor, rdf:predicate the arcrole and
// rdf:object the source anchor. Links with several arcs get one statement node
// per arc, attached to the link with mir:arc.

#include <vector>

#include "hylos/elo.hpp"
#include "hylos/graph.hpp"
#include "hylos/linkbase.hpp"
#include "hylos/namespaces.hpp"
#include "hylos/repository.hpp"

namespace hylos {

std::vector<Triple> elo_statements(const Elo& elo, const IriScheme& iris = IriScheme());

// `owning_elo_triples` are the elo_statements of anchor.resource (empty for
// external resources).
std::vector<Triple> anchor_statements(const Anchor& anchor,
                                      const std::vector<Triple>& owning_elo_triples,
                                      const IriScheme& iris = IriScheme());

std::vector<Triple> link_statements(const Link& link, const IriScheme& iris = IriScheme());

Graph build_model(const Repository& repo, const LinkBase& base,
                  const IriScheme& iris = IriScheme());

}  // namespace hylos
