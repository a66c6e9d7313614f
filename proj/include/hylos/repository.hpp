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

// Content store: ELOs arranged in an ordered DAG. A child may be re-used under
// several parents; cycles are rejected when an edge is attached.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/elo.hpp"

namespace hylos {

// Opaque entries that ELOs reference by identifier (label text keyed by id).
struct Registries {
  std::map<std::string, std::string> glossary;
  std::map<std::string, std::string> bibliography;
  std::map<std::string, std::string> taxonomy;
  std::map<std::string, std::string> person;

  bool operator==(const Registries&) const = default;
};

struct TreeNode {
  std::string id;
  std::size_t depth = 0;
  // Child ordinals from the root (empty for the root itself).
  std::vector<std::size_t> path;
  std::vector<TreeNode> children;

  bool operator==(const TreeNode&) const = default;
};

using TreeView = TreeNode;

class Repository {
 public:
  // Upserts by id; the edge relation is left untouched.
  void put_elo(Elo elo);
  const Elo& get_elo(std::string_view id) const;
  bool contains(std::string_view id) const;
  // Removes the ELO and every edge touching it.
  void remove_elo(std::string_view id);

  void attach_child(std::string_view parent, std::string_view child, std::size_t position);
  void detach_child(std::string_view parent, std::string_view child);

  const std::vector<std::string>& children(std::string_view id) const;
  std::vector<std::string> parents(std::string_view id) const;
  bool is_ancestor(std::string_view ancestor, std::string_view id) const;
  // ELOs without parents, in id order.
  std::vector<std::string> roots() const;

  const std::map<std::string, Elo, std::less<>>& elos() const { return elos_; }
  const std::map<std::string, std::vector<std::string>, std::less<>>& edges() const {
    return edges_;
  }

  Registries& registries() { return registries_; }
  const Registries& registries() const { return registries_; }

  // Dangling edge endpoints, duplicate children, cycles, and references that
  // do not resolve against the registries.
  std::vector<std::string> integrity_violations() const;

  bool operator==(const Repository&) const = default;

 private:
  std::map<std::string, Elo, std::less<>> elos_;
  std::map<std::string, std::vector<std::string>, std::less<>> edges_;
  Registries registries_;
};

TreeView tree_view(const Repository& repo, std::string_view root,
                   std::optional<std::size_t> max_depth = std::nullopt);

// Preorder ids of a tree view.
std::vector<std::string> flatten(const TreeView& tree);

// The linear instructional access path: preorder over the DAG with re-used
// ELOs repeated at every position.
std::vector<std::string> linearize(const Repository& repo, std::string_view root);

// Keeps ids rated at or below `ceiling` on the difficulty scale; unrated ELOs
// are kept. Throws VocabError for an unknown ceiling, NotFound for unknown ids.
std::vector<std::string> filter_by_difficulty(const Repository& repo,
                                              const std::vector<std::string>& ids,
                                              std::string_view ceiling);

}  // namespace hylos
