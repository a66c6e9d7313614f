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

#include "hylos/repository.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hylos/errors.hpp"
#include "hylos/vocabulary.hpp"

namespace hylos {

void Repository::put_elo(Elo elo) {
  validate_structure(elo);
  auto it = elos_.find(elo.id);
  if (it != elos_.end()) {
    it->second = std::move(elo);
  } else {
    std::string id = elo.id;
    elos_.emplace(std::move(id), std::move(elo));
  }
}

const Elo& Repository::get_elo(std::string_view id) const {
  auto it = elos_.find(id);
  if (it == elos_.end()) throw NotFound("ELO", std::string(id));
  return it->second;
}

bool Repository::contains(std::string_view id) const { return elos_.find(id) != elos_.end(); }

void Repository::remove_elo(std::string_view id) {
  auto it = elos_.find(id);
  if (it == elos_.end()) throw NotFound("ELO", std::string(id));
  elos_.erase(it);
  if (auto e = edges_.find(id); e != edges_.end()) edges_.erase(e);
  for (auto& [parent, kids] : edges_) {
    kids.erase(std::remove(kids.begin(), kids.end(), id), kids.end());
  }
  std::erase_if(edges_, [](const auto& entry) { return entry.second.empty(); });
}

void Repository::attach_child(std::string_view parent, std::string_view child,
                              std::size_t position) {
  if (!contains(parent)) throw NotFound("ELO", std::string(parent));
  if (!contains(child)) throw NotFound("ELO", std::string(child));
  if (parent == child) {
    throw CycleError("cannot attach " + std::string(child) + " under itself");
  }
  if (is_ancestor(child, parent)) {
    throw CycleError("attaching " + std::string(child) + " under " + std::string(parent) +
                     " would create a cycle");
  }
  auto& kids = edges_[std::string(parent)];
  if (std::find(kids.begin(), kids.end(), child) != kids.end()) {
    throw DuplicateChild(std::string(child) + " is already a child of " + std::string(parent));
  }
  position = std::min(position, kids.size());
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(position), std::string(child));
}

void Repository::detach_child(std::string_view parent, std::string_view child) {
  auto it = edges_.find(parent);
  if (it == edges_.end()) throw NotFound("edge", std::string(parent) + "->" + std::string(child));
  auto& kids = it->second;
  auto pos = std::find(kids.begin(), kids.end(), child);
  if (pos == kids.end()) {
    throw NotFound("edge", std::string(parent) + "->" + std::string(child));
  }
  kids.erase(pos);
  if (kids.empty()) edges_.erase(it);
}

const std::vector<std::string>& Repository::children(std::string_view id) const {
  static const std::vector<std::string> none;
  auto it = edges_.find(id);
  return it == edges_.end() ? none : it->second;
}

std::vector<std::string> Repository::parents(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& [parent, kids] : edges_) {
    if (std::find(kids.begin(), kids.end(), id) != kids.end()) out.push_back(parent);
  }
  return out;
}

bool Repository::is_ancestor(std::string_view ancestor, std::string_view id) const {
  // Walk downwards from `ancestor`; the relation is acyclic so this ends.
  std::set<std::string, std::less<>> seen;
  std::vector<std::string> stack = {std::string(ancestor)};
  while (!stack.empty()) {
    std::string current = std::move(stack.back());
    stack.pop_back();
    for (const auto& kid : children(current)) {
      if (kid == id) return true;
      if (seen.insert(kid).second) stack.push_back(kid);
    }
  }
  return false;
}

std::vector<std::string> Repository::roots() const {
  std::set<std::string, std::less<>> has_parent;
  for (const auto& [parent, kids] : edges_) has_parent.insert(kids.begin(), kids.end());
  std::vector<std::string> out;
  for (const auto& [id, elo] : elos_) {
    if (!has_parent.count(id)) out.push_back(id);
  }
  return out;
}

std::vector<std::string> Repository::integrity_violations() const {
  std::vector<std::string> out;
  for (const auto& [parent, kids] : edges_) {
    if (!contains(parent)) out.push_back("edge parent " + parent + " does not exist");
    std::set<std::string> unique;
    for (const auto& kid : kids) {
      if (!contains(kid)) out.push_back("edge " + parent + "->" + kid + " targets a missing ELO");
      if (!unique.insert(kid).second) out.push_back("duplicate child " + kid + " under " + parent);
    }
  }
  // Colour-marking DFS for cycles.
  std::map<std::string, int, std::less<>> colour;
  std::function<bool(const std::string&)> visit = [&](const std::string& id) {
    colour[id] = 1;
    for (const auto& kid : children(id)) {
      int c = colour[kid];
      if (c == 1) return true;
      if (c == 0 && visit(kid)) return true;
    }
    colour[id] = 2;
    return false;
  };
  for (const auto& [parent, kids] : edges_) {
    if (colour[parent] == 0 && visit(parent)) {
      out.push_back("structure contains a cycle through " + parent);
      break;
    }
  }

  auto check_refs = [&](const Elo& elo, const char* kind, const std::vector<std::string>& refs,
                        const std::map<std::string, std::string>& registry) {
    for (const auto& ref : refs) {
      if (!registry.count(ref)) {
        out.push_back("ELO " + elo.id + " references missing " + kind + " entry " + ref);
      }
    }
  };
  for (const auto& [id, elo] : elos_) {
    check_refs(elo, "glossary", elo.glossary_refs, registries_.glossary);
    check_refs(elo, "bibliography", elo.bibliography_refs, registries_.bibliography);
    check_refs(elo, "taxonomy", elo.taxonomy_refs, registries_.taxonomy);
    check_refs(elo, "person", elo.person_refs, registries_.person);
  }
  return out;
}

namespace {

void expand(const Repository& repo, TreeNode& node, std::optional<std::size_t> max_depth) {
  if (max_depth && node.depth >= *max_depth) return;
  const auto& kids = repo.children(node.id);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    TreeNode child;
    child.id = kids[i];
    child.depth = node.depth + 1;
    child.path = node.path;
    child.path.push_back(i);
    expand(repo, child, max_depth);
    node.children.push_back(std::move(child));
  }
}

void flatten_into(const TreeNode& node, std::vector<std::string>& out) {
  out.push_back(node.id);
  for (const auto& child : node.children) flatten_into(child, out);
}

}  // namespace

TreeView tree_view(const Repository& repo, std::string_view root,
                   std::optional<std::size_t> max_depth) {
  if (!repo.contains(root)) throw NotFound("ELO", std::string(root));
  TreeNode tree;
  tree.id = std::string(root);
  expand(repo, tree, max_depth);
  return tree;
}

std::vector<std::string> flatten(const TreeView& tree) {
  std::vector<std::string> out;
  flatten_into(tree, out);
  return out;
}

std::vector<std::string> linearize(const Repository& repo, std::string_view root) {
  return flatten(tree_view(repo, root));
}

std::vector<std::string> filter_by_difficulty(const Repository& repo,
                                              const std::vector<std::string>& ids,
                                              std::string_view ceiling) {
  const auto& vocab = Vocabulary::lom();
  auto limit = vocab.rank("difficulty", ceiling);
  if (!limit) throw VocabError("difficulty", std::string(ceiling));
  std::vector<std::string> out;
  for (const auto& id : ids) {
    const auto& difficulty = repo.get_elo(id).metadata.educational.difficulty;
    auto rank = difficulty ? vocab.rank("difficulty", *difficulty) : std::nullopt;
    if (!rank || *rank <= *limit) out.push_back(id);
  }
  return out;
}

}  // namespace hylos
