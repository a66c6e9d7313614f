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

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/graph.hpp"
#include "hylos/persistence.hpp"
#include "hylos/render.hpp"

namespace hylos {

// An immutable state together with the graph built from it.
struct Snapshot {
  State state;
  Graph graph;
};

std::shared_ptr<const Snapshot> make_snapshot(State state);

struct Session {
  std::string id;
  ContextSet contexts;
  ViewMode mode = ViewMode::Descriptive;
  std::optional<std::string> root;

  bool operator==(const Session&) const = default;
};

struct PageRequest {
  std::string elo;
  ViewMode mode = ViewMode::Descriptive;
  std::vector<std::string> contexts;
  // Hierarchy the page is viewed in; defaults to the first root containing
  // the ELO.
  std::optional<std::string> root;
  // Position in linearize(root); defaults to the first occurrence.
  std::optional<std::size_t> occurrence;
};

RenderOptions render_options(const State& state);

// The single rendering path shared by the CLI and the HTTP API.
PageView render_page(const Snapshot& snapshot, const PageRequest& request);

class Workspace {
 public:
  // Throws IntegrityError. When `store` is set every mutation is saved there.
  explicit Workspace(State initial, std::optional<std::filesystem::path> store = std::nullopt);

  std::shared_ptr<const Snapshot> snapshot() const;

  // Applies `change` to a copy of the current state under the writer lock,
  // checks integrity, rebuilds the graph and swaps the snapshot in. The
  // current snapshot is untouched when `change` or the check throws.
  std::shared_ptr<const Snapshot> mutate(const std::function<void(State&)>& change);

  // Unknown session ids read as empty sessions.
  Session session(std::string_view id) const;
  // Throws UnknownContext; the session is left unchanged on error.
  Session set_session_contexts(std::string_view id, const std::vector<std::string>& contexts);
  // Throws NotFound for an unknown root.
  Session set_session_view(std::string_view id, std::optional<ViewMode> mode,
                           std::optional<std::string> root);

 private:
  std::optional<std::filesystem::path> store_;
  std::mutex writer_;
  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const Snapshot> current_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, Session, std::less<>> sessions_;
};

}  // namespace hylos
