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

#include "hylos/workspace.hpp"

#include <algorithm>

#include "hylos/context.hpp"
#include "hylos/errors.hpp"
#include "hylos/statements.hpp"

namespace hylos {

namespace {

std::string default_root(const Repository& repo, const std::string& id) {
  if (repo.parents(id).empty()) return id;
  for (const auto& root : repo.roots()) {
    auto order = linearize(repo, root);
    if (std::find(order.begin(), order.end(), id) != order.end()) return root;
  }
  return id;
}

}  // namespace

std::shared_ptr<const Snapshot> make_snapshot(State state) {
  auto snapshot = std::make_shared<Snapshot>();
  snapshot->graph = build_model(state.repo, state.base, state.iris());
  snapshot->state = std::move(state);
  return snapshot;
}

RenderOptions render_options(const State& state) {
  RenderOptions options;
  options.language = state.config.language;
  options.iris = state.iris();
  return options;
}

PageView render_page(const Snapshot& snapshot, const PageRequest& request) {
  const State& state = snapshot.state;
  const Elo& elo = state.repo.get_elo(request.elo);

  std::string root = request.root ? *request.root : default_root(state.repo, elo.id);
  if (!state.repo.contains(root)) throw NotFound("ELO", root);
  std::size_t occurrence =
      request.occurrence ? *request.occurrence : first_occurrence(state.repo, root, elo.id);
  auto order = linearize(state.repo, root);
  if (occurrence >= order.size() || order[occurrence] != elo.id) {
    throw NotFound("occurrence of " + elo.id + " under " + root, std::to_string(occurrence));
  }
  Navigation nav = nav_for(state.repo, root, occurrence);

  ContextSet active;
  for (const auto& id : request.contexts) active = activate(active, state.contexts, id);

  RenderOptions options = render_options(state);
  if (request.mode == ViewMode::Slide) {
    return render_slide(elo, nav, active.ids(), options);
  }
  auto selected = links_for_document(elo.id, active, state.contexts, snapshot.graph, state.base,
                                     options.iris, options.language);
  return render_descriptive(elo, selected, state.base, state.contexts, nav, active.ids(),
                            options);
}

Workspace::Workspace(State initial, std::optional<std::filesystem::path> store)
    : store_(std::move(store)) {
  if (auto violations = integrity_violations(initial); !violations.empty()) {
    throw IntegrityError(std::move(violations));
  }
  current_ = make_snapshot(std::move(initial));
}

std::shared_ptr<const Snapshot> Workspace::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return current_;
}

std::shared_ptr<const Snapshot> Workspace::mutate(const std::function<void(State&)>& change) {
  std::lock_guard writer(writer_);
  State next = snapshot()->state;
  change(next);
  if (auto violations = integrity_violations(next); !violations.empty()) {
    throw IntegrityError(std::move(violations));
  }
  if (store_) save_repository(next, *store_);
  auto fresh = make_snapshot(std::move(next));
  {
    std::lock_guard lock(snapshot_mutex_);
    current_ = fresh;
  }
  return fresh;
}

Session Workspace::session(std::string_view id) const {
  auto snap = snapshot();
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return Session{std::string(id), {}, ViewMode::Descriptive, {}};
  // Contexts removed since they were activated drop out silently.
  Session out = it->second;
  ContextSet live;
  for (const auto& cid : out.contexts.ids()) {
    if (snap->state.contexts.contains(cid)) live = activate(live, snap->state.contexts, cid);
  }
  out.contexts = live;
  if (out.root && !snap->state.repo.contains(*out.root)) out.root.reset();
  return out;
}

Session Workspace::set_session_contexts(std::string_view id,
                                        const std::vector<std::string>& contexts) {
  auto snap = snapshot();
  ContextSet set;
  for (const auto& cid : contexts) set = activate(set, snap->state.contexts, cid);
  {
    std::lock_guard lock(sessions_mutex_);
    auto [it, inserted] = sessions_.try_emplace(std::string(id));
    it->second.id = std::string(id);
    it->second.contexts = set;
  }
  return session(id);
}

Session Workspace::set_session_view(std::string_view id, std::optional<ViewMode> mode,
                                    std::optional<std::string> root) {
  auto snap = snapshot();
  if (root && !snap->state.repo.contains(*root)) throw NotFound("ELO", *root);
  {
    std::lock_guard lock(sessions_mutex_);
    auto [it, inserted] = sessions_.try_emplace(std::string(id));
    it->second.id = std::string(id);
    if (mode) it->second.mode = *mode;
    if (root) it->second.root = std::move(root);
  }
  return session(id);
}

}  // namespace hylos
