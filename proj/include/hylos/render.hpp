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

// HTML presentation of ELOs. Descriptive pages decorate the spans addressed by
// source anchors with the links selected by the active contexts; slides show
// the authored or derived slide. Stable class names for clients:
//
//   elo-body, elo-anchor-link, elo-related, elo-nav, elo-badge
//
// Navigation controls carry data-elo/data-occurrence attributes and no href,
// so every href in a page is a link target.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hylos/context.hpp"
#include "hylos/elo.hpp"
#include "hylos/linkbase.hpp"
#include "hylos/namespaces.hpp"
#include "hylos/repository.hpp"

namespace hylos {

enum class ViewMode { Descriptive, Slide };

std::string_view to_string(ViewMode mode);
// Throws ValidationError for anything but "descriptive" or "slide".
ViewMode parse_view_mode(std::string_view text);

// One position in the linearized access path of a root.
struct NavTarget {
  std::string id;
  std::size_t occurrence = 0;

  bool operator==(const NavTarget&) const = default;
};

struct Navigation {
  std::optional<NavTarget> prev;
  std::optional<NavTarget> next;
  std::optional<NavTarget> up;

  bool operator==(const Navigation&) const = default;
};

struct Badges {
  std::optional<std::string> difficulty;
  std::optional<std::string> semantic_density;

  bool operator==(const Badges&) const = default;
};

struct PageView {
  std::string elo_id;
  ViewMode mode = ViewMode::Descriptive;
  std::string html;
  Navigation nav;
  std::vector<std::string> active_contexts;
  Badges badges;
};

struct RenderOptions {
  // Page href for an ELO id is prefix + id + suffix.
  std::string href_prefix;
  std::string href_suffix = ".html";
  std::string language = "en";
  IriScheme iris;
};

std::string page_href(std::string_view resource, const RenderOptions& options);

// Throws NotFound when the occurrence is outside linearize(root).
Navigation nav_for(const Repository& repo, std::string_view root, std::size_t occurrence);
// Index of the first occurrence of `id` in linearize(root). Throws NotFound.
std::size_t first_occurrence(const Repository& repo, std::string_view root, std::string_view id);

// Throws RenderError when a source anchor's selector no longer resolves.
PageView render_descriptive(const Elo& elo, const std::vector<SelectedLink>& selected,
                            const LinkBase& base, const ContextRegistry& contexts,
                            const Navigation& nav = {},
                            const std::vector<std::string>& active_contexts = {},
                            const RenderOptions& options = {});

// Throws EmptySource when there is neither an authored slide nor anything to
// derive one from.
PageView render_slide(const Elo& elo, const Navigation& nav = {},
                      const std::vector<std::string>& active_contexts = {},
                      const RenderOptions& options = {});

std::string escape_html(std::string_view text);

}  // namespace hylos
