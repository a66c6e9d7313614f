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

#include "hylos/namespaces.hpp"

#include <array>
#include <utility>

namespace hylos {

namespace {

const std::array<std::pair<std::string_view, std::string_view>, 3> kPrefixes = {{
    {"rdf", ns::kRdf},
    {"dc", ns::kDc},
    {"mir", ns::kMir},
}};

constexpr std::string_view kEloPrefix = "elo-";
constexpr std::string_view kAnchorPrefix = "anchor-";
constexpr std::string_view kArcMarker = "/arc-";

}  // namespace

bool looks_absolute(std::string_view iri) { return iri.find("://") != std::string_view::npos; }

bool is_absolute_iri(std::string_view iri) {
  auto colon = iri.find("://");
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    char c = iri[i];
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (i > 0 && ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'));
    if (!ok) return false;
  }
  for (unsigned char c : iri) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '\\' || c == '^' || c == '`') {
      return false;
    }
  }
  return true;
}

std::optional<std::string> expand_known_prefix(std::string_view text) {
  if (looks_absolute(text)) {
    if (!is_absolute_iri(text)) return std::nullopt;
    return std::string(text);
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto prefix = text.substr(0, colon);
  auto local = text.substr(colon + 1);
  for (const auto& [name, base] : kPrefixes) {
    if (name == prefix) {
      std::string full = std::string(base) + std::string(local);
      if (!is_absolute_iri(full)) return std::nullopt;
      return full;
    }
  }
  return std::nullopt;
}

std::string compact_iri(std::string_view iri) {
  for (const auto& [name, base] : kPrefixes) {
    if (iri.size() > base.size() && iri.substr(0, base.size()) == base) {
      return std::string(name) + ":" + std::string(iri.substr(base.size()));
    }
  }
  return std::string(iri);
}

std::string IriScheme::elo(std::string_view id) const {
  return base_ + std::string(kEloPrefix) + std::string(id);
}

std::string IriScheme::anchor(std::string_view id) const {
  return base_ + std::string(kAnchorPrefix) + std::string(id);
}

std::string IriScheme::link(std::string_view id) const { return base_ + std::string(id); }

std::string IriScheme::arc(std::string_view link_id, std::size_t k) const {
  return link(link_id) + std::string(kArcMarker) + std::to_string(k);
}

std::string IriScheme::resource(std::string_view resource) const {
  return looks_absolute(resource) ? std::string(resource) : elo(resource);
}

std::optional<std::string_view> IriScheme::local(std::string_view iri) const {
  if (iri.size() <= base_.size() || iri.substr(0, base_.size()) != base_) return std::nullopt;
  return iri.substr(base_.size());
}

std::optional<std::string> IriScheme::elo_id(std::string_view iri) const {
  auto rest = local(iri);
  if (!rest || rest->substr(0, kEloPrefix.size()) != kEloPrefix) return std::nullopt;
  return std::string(rest->substr(kEloPrefix.size()));
}

std::optional<std::string> IriScheme::anchor_id(std::string_view iri) const {
  auto rest = local(iri);
  if (!rest || rest->substr(0, kAnchorPrefix.size()) != kAnchorPrefix) return std::nullopt;
  return std::string(rest->substr(kAnchorPrefix.size()));
}

std::optional<std::string> IriScheme::link_id(std::string_view iri) const {
  auto rest = local(iri);
  if (!rest) return std::nullopt;
  if (rest->substr(0, kEloPrefix.size()) == kEloPrefix ||
      rest->substr(0, kAnchorPrefix.size()) == kAnchorPrefix) {
    return std::nullopt;
  }
  auto marker = rest->find(kArcMarker);
  return std::string(rest->substr(0, marker));
}

}  // namespace hylos
