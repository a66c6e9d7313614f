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

#include <optional>
#include <string>
#include <string_view>

namespace hylos {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kMir = "http://www.rz.fhtw-berlin.de/MIR#";

inline std::string rdf(std::string_view local) { return std::string(kRdf) + std::string(local); }
inline std::string dc(std::string_view local) { return std::string(kDc) + std::string(local); }
inline std::string mir(std::string_view local) { return std::string(kMir) + std::string(local); }
}  // namespace ns

// "://" marks an absolute IRI; everything else is read as prefix:local.
bool looks_absolute(std::string_view iri);

// Absolute IRI without characters that N-Triples forbids inside <...>.
bool is_absolute_iri(std::string_view iri);

// Expands rdf:, dc: and mir: names; absolute IRIs pass through unchanged.
std::optional<std::string> expand_known_prefix(std::string_view text);

// Shortest display form using the well-known prefixes, e.g. "mir:link1".
std::string compact_iri(std::string_view iri);

// Mints entity IRIs below a configurable base namespace:
//   ELO    -> base "elo-" id
//   anchor -> base "anchor-" id
//   link   -> base id
//   arc k of an n-arc link -> link IRI "/arc-" k
class IriScheme {
 public:
  IriScheme() : base_(ns::kMir) {}
  explicit IriScheme(std::string base) : base_(std::move(base)) {}

  const std::string& base() const { return base_; }
  std::string elo(std::string_view id) const;
  std::string anchor(std::string_view id) const;
  std::string link(std::string_view id) const;
  std::string arc(std::string_view link_id, std::size_t k) const;

  // Resource IRI of an anchor target: ELO ids are minted, external IRIs kept.
  std::string resource(std::string_view resource) const;

  std::optional<std::string> elo_id(std::string_view iri) const;
  std::optional<std::string> anchor_id(std::string_view iri) const;
  // Link id for a link IRI or one of its arc nodes.
  std::optional<std::string> link_id(std::string_view iri) const;

  bool operator==(const IriScheme&) const = default;

 private:
  std::optional<std::string_view> local(std::string_view iri) const;
  std::string base_;
};

}  // namespace hylos
