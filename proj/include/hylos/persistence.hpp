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

// On-disk repository layout:
//
//   hylos.xml                 configuration (IRI base, language)
//   elos/<id>.xml             one ELO per file
//   structure.xml             ordered parent -> child edges
//   linkbase.xml              anchors and links
//   contexts/<id>.xml         one link context per file
//   registries/<kind>.xml     glossary, bibliography, taxonomy, person
//
// Every file is optional; an empty directory is an empty repository.

#include <filesystem>
#include <string>
#include <vector>

#include "hylos/context.hpp"
#include "hylos/linkbase.hpp"
#include "hylos/namespaces.hpp"
#include "hylos/repository.hpp"

namespace hylos {

struct Config {
  std::string base = std::string(ns::kMir);
  std::string language = "en";

  bool operator==(const Config&) const = default;
};

struct State {
  Repository repo;
  LinkBase base;
  ContextRegistry contexts;
  Config config;

  IriScheme iris() const { return IriScheme(config.base); }
  bool operator==(const State&) const = default;
};

// Content, structure and link-base violations of a whole state.
std::vector<std::string> integrity_violations(const State& state);

// Throws ParseError for unreadable files and IntegrityError listing every
// violation otherwise found. The directory must exist.
State load_repository(const std::filesystem::path& dir);

// Writes the canonical serialization and removes stale ELO and context files.
// Throws IntegrityError when the state is inconsistent.
void save_repository(const State& state, const std::filesystem::path& dir);

// Upserts everything from `source` into `target`. Edges already present are
// kept; new edges are appended. Throws CycleError on a conflicting structure.
void merge_into(State& target, const State& source);

xml::Node structure_to_xml(const Repository& repo);
xml::Node registry_to_xml(const std::string& kind, const std::map<std::string, std::string>& entries);
xml::Node config_to_xml(const Config& config);

}  // namespace hylos
