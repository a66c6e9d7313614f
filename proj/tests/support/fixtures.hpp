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
#include <string>
#include <string_view>

#include "hylos/elo.hpp"
#include "hylos/persistence.hpp"
#include "hylos/repository.hpp"

namespace hylos::testing {

inline constexpr std::string_view kMir = "http://www.rz.fhtw-berlin.de/MIR#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";

inline std::string mir(std::string_view local) { return std::string(kMir) + std::string(local); }
inline std::string rdf(std::string_view local) { return std::string(kRdf) + std::string(local); }
inline std::string dc(std::string_view local) { return std::string(kDc) + std::string(local); }

// The background-information context definition with the dc element names
// written out properly.
inline constexpr std::string_view kBackgroundContext = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
xmlns:mir="http://www.rz.fhtw-berlin.de/MIR"
xmlns:dc="http://purl.org/dc/elements/1.1/">
<rdf:Description rdf:about="link-context1">
<dc:Creator>Mr. X</dc:Creator>
<dc:Title xml:lang="en">Background Information</dc:Title>
<dc:Description xml:lang="en">Some continuative information
on.</dc:Description>
<mir:link-context>
<![CDATA[
SELECT * WHERE (?link, <rdf:predicate>, <mir:BackgroundInfo>) USING
rdf FOR <http://www.w3.org/1999/02/22-rdf-syntax-ns#>,
mir FOR <http://www.rz.fhtw-berlin.de/MIR#>
]]>
</mir:link-context>
</rdf:Description>
</rdf:RDF>
)";

inline constexpr std::string_view kBackgroundQuery =
    "SELECT * WHERE (?link, <rdf:predicate>, <mir:BackgroundInfo>) USING\n"
    "rdf FOR <http://www.w3.org/1999/02/22-rdf-syntax-ns#>,\n"
    "mir FOR <http://www.rz.fhtw-berlin.de/MIR#>";

inline constexpr std::string_view kHamsterBody =
    "<paragraph><p>Like humans, a hamster having hay fever sneezes through spring and "
    "summer.</p><section><title>Symptoms</title><p>Watery eyes and a runny "
    "nose.</p></section></paragraph>";

Elo make_elo(std::string id, std::string title,
             std::string body = "<paragraph><p>Some text.</p></paragraph>");

// Two ELOs (hamster-text, handbook), anchors "hamster" (a span of the hamster
// text) and "handbook" (generic), link1 from hamster to handbook with arcrole
// mir:BackgroundInfo titled "For freshman", and context link-context1.
State hamster_state();

// A -> {B, C}, B -> D, C -> D.
Repository diamond_repo();

// Directory under the system temp dir removed on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view tag = "hylos");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Shipped sample repository.
std::filesystem::path sample_repository();

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace hylos::testing
