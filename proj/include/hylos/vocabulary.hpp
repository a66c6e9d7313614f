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
#include <vector>

namespace hylos {

// Closed LOM value spaces. The tables are loaded once from the bundled
// vocabulary data; order within a table is the scale order.
class Vocabulary {
 public:
  static const Vocabulary& lom();

  // Names of all vocabulary-typed fields, e.g. "difficulty".
  std::vector<std::string> fields() const;
  bool has_field(std::string_view field) const;
  const std::vector<std::string>& values(std::string_view field) const;
  bool contains(std::string_view field, std::string_view value) const;
  // Position on the field's ordered scale, nullopt when not a member.
  std::optional<std::size_t> rank(std::string_view field, std::string_view value) const;

 private:
  Vocabulary();
  std::vector<std::pair<std::string, std::vector<std::string>>> tables_;
};

}  // namespace hylos
