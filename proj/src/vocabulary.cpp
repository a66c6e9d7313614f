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

#include "hylos/vocabulary.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace hylos {

namespace detail {
extern const std::string_view kVocabularyJson;
}

Vocabulary::Vocabulary() {
  auto doc = nlohmann::json::parse(detail::kVocabularyJson);
  for (const auto& [field, values] : doc.at("vocabularies").items()) {
    tables_.emplace_back(field, values.get<std::vector<std::string>>());
  }
}

const Vocabulary& Vocabulary::lom() {
  static const Vocabulary instance;
  return instance;
}

std::vector<std::string> Vocabulary::fields() const {
  std::vector<std::string> out;
  for (const auto& [field, values] : tables_) out.push_back(field);
  return out;
}

bool Vocabulary::has_field(std::string_view field) const {
  return std::any_of(tables_.begin(), tables_.end(),
                     [&](const auto& t) { return t.first == field; });
}

const std::vector<std::string>& Vocabulary::values(std::string_view field) const {
  for (const auto& [name, values] : tables_) {
    if (name == field) return values;
  }
  throw std::out_of_range("no vocabulary for field " + std::string(field));
}

bool Vocabulary::contains(std::string_view field, std::string_view value) const {
  return rank(field, value).has_value();
}

std::optional<std::size_t> Vocabulary::rank(std::string_view field,
                                            std::string_view value) const {
  const auto& table = values(field);
  auto it = std::find(table.begin(), table.end(), value);
  if (it == table.end()) return std::nullopt;
  return static_cast<std::size_t>(it - table.begin());
}

}  // namespace hylos
