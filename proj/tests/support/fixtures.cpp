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

#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>

#include "hylos/context.hpp"
#include "hylos/linkbase.hpp"

namespace hylos::testing {

Elo make_elo(std::string id, std::string title, std::string body) {
  Elo elo;
  elo.id = std::move(id);
  elo.paragraph.title = std::move(title);
  elo.paragraph.body = std::move(body);
  return elo;
}

State hamster_state() {
  State state;
  Elo hamster = make_elo("hamster-text", "Hamsters having hay fever", std::string(kHamsterBody));
  hamster.metadata.title = "Hamsters having hay fever";
  hamster.metadata.description = "about hamster diseases";
  hamster.metadata.keywords = {"hamster", "allergy"};
  hamster.metadata.educational.difficulty = "medium";
  hamster.paragraph.sectional_titles = {"Symptoms"};
  state.repo.put_elo(hamster);

  Elo handbook = make_elo("handbook", "Hay fever handbook",
                          "<paragraph><p>Hay fever is an allergic reaction.</p></paragraph>");
  handbook.metadata.title = "Hay fever handbook";
  state.repo.put_elo(handbook);

  AnchorDraft source;
  source.id = "hamster";
  source.resource = "hamster-text";
  source.selector = Selector::parse("/paragraph/p@15+24");
  source.title = "hamster having hay fever";
  state.base.create_anchor(state.repo, source);

  AnchorDraft target;
  target.id = "handbook";
  target.resource = "handbook";
  target.title = "Hay fever handbook";
  state.base.create_anchor(state.repo, target);

  LinkDraft link;
  link.id = "link1";
  link.arcs = {{"hamster", "handbook", "mir:BackgroundInfo", std::nullopt}};
  link.titles = {{"en", "For freshman"}};
  link.creator = "Mr. X";
  link.created = "2004-03-15";
  link.path_space = "course1/unit2";
  state.base.create_link(link);

  state.contexts.add(parse_context(kBackgroundContext));
  return state;
}

Repository diamond_repo() {
  Repository repo;
  for (const char* id : {"a", "b", "c", "d"}) repo.put_elo(make_elo(id, std::string("ELO ") + id));
  repo.attach_child("a", "b", 0);
  repo.attach_child("a", "c", 1);
  repo.attach_child("b", "d", 0);
  repo.attach_child("c", "d", 0);
  return repo;
}

TempDir::TempDir(std::string_view tag) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  std::ostringstream name;
  name << tag << '-' << rd() << '-' << counter++;
  path_ = std::filesystem::temp_directory_path() / name.str();
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::filesystem::path sample_repository() {
  return std::filesystem::path(HYLOS_SOURCE_DIR) / "data" / "hamster";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

}  // namespace hylos::testing
