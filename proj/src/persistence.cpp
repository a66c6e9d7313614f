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

#include "hylos/persistence.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hylos/elo_xml.hpp"
#include "hylos/errors.hpp"
#include "hylos/xml.hpp"

namespace hylos {

namespace fs = std::filesystem;

namespace {

constexpr const char* kConfigFile = "hylos.xml";
constexpr const char* kStructureFile = "structure.xml";
constexpr const char* kLinkbaseFile = "linkbase.xml";
constexpr const char* kElosDir = "elos";
constexpr const char* kContextsDir = "contexts";
constexpr const char* kRegistriesDir = "registries";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Runs `parse` over the file contents, mapping syntax and schema problems to
// ParseError tagged with the file name.
template <typename Fn>
auto parse_file(const fs::path& path, const std::string& label, Fn&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const xml::SyntaxError& e) {
    throw ParseError(label, e.line(), e.what());
  } catch (const FormatError& e) {
    throw ParseError(label, 0, e.what());
  }
}

std::vector<fs::path> xml_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::string* required(const xml::Node& node, std::string_view key) {
  const std::string* value = node.attribute(key);
  if (!value) {
    throw FormatError("<" + node.name + "> lacks the " + std::string(key) + " attribute");
  }
  return value;
}

template <typename R>
auto registry_slot(R& r, std::string_view kind) -> decltype(&r.glossary) {
  if (kind == "glossary") return &r.glossary;
  if (kind == "bibliography") return &r.bibliography;
  if (kind == "taxonomy") return &r.taxonomy;
  if (kind == "person") return &r.person;
  return nullptr;
}

const std::vector<std::string>& registry_kinds() {
  static const std::vector<std::string> kinds = {"glossary", "bibliography", "taxonomy",
                                                 "person"};
  return kinds;
}

void remove_stale(const fs::path& dir, const std::set<fs::path>& keep) {
  for (const auto& path : xml_files(dir)) {
    if (!keep.count(path)) fs::remove(path);
  }
}

}  // namespace

std::vector<std::string> integrity_violations(const State& state) {
  std::vector<std::string> out = state.repo.integrity_violations();
  for (const auto& [id, elo] : state.repo.elos()) {
    try {
      validate_structure(elo);
    } catch (const Error& e) {
      out.push_back("ELO " + id + ": " + e.what());
    }
  }
  auto base = state.base.integrity_violations(state.repo);
  out.insert(out.end(), base.begin(), base.end());
  return out;
}

xml::Node structure_to_xml(const Repository& repo) {
  xml::Node root = xml::Node::element("structure");
  for (const auto& [parent, kids] : repo.edges()) {
    if (kids.empty()) continue;
    xml::Node& node = root.add_element("elo");
    node.set_attribute("id", parent);
    for (const auto& kid : kids) node.add_element("child").set_attribute("id", kid);
  }
  return root;
}

xml::Node registry_to_xml(const std::string& kind,
                          const std::map<std::string, std::string>& entries) {
  xml::Node root = xml::Node::element("registry");
  root.set_attribute("kind", kind);
  for (const auto& [id, label] : entries) {
    root.add_text_element("entry", label).set_attribute("id", id);
  }
  return root;
}

xml::Node config_to_xml(const Config& config) {
  xml::Node root = xml::Node::element("hylos");
  root.set_attribute("base", config.base);
  root.set_attribute("language", config.language);
  return root;
}

State load_repository(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw NotFound("repository directory", dir.string());
  State state;
  std::vector<std::string> violations;

  if (fs::exists(dir / kConfigFile)) {
    state.config = parse_file(dir / kConfigFile, kConfigFile, [](const std::string& text) {
      xml::Node root = xml::parse(text);
      if (root.name != "hylos") throw FormatError("root element must be <hylos>");
      Config config;
      if (const auto* base = root.attribute("base")) config.base = *base;
      if (const auto* lang = root.attribute("language")) config.language = *lang;
      return config;
    });
    if (!is_absolute_iri(state.config.base)) {
      violations.push_back(std::string(kConfigFile) + ": base '" + state.config.base +
                           "' is not an absolute IRI");
    }
  }

  for (const auto& path : xml_files(dir / kElosDir)) {
    std::string label = std::string(kElosDir) + "/" + path.filename().string();
    Elo elo = parse_file(path, label, [](const std::string& text) { return read_elo(text); });
    if (state.repo.contains(elo.id)) {
      violations.push_back(label + ": duplicate ELO id " + elo.id);
      continue;
    }
    try {
      state.repo.put_elo(std::move(elo));
    } catch (const Error& e) {
      violations.push_back(label + ": " + e.what());
    }
  }

  for (const auto& kind : registry_kinds()) {
    fs::path path = dir / kRegistriesDir / (kind + ".xml");
    if (!fs::exists(path)) continue;
    std::string label = std::string(kRegistriesDir) + "/" + kind + ".xml";
    auto entries = parse_file(path, label, [&](const std::string& text) {
      xml::Node root = xml::parse(text);
      if (root.name != "registry") throw FormatError("root element must be <registry>");
      std::map<std::string, std::string> out;
      for (const auto* entry : root.elements("entry")) {
        out[*required(*entry, "id")] = entry->text_content();
      }
      return out;
    });
    *registry_slot(state.repo.registries(), kind) = std::move(entries);
  }

  if (fs::exists(dir / kStructureFile)) {
    auto edges = parse_file(dir / kStructureFile, kStructureFile, [](const std::string& text) {
      xml::Node root = xml::parse(text);
      if (root.name != "structure") throw FormatError("root element must be <structure>");
      std::vector<std::pair<std::string, std::string>> out;
      for (const auto* parent : root.elements("elo")) {
        for (const auto* child : parent->elements("child")) {
          out.emplace_back(*required(*parent, "id"), *required(*child, "id"));
        }
      }
      return out;
    });
    for (const auto& [parent, child] : edges) {
      try {
        state.repo.attach_child(parent, child, state.repo.contains(parent)
                                                   ? state.repo.children(parent).size()
                                                   : 0);
      } catch (const Error& e) {
        violations.push_back(std::string(kStructureFile) + ": edge " + parent + " -> " + child +
                             ": " + e.what());
      }
    }
  }

  if (fs::exists(dir / kLinkbaseFile)) {
    state.base = parse_file(dir / kLinkbaseFile, kLinkbaseFile,
                            [](const std::string& text) { return read_linkbase(text); });
  }

  for (const auto& path : xml_files(dir / kContextsDir)) {
    std::string label = std::string(kContextsDir) + "/" + path.filename().string();
    try {
      LinkContext context =
          parse_file(path, label, [](const std::string& text) { return parse_context(text); });
      if (state.contexts.contains(context.id)) {
        violations.push_back(label + ": duplicate context id " + context.id);
      } else {
        state.contexts.add(std::move(context));
      }
    } catch (const QueryError& e) {
      violations.push_back(label + ": " + e.what());
    }
  }

  auto found = integrity_violations(state);
  violations.insert(violations.end(), found.begin(), found.end());
  if (!violations.empty()) throw IntegrityError(std::move(violations));
  return state;
}

void save_repository(const State& state, const fs::path& dir) {
  if (auto violations = integrity_violations(state); !violations.empty()) {
    throw IntegrityError(std::move(violations));
  }
  fs::create_directories(dir);
  write_file(dir / kConfigFile, xml::to_document(config_to_xml(state.config)));

  std::set<fs::path> elo_files;
  for (const auto& [id, elo] : state.repo.elos()) {
    fs::path path = dir / kElosDir / (id + ".xml");
    write_file(path, write_elo(elo));
    elo_files.insert(path);
  }
  remove_stale(dir / kElosDir, elo_files);

  write_file(dir / kStructureFile, xml::to_document(structure_to_xml(state.repo)));
  write_file(dir / kLinkbaseFile, write_linkbase(state.base));

  std::set<fs::path> context_files;
  for (const auto& context : state.contexts.all()) {
    fs::path path = dir / kContextsDir / (context.id + ".xml");
    write_file(path, write_context(context));
    context_files.insert(path);
  }
  remove_stale(dir / kContextsDir, context_files);

  for (const auto& kind : registry_kinds()) {
    auto* entries = registry_slot(state.repo.registries(), kind);
    fs::path path = dir / kRegistriesDir / (kind + ".xml");
    if (entries->empty()) {
      fs::remove(path);
    } else {
      write_file(path, xml::to_document(registry_to_xml(kind, *entries)));
    }
  }
}

void merge_into(State& target, const State& source) {
  for (const auto& [id, elo] : source.repo.elos()) target.repo.put_elo(elo);
  for (const auto& [parent, kids] : source.repo.edges()) {
    for (const auto& kid : kids) {
      const auto& existing = target.repo.children(parent);
      if (std::find(existing.begin(), existing.end(), kid) != existing.end()) continue;
      target.repo.attach_child(parent, kid, existing.size());
    }
  }
  const Registries& from = source.repo.registries();
  Registries& to = target.repo.registries();
  for (const auto& kind : registry_kinds()) {
    auto* src = registry_slot(from, kind);
    auto* dst = registry_slot(to, kind);
    for (const auto& [id, label] : *src) (*dst)[id] = label;
  }
  for (const auto& [id, anchor] : source.base.anchors()) target.base.insert_anchor(anchor);
  for (const auto& [id, link] : source.base.links()) target.base.insert_link(link);
  for (const auto& context : source.contexts.all()) target.contexts.add(context);
}

}  // namespace hylos
