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

#include "hylos/http_api.hpp"

#include <charconv>
#include <ctime>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "hylos/elo.hpp"
#include "hylos/errors.hpp"
#include "hylos/rdql.hpp"

namespace hylos {

using nlohmann::json;

namespace {

struct BadRequest : Error {
  using Error::Error;
};

HttpResponse json_response(int status, const json& body) {
  return {status, "application/json", body.dump()};
}

HttpResponse error_response(int status, const std::string& message,
                            const std::vector<std::string>& violations = {}) {
  json body = {{"error", message}};
  if (!violations.empty()) body["violations"] = violations;
  return json_response(status, body);
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= path.size()) {
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) out.push_back(path.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

std::optional<std::string> param(const HttpRequest& request, const std::string& key) {
  auto it = request.query.find(key);
  if (it == request.query.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

json parse_body(const HttpRequest& request) {
  try {
    return json::parse(request.body);
  } catch (const json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON body: ") + e.what());
  }
}

template <typename T>
void put_optional(json& out, const char* key, const std::optional<T>& value) {
  if (value) out[key] = *value;
}

std::optional<std::string> optional_string(const json& body, const char* key) {
  if (!body.contains(key) || body[key].is_null()) return std::nullopt;
  if (!body[key].is_string()) throw BadRequest(std::string("field '") + key + "' must be a string");
  return body[key].get<std::string>();
}

std::string required_string(const json& body, const char* key) {
  auto value = optional_string(body, key);
  if (!value) throw BadRequest(std::string("field '") + key + "' is required");
  return *value;
}

json metadata_json(const LomMetadata& m) {
  json out = json::object();
  put_optional(out, "title", m.title);
  put_optional(out, "description", m.description);
  out["keywords"] = m.keywords;
  out["coverage"] = m.coverage;
  put_optional(out, "language", m.language);
  put_optional(out, "structure", m.structure);
  put_optional(out, "aggregationLevel", m.aggregation_level);
  put_optional(out, "format", m.technical.format);
  put_optional(out, "size", m.technical.size);
  put_optional(out, "location", m.technical.location);
  put_optional(out, "created", m.technical.created);
  put_optional(out, "modified", m.technical.modified);
  put_optional(out, "author", m.lifecycle.author);
  put_optional(out, "documentStatus", m.lifecycle.document_status);
  put_optional(out, "semanticDensity", m.educational.semantic_density);
  put_optional(out, "difficulty", m.educational.difficulty);
  put_optional(out, "context", m.educational.context);
  put_optional(out, "learningResourceType", m.educational.learning_resource_type);
  put_optional(out, "intendedEndUserRole", m.educational.intended_end_user_role);
  return out;
}

json anchor_json(const Anchor& a) {
  json out = {{"id", a.id}, {"resource", a.resource}, {"generic", !a.selector}};
  if (a.selector) out["selector"] = a.selector->to_string();
  put_optional(out, "title", a.title);
  put_optional(out, "label", a.label);
  return out;
}

json link_json(const Link& l) {
  json arcs = json::array();
  for (const auto& arc : l.arcs) {
    json a = {{"from", arc.from}, {"to", arc.to}, {"arcrole", arc.arcrole}};
    put_optional(a, "title", arc.title);
    arcs.push_back(a);
  }
  json titles = json::array();
  for (const auto& t : l.titles) titles.push_back({{"lang", t.lang}, {"text", t.text}});
  return {{"id", l.id},           {"arcs", arcs},           {"titles", titles},
          {"creator", l.creator}, {"created", l.created}, {"pathSpace", l.path_space}};
}

json elo_json(const Elo& elo, const State& state) {
  json paragraph = {{"title", elo.paragraph.title},
                    {"headwords", elo.paragraph.headwords},
                    {"sectionalTitles", elo.paragraph.sectional_titles},
                    {"body", elo.paragraph.body}};
  json slide = nullptr;
  if (elo.slide) {
    slide = {{"title", elo.slide->title}, {"bullets", elo.slide->bullets}};
    put_optional(slide, "body", elo.slide->body);
  }
  return {{"id", elo.id},
          {"iri", state.iris().elo(elo.id)},
          {"metadata", metadata_json(elo.metadata)},
          {"paragraph", paragraph},
          {"slide", slide},
          {"refs",
           {{"glossary", elo.glossary_refs},
            {"bibliography", elo.bibliography_refs},
            {"taxonomy", elo.taxonomy_refs},
            {"person", elo.person_refs}}},
          {"children", state.repo.children(elo.id)},
          {"parents", state.repo.parents(elo.id)},
          {"anchors", state.base.anchors_on(elo.id)},
          {"publication", validate_for_publication(elo)}};
}

json tree_json(const TreeNode& node, const Repository& repo) {
  json children = json::array();
  for (const auto& child : node.children) children.push_back(tree_json(child, repo));
  const auto& title = repo.get_elo(node.id).paragraph.title;
  return {{"id", node.id},
          {"title", title},
          {"depth", node.depth},
          {"path", node.path},
          {"children", children}};
}

json nav_target_json(const std::optional<NavTarget>& target) {
  if (!target) return nullptr;
  return {{"id", target->id}, {"occurrence", target->occurrence}};
}

json session_json(const Session& s) {
  json out = {{"id", s.id}, {"contexts", s.contexts.ids()}, {"mode", to_string(s.mode)}};
  out["root"] = s.root ? json(*s.root) : json(nullptr);
  return out;
}

std::vector<std::string> string_list(const json& value, const char* what) {
  if (!value.is_array()) throw BadRequest(std::string(what) + " must be a JSON array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw BadRequest(std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::size_t parse_index(const std::string& text, const char* what) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw BadRequest(std::string(what) + " must be a non-negative integer");
  }
  return value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

}  // namespace

std::string today_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

HttpResponse Api::handle(const HttpRequest& request) const {
  auto parts = split_path(request.path);
  const std::string& m = request.method;
  try {
    if (parts.empty() || parts[0] != "api") return error_response(404, "no such endpoint");
    std::size_t n = parts.size();
    if (n == 2 && parts[1] == "tree" && m == "GET") return get_tree(request);
    if (n == 2 && parts[1] == "graph" && m == "GET") return get_graph();
    if (n == 2 && parts[1] == "contexts" && m == "GET") return get_contexts();
    if (n == 2 && parts[1] == "elos" && m == "GET") return get_elos();
    if (n == 3 && parts[1] == "elos" && m == "GET") return get_elo(parts[2]);
    if (n == 4 && parts[1] == "elos" && parts[3] == "page" && m == "GET") {
      return get_page(parts[2], request);
    }
    if (n == 3 && parts[1] == "sessions" && m == "GET") return get_session(parts[2]);
    if (n == 3 && parts[1] == "sessions" && m == "PUT") return put_session(parts[2], request);
    if (n == 4 && parts[1] == "sessions" && parts[3] == "contexts" && m == "PUT") {
      return put_session_contexts(parts[2], request);
    }
    if (n == 2 && parts[1] == "links" && m == "GET") return get_links(request);
    if (n == 2 && parts[1] == "links" && m == "POST") return post_link(request);
    if (n == 2 && parts[1] == "anchors" && m == "GET") return get_anchors(request);
    if (n == 2 && parts[1] == "anchors" && m == "POST") return post_anchor(request);
    return error_response(404, "no such endpoint: " + m + " " + request.path);
  } catch (const NotFound& e) {
    return error_response(404, e.what());
  } catch (const IntegrityError& e) {
    return error_response(409, "integrity violation", e.violations());
  } catch (const DependencyError& e) {
    return error_response(409, e.what(), {e.what()});
  } catch (const CycleError& e) {
    return error_response(409, e.what(), {e.what()});
  } catch (const DuplicateChild& e) {
    return error_response(409, e.what(), {e.what()});
  } catch (const RenderError& e) {
    return error_response(409, e.what(), {e.what()});
  } catch (const EmptySource& e) {
    return error_response(409, e.what());
  } catch (const json::exception& e) {
    return error_response(400, std::string("malformed body: ") + e.what());
  } catch (const Error& e) {
    // Validation, selector, vocabulary, query and unknown-context errors.
    return error_response(400, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

HttpResponse Api::get_tree(const HttpRequest& request) const {
  auto snap = workspace_.snapshot();
  const Repository& repo = snap->state.repo;
  json trees = json::array();
  if (auto root = param(request, "root")) {
    trees.push_back(tree_json(tree_view(repo, *root), repo));
  } else {
    for (const auto& root : repo.roots()) trees.push_back(tree_json(tree_view(repo, root), repo));
  }
  return json_response(200, {{"trees", trees}});
}

HttpResponse Api::get_elos() const {
  auto snap = workspace_.snapshot();
  json elos = json::array();
  for (const auto& [id, elo] : snap->state.repo.elos()) {
    elos.push_back({{"id", id}, {"title", elo.paragraph.title}});
  }
  return json_response(200, {{"elos", elos}});
}

HttpResponse Api::get_elo(const std::string& id) const {
  auto snap = workspace_.snapshot();
  return json_response(200, elo_json(snap->state.repo.get_elo(id), snap->state));
}

HttpResponse Api::get_page(const std::string& id, const HttpRequest& request) const {
  auto snap = workspace_.snapshot();
  snap->state.repo.get_elo(id);

  PageRequest page;
  page.elo = id;
  std::optional<Session> session;
  if (auto sid = param(request, "session")) session = workspace_.session(*sid);
  if (session) {
    page.mode = session->mode;
    page.contexts = session->contexts.ids();
    page.root = session->root;
  }
  if (auto mode = param(request, "mode")) page.mode = parse_view_mode(*mode);
  if (auto contexts = request.query.find("contexts"); contexts != request.query.end()) {
    page.contexts = split_commas(contexts->second);
  }
  if (auto root = param(request, "root")) page.root = *root;
  if (auto occurrence = param(request, "occurrence")) {
    page.occurrence = parse_index(*occurrence, "occurrence");
  }

  PageView view = render_page(*snap, page);
  json badges = json::object();
  put_optional(badges, "difficulty", view.badges.difficulty);
  put_optional(badges, "semanticDensity", view.badges.semantic_density);
  json body = {{"elo", view.elo_id},
               {"mode", to_string(view.mode)},
               {"html", view.html},
               {"nav",
                {{"prev", nav_target_json(view.nav.prev)},
                 {"next", nav_target_json(view.nav.next)},
                 {"up", nav_target_json(view.nav.up)}}},
               {"active_contexts", view.active_contexts},
               {"badges", badges}};
  return json_response(200, body);
}

HttpResponse Api::get_contexts() const {
  auto snap = workspace_.snapshot();
  json contexts = json::array();
  for (const auto& c : snap->state.contexts.all()) {
    contexts.push_back({{"id", c.id},
                        {"creator", c.creator},
                        {"title", {{"lang", c.title.lang}, {"text", c.title.text}}},
                        {"description",
                         {{"lang", c.description.lang}, {"text", c.description.text}}},
                        {"query", c.query_text}});
  }
  return json_response(200, {{"contexts", contexts}});
}

HttpResponse Api::get_session(const std::string& sid) const {
  return json_response(200, session_json(workspace_.session(sid)));
}

HttpResponse Api::put_session(const std::string& sid, const HttpRequest& request) const {
  json body = parse_body(request);
  if (!body.is_object()) throw BadRequest("session body must be a JSON object");
  std::optional<ViewMode> mode;
  if (auto text = optional_string(body, "mode")) mode = parse_view_mode(*text);
  auto root = optional_string(body, "root");
  Session session = workspace_.session(sid);
  if (body.contains("contexts")) {
    session = workspace_.set_session_contexts(sid, string_list(body["contexts"], "contexts"));
  }
  if (mode || root) session = workspace_.set_session_view(sid, mode, root);
  return json_response(200, session_json(session));
}

HttpResponse Api::put_session_contexts(const std::string& sid, const HttpRequest& request) const {
  json body = parse_body(request);
  const json& list = body.is_object() && body.contains("contexts") ? body["contexts"] : body;
  auto ids = string_list(list, "contexts");
  return json_response(200, session_json(workspace_.set_session_contexts(sid, ids)));
}

HttpResponse Api::get_graph() const {
  auto snap = workspace_.snapshot();
  return {200, "text/plain; charset=utf-8", snap->graph.to_ntriples()};
}

HttpResponse Api::get_links(const HttpRequest& request) const {
  auto snap = workspace_.snapshot();
  LinkQuery query;
  query.path_space_prefix = param(request, "space");
  query.touching_anchor = param(request, "anchor");
  if (auto direction = param(request, "direction")) {
    if (*direction == "from") {
      query.direction = Direction::From;
    } else if (*direction == "to") {
      query.direction = Direction::To;
    } else {
      throw BadRequest("direction must be 'from' or 'to'");
    }
  }
  json links = json::array();
  for (const auto& link : snap->state.base.query_links(query)) links.push_back(link_json(link));
  return json_response(200, {{"links", links}});
}

HttpResponse Api::post_link(const HttpRequest& request) const {
  json body = parse_body(request);
  if (!body.is_object()) throw BadRequest("link body must be a JSON object");
  LinkDraft draft;
  draft.id = optional_string(body, "id");
  if (!body.contains("arcs") || !body["arcs"].is_array()) {
    throw BadRequest("field 'arcs' must be an array");
  }
  for (const auto& arc : body["arcs"]) {
    if (!arc.is_object()) throw BadRequest("each arc must be an object");
    draft.arcs.push_back({required_string(arc, "from"), required_string(arc, "to"),
                          required_string(arc, "arcrole"), optional_string(arc, "title")});
  }
  if (body.contains("titles")) {
    if (!body["titles"].is_array()) throw BadRequest("field 'titles' must be an array");
    for (const auto& t : body["titles"]) {
      if (!t.is_object()) throw BadRequest("each title must be an object");
      draft.titles.push_back({optional_string(t, "lang").value_or(""), required_string(t, "text")});
    }
  }
  draft.creator = optional_string(body, "creator").value_or("");
  draft.created = optional_string(body, "created").value_or(today_utc());
  draft.path_space = optional_string(body, "pathSpace").value_or("");

  std::string id;
  try {
    auto snap = workspace_.mutate([&](State& state) {
      if (draft.id && state.base.find_link(*draft.id)) {
        throw IntegrityError({"link " + *draft.id + " already exists"});
      }
      id = state.base.create_link(draft);
    });
    return json_response(201, link_json(snap->state.base.link(id)));
  } catch (const NotFound& e) {
    return error_response(409, "integrity violation", {e.what()});
  }
}

HttpResponse Api::get_anchors(const HttpRequest& request) const {
  auto snap = workspace_.snapshot();
  json anchors = json::array();
  auto resource = param(request, "resource");
  for (const auto& [id, anchor] : snap->state.base.anchors()) {
    if (!resource || anchor.resource == *resource) anchors.push_back(anchor_json(anchor));
  }
  return json_response(200, {{"anchors", anchors}});
}

HttpResponse Api::post_anchor(const HttpRequest& request) const {
  json body = parse_body(request);
  if (!body.is_object()) throw BadRequest("anchor body must be a JSON object");
  AnchorDraft draft;
  draft.id = optional_string(body, "id");
  draft.resource = required_string(body, "resource");
  if (auto selector = optional_string(body, "selector")) draft.selector = Selector::parse(*selector);
  draft.title = optional_string(body, "title");
  draft.label = optional_string(body, "label");

  std::string id;
  try {
    auto snap = workspace_.mutate([&](State& state) {
      if (draft.id && state.base.find_anchor(*draft.id)) {
        throw IntegrityError({"anchor " + *draft.id + " already exists"});
      }
      id = state.base.create_anchor(state.repo, draft);
    });
    return json_response(201, anchor_json(snap->state.base.anchor(id)));
  } catch (const NotFound& e) {
    return error_response(409, "integrity violation", {e.what()});
  }
}

struct HttpServer::Impl {
  explicit Impl(const Api& a) : api(a) {
    auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
      HttpRequest request;
      request.method = req.method;
      request.path = req.path;
      for (const auto& [key, value] : req.params) request.query.emplace(key, value);
      request.body = req.body;
      HttpResponse response = api.handle(request);
      res.status = response.status;
      res.set_content(response.body, response.content_type);
    };
    server.Get(".*", bridge);
    server.Put(".*", bridge);
    server.Post(".*", bridge);
    server.Delete(".*", bridge);
  }

  int bind(const std::string& host, int port) {
    if (port == 0) {
      int bound = server.bind_to_any_port(host);
      if (bound < 0) throw Error("cannot bind " + host);
      return bound;
    }
    if (!server.bind_to_port(host, port)) {
      throw Error("cannot bind " + host + ":" + std::to_string(port));
    }
    return port;
  }

  const Api& api;
  httplib::Server server;
  std::thread thread;
};

HttpServer::HttpServer(const Api& api) : impl_(std::make_unique<Impl>(api)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  int bound = impl_->bind(host, port);
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void HttpServer::run(const std::string& host, int port) {
  impl_->bind(host, port);
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace hylos
