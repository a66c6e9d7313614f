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

#include <map>
#include <memory>
#include <string>

#include "hylos/workspace.hpp"

namespace hylos {

struct HttpRequest {
  std::string method;
  std::string path;  // percent-decoded
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// JSON API over a workspace. Handles requests without any socket so it can be
// driven directly from tests; HttpServer binds it to a port.
class Api {
 public:
  explicit Api(Workspace& workspace) : workspace_(workspace) {}

  HttpResponse handle(const HttpRequest& request) const;

 private:
  HttpResponse get_tree(const HttpRequest& request) const;
  HttpResponse get_elos() const;
  HttpResponse get_elo(const std::string& id) const;
  HttpResponse get_page(const std::string& id, const HttpRequest& request) const;
  HttpResponse get_contexts() const;
  HttpResponse get_session(const std::string& sid) const;
  HttpResponse put_session(const std::string& sid, const HttpRequest& request) const;
  HttpResponse put_session_contexts(const std::string& sid, const HttpRequest& request) const;
  HttpResponse get_graph() const;
  HttpResponse get_links(const HttpRequest& request) const;
  HttpResponse post_link(const HttpRequest& request) const;
  HttpResponse get_anchors(const HttpRequest& request) const;
  HttpResponse post_anchor(const HttpRequest& request) const;

  Workspace& workspace_;
};

class HttpServer {
 public:
  explicit HttpServer(const Api& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds and serves on a background thread; port 0 picks a free port.
  // Returns the bound port. Throws Error when binding fails.
  int start(const std::string& host, int port);
  // Binds and serves on the calling thread until stop() is called.
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Today's date as YYYY-MM-DD in UTC.
std::string today_utc();

}  // namespace hylos
