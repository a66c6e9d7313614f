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

#include "hylos/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hylos/elo_xml.hpp"
#include "hylos/errors.hpp"
#include "hylos/http_api.hpp"
#include "hylos/persistence.hpp"
#include "hylos/rdql.hpp"
#include "hylos/workspace.hpp"

namespace hylos {

namespace fs = std::filesystem;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

State load_or_empty(const fs::path& dir) {
  if (!fs::exists(dir)) return State{};
  return load_repository(dir);
}

Arc parse_arc_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4) {
    throw ValidationError("arc must be FROM,TO,ARCROLE[,TITLE]: '" + spec + "'");
  }
  Arc arc{parts[0], parts[1], parts[2], std::nullopt};
  if (parts.size() == 4) arc.title = parts[3];
  return arc;
}

std::string describe_arcs(const Link& link) {
  std::string out;
  for (const auto& arc : link.arcs) {
    if (!out.empty()) out += "; ";
    out += arc.from + " -> " + arc.to + " " + compact_iri(arc.arcrole);
  }
  return out;
}

void print_tree(const TreeNode& node, const Repository& repo, std::ostream& out) {
  out << std::string(node.depth * 2, ' ') << node.id << '\t'
      << repo.get_elo(node.id).paragraph.title << '\n';
  for (const auto& child : node.children) print_tree(child, repo, out);
}

struct Options {
  std::string repo = ".";

  std::string ingest_dir;

  std::string tree_root;
  std::optional<std::size_t> max_depth;

  std::string id;
  bool cascade = false;

  std::optional<std::string> opt_id;
  std::string from, to, arcrole;
  std::vector<std::string> arc_specs;
  std::optional<std::string> title;
  std::string lang = "en";
  std::string creator;
  std::optional<std::string> created;
  std::string space;
  std::optional<std::string> anchor_filter;
  std::optional<std::string> direction;

  std::string resource;
  std::optional<std::string> selector;
  std::optional<std::string> label;
  std::optional<std::string> resource_filter;

  std::string file;
  std::string query;

  std::string mode = "descriptive";
  std::vector<std::string> contexts;
  std::optional<std::string> root;
  std::optional<std::size_t> occurrence;

  std::string host = "127.0.0.1";
  int port = 8080;
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Semantic hypermedia engine for eLearning objects", "hylos"};
  app.require_subcommand(1);
  app.add_option("--repo", o.repo, "Repository directory")->envname("HYLOS_REPO");

  auto* ingest = app.add_subcommand("ingest", "Merge a repository directory into --repo");
  ingest->add_option("dir", o.ingest_dir)->required();

  auto* ls = app.add_subcommand("ls", "List ELOs, or the tree under a root");
  ls->add_option("--tree", o.tree_root, "Root ELO");
  ls->add_option("--max-depth", o.max_depth);

  auto* elo = app.add_subcommand("elo", "Inspect or remove ELOs");
  elo->require_subcommand(1);
  auto* elo_show = elo->add_subcommand("show", "Print an ELO document");
  elo_show->add_option("id", o.id)->required();
  auto* elo_check = elo->add_subcommand("check", "Report fields blocking publication");
  elo_check->add_option("id", o.id)->required();
  auto* elo_rm = elo->add_subcommand("rm", "Remove an ELO");
  elo_rm->add_option("id", o.id)->required();
  elo_rm->add_flag("--cascade", o.cascade, "Also remove anchors on it and links using them");

  auto* link = app.add_subcommand("link", "Manage links");
  link->require_subcommand(1);
  auto* link_add = link->add_subcommand("add", "Create a link");
  link_add->add_option("--id", o.opt_id);
  link_add->add_option("--from", o.from, "Source anchor of a single arc");
  link_add->add_option("--to", o.to, "Target anchor of a single arc");
  link_add->add_option("--arcrole", o.arcrole, "Arcrole IRI or rdf:/dc:/mir: name");
  link_add->add_option("--arc", o.arc_specs, "Additional arc FROM,TO,ARCROLE[,TITLE]");
  link_add->add_option("--title", o.title);
  link_add->add_option("--lang", o.lang, "Language of --title");
  link_add->add_option("--creator", o.creator);
  link_add->add_option("--created", o.created, "ISO-8601 date, default today");
  link_add->add_option("--space", o.space, "Path space");
  auto* link_list = link->add_subcommand("list", "List links");
  link_list->add_option("--space", o.space, "Path-space prefix");
  link_list->add_option("--anchor", o.anchor_filter);
  link_list->add_option("--direction", o.direction)->check(CLI::IsMember({"from", "to"}));
  auto* link_rm = link->add_subcommand("rm", "Remove a link");
  link_rm->add_option("id", o.id)->required();

  auto* anchor = app.add_subcommand("anchor", "Manage anchors");
  anchor->require_subcommand(1);
  auto* anchor_add = anchor->add_subcommand("add", "Create an anchor");
  anchor_add->add_option("--id", o.opt_id);
  anchor_add->add_option("--resource", o.resource, "ELO id or external IRI")->required();
  anchor_add->add_option("--selector", o.selector, "e.g. /paragraph/p[2]@4+7");
  anchor_add->add_option("--title", o.title);
  anchor_add->add_option("--label", o.label);
  auto* anchor_list = anchor->add_subcommand("list", "List anchors");
  anchor_list->add_option("--resource", o.resource_filter);
  auto* anchor_rm = anchor->add_subcommand("rm", "Remove an anchor");
  anchor_rm->add_option("id", o.id)->required();
  anchor_rm->add_flag("--cascade", o.cascade, "Also remove links using it");

  auto* context = app.add_subcommand("context", "Manage link contexts");
  context->require_subcommand(1);
  auto* context_add = context->add_subcommand("add", "Register a context definition file");
  context_add->add_option("file", o.file)->required();
  auto* context_list = context->add_subcommand("list", "List registered contexts");
  auto* context_rm = context->add_subcommand("rm", "Remove a context");
  context_rm->add_option("id", o.id)->required();

  auto* query = app.add_subcommand("query", "Evaluate an RDQL query, printing TSV");
  query->add_option("rdql", o.query)->required();

  auto* render = app.add_subcommand("render", "Render an ELO page as HTML");
  render->add_option("id", o.id)->required();
  render->add_option("--mode", o.mode)->check(CLI::IsMember({"descriptive", "slide"}));
  render->add_option("--context", o.contexts, "Active link context (repeatable)");
  render->add_option("--root", o.root, "Hierarchy root");
  render->add_option("--occurrence", o.occurrence, "Position in the linearized hierarchy");

  auto* graph = app.add_subcommand("graph", "Graph operations");
  graph->require_subcommand(1);
  auto* graph_dump = graph->add_subcommand("dump", "Print the graph as N-Triples");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--port", o.port)->envname("HYLOS_PORT");
  serve->add_option("--host", o.host);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const fs::path repo_dir = o.repo;
  try {
    if (ingest->parsed()) {
      State source = load_repository(o.ingest_dir);
      Workspace ws(load_or_empty(repo_dir), repo_dir);
      ws.mutate([&](State& state) { merge_into(state, source); });
      out << "ingested " << source.repo.elos().size() << " ELOs, " << source.base.anchors().size()
          << " anchors, " << source.base.links().size() << " links, "
          << source.contexts.all().size() << " contexts into " << repo_dir.string() << '\n';
      return 0;
    }

    if (ls->parsed()) {
      State state = load_repository(repo_dir);
      if (!o.tree_root.empty()) {
        print_tree(tree_view(state.repo, o.tree_root, o.max_depth), state.repo, out);
      } else {
        for (const auto& [id, e] : state.repo.elos()) out << id << '\t' << e.paragraph.title << '\n';
      }
      return 0;
    }

    if (elo_show->parsed()) {
      out << write_elo(load_repository(repo_dir).repo.get_elo(o.id));
      return 0;
    }
    if (elo_check->parsed()) {
      auto report = validate_for_publication(load_repository(repo_dir).repo.get_elo(o.id));
      for (const auto& line : report) out << line << '\n';
      if (!report.empty()) return 1;
      out << "publishable\n";
      return 0;
    }
    if (elo_rm->parsed()) {
      Workspace ws(load_repository(repo_dir), repo_dir);
      ws.mutate([&](State& state) {
        state.repo.get_elo(o.id);
        auto anchors = state.base.anchors_on(o.id);
        if (!anchors.empty() && !o.cascade) {
          throw DependencyError("ELO " + o.id + " carries " + std::to_string(anchors.size()) +
                                " anchor(s); use --cascade");
        }
        for (const auto& a : anchors) state.base.remove_anchor(a, true);
        state.repo.remove_elo(o.id);
      });
      return 0;
    }

    if (link_add->parsed()) {
      LinkDraft draft;
      draft.id = o.opt_id;
      if (!o.from.empty() || !o.to.empty() || !o.arcrole.empty()) {
        draft.arcs.push_back({o.from, o.to, o.arcrole, std::nullopt});
      }
      for (const auto& spec : o.arc_specs) draft.arcs.push_back(parse_arc_spec(spec));
      if (o.title) draft.titles.push_back({o.lang, *o.title});
      draft.creator = o.creator;
      draft.created = o.created.value_or(today_utc());
      draft.path_space = o.space;
      Workspace ws(load_repository(repo_dir), repo_dir);
      std::string id;
      ws.mutate([&](State& state) { id = state.base.create_link(draft); });
      out << id << '\n';
      return 0;
    }
    if (link_list->parsed()) {
      State state = load_repository(repo_dir);
      LinkQuery q;
      if (!o.space.empty()) q.path_space_prefix = o.space;
      q.touching_anchor = o.anchor_filter;
      if (o.direction) q.direction = *o.direction == "from" ? Direction::From : Direction::To;
      for (const auto& l : state.base.query_links(q)) {
        out << l.id << '\t' << l.path_space << '\t' << describe_arcs(l) << '\t'
            << l.title_for(state.config.language).value_or("") << '\n';
      }
      return 0;
    }
    if (link_rm->parsed()) {
      Workspace ws(load_repository(repo_dir), repo_dir);
      ws.mutate([&](State& state) { state.base.remove_link(o.id); });
      return 0;
    }

    if (anchor_add->parsed()) {
      AnchorDraft draft;
      draft.id = o.opt_id;
      draft.resource = o.resource;
      if (o.selector) draft.selector = Selector::parse(*o.selector);
      draft.title = o.title;
      draft.label = o.label;
      Workspace ws(load_repository(repo_dir), repo_dir);
      std::string id;
      ws.mutate([&](State& state) { id = state.base.create_anchor(state.repo, draft); });
      out << id << '\n';
      return 0;
    }
    if (anchor_list->parsed()) {
      State state = load_repository(repo_dir);
      for (const auto& [id, a] : state.base.anchors()) {
        if (o.resource_filter && a.resource != *o.resource_filter) continue;
        out << id << '\t' << a.resource << '\t' << (a.selector ? a.selector->to_string() : "*")
            << '\t' << a.title.value_or("") << '\n';
      }
      return 0;
    }
    if (anchor_rm->parsed()) {
      Workspace ws(load_repository(repo_dir), repo_dir);
      ws.mutate([&](State& state) { state.base.remove_anchor(o.id, o.cascade); });
      return 0;
    }

    if (context_add->parsed()) {
      LinkContext parsed = parse_context(read_text(o.file));
      Workspace ws(load_or_empty(repo_dir), repo_dir);
      ws.mutate([&](State& state) { state.contexts.add(parsed); });
      out << parsed.id << '\n';
      return 0;
    }
    if (context_list->parsed()) {
      State state = load_repository(repo_dir);
      for (const auto& c : state.contexts.all()) out << c.id << '\t' << c.title.text << '\n';
      return 0;
    }
    if (context_rm->parsed()) {
      Workspace ws(load_repository(repo_dir), repo_dir);
      ws.mutate([&](State& state) {
        state.contexts.get(o.id);
        state.contexts.remove(o.id);
      });
      return 0;
    }

    if (query->parsed()) {
      auto snap = make_snapshot(load_repository(repo_dir));
      out << rdql::evaluate(rdql::expand(rdql::parse(o.query)), snap->graph).to_tsv();
      return 0;
    }

    if (render->parsed()) {
      auto snap = make_snapshot(load_repository(repo_dir));
      PageRequest request;
      request.elo = o.id;
      request.mode = parse_view_mode(o.mode);
      request.contexts = o.contexts;
      request.root = o.root;
      request.occurrence = o.occurrence;
      out << render_page(*snap, request).html;
      return 0;
    }

    if (graph_dump->parsed()) {
      out << make_snapshot(load_repository(repo_dir))->graph.to_ntriples();
      return 0;
    }

    if (serve->parsed()) {
      Workspace ws(load_repository(repo_dir), repo_dir);
      Api api(ws);
      HttpServer server(api);
      out << "serving " << repo_dir.string() << " on http://" << o.host << ':' << o.port
          << std::endl;
      server.run(o.host, o.port);
      return 0;
    }
  } catch (const IntegrityError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace hylos
