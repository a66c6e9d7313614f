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

#include "hylos/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "hylos/errors.hpp"
#include "hylos/selector.hpp"
#include "hylos/xml.hpp"

namespace hylos {

namespace {

constexpr std::string_view kTitleSeparator = " — ";

struct Occurrence {
  std::string id;
  std::optional<std::size_t> parent;
};

void collect_occurrences(const TreeNode& node, std::optional<std::size_t> parent,
                         std::vector<Occurrence>& out) {
  std::size_t self = out.size();
  out.push_back({node.id, parent});
  for (const auto& child : node.children) collect_occurrences(child, self, out);
}

std::vector<Occurrence> occurrences(const Repository& repo, std::string_view root) {
  std::vector<Occurrence> out;
  collect_occurrences(tree_view(repo, root), std::nullopt, out);
  return out;
}

// One anchor element in the output; several links whose source spans are
// identical share it.
struct Decoration {
  std::vector<std::string> links;
  std::vector<std::string> hrefs;
  std::vector<std::string> titles;
  std::vector<std::string> labels;

  void add(const std::string& link, const std::string& href, const std::string& title,
           const std::string& label) {
    auto push_unique = [](std::vector<std::string>& v, const std::string& s) {
      if (!s.empty() && std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
    };
    push_unique(links, link);
    push_unique(hrefs, href);
    push_unique(titles, title);
    push_unique(labels, label);
  }

  std::string open_tag() const {
    std::string out = "<a class=\"elo-anchor-link\" href=\"" + escape_html(hrefs.front()) + "\"";
    if (!titles.empty()) {
      std::string joined;
      for (const auto& t : titles) joined += (joined.empty() ? "" : "; ") + t;
      out += " title=\"" + escape_html(joined) + "\"";
    }
    std::string link_list;
    for (const auto& l : links) link_list += (link_list.empty() ? "" : ",") + l;
    out += " data-link=\"" + escape_html(link_list) + "\"";
    if (hrefs.size() > 1) {
      std::string targets;
      for (const auto& h : hrefs) targets += (targets.empty() ? "" : ",") + h;
      out += " data-targets=\"" + escape_html(targets) + "\"";
    }
    return out + ">";
  }
};

struct RangeDecoration {
  std::size_t start = 0;
  std::size_t end = 0;
  Decoration decoration;
};

struct HtmlTag {
  std::string_view tag;
  std::string cls;
  bool is_void = false;
};

HtmlTag map_tag(std::string_view name) {
  static const std::map<std::string_view, std::string_view> simple = {
      {"section", "section"}, {"title", "h2"},     {"heading", "h2"}, {"p", "p"},
      {"para", "p"},          {"em", "em"},        {"emphasis", "em"}, {"i", "em"},
      {"strong", "strong"},   {"b", "strong"},     {"code", "code"},  {"list", "ul"},
      {"ul", "ul"},           {"ol", "ol"},        {"item", "li"},    {"li", "li"},
      {"quote", "blockquote"}};
  if (name == "paragraph") return {"div", "elo-paragraph", false};
  if (name == "image" || name == "img") return {"img", "", true};
  if (name == "br") return {"br", "", true};
  if (auto it = simple.find(name); it != simple.end()) return {it->second, "", false};
  std::string cls = "elo-x-";
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
    cls += ok ? c : '-';
  }
  return {"span", cls, false};
}

class BodyRenderer {
 public:
  explicit BodyRenderer(const xml::Node& root) : root_(root) { measure(root_); }

  const xml::Node& root() const { return root_; }

  std::pair<std::size_t, std::size_t> extent(const xml::Node* element) const {
    return extents_.at(element);
  }

  Decoration& element_decoration(const xml::Node* element) {
    auto [it, inserted] = element_index_.try_emplace(element, element_decorations_.size());
    if (inserted) element_decorations_.emplace_back();
    return element_decorations_[it->second];
  }

  Decoration& range_decoration(std::size_t start, std::size_t end) {
    auto key = std::make_pair(start, end);
    auto [it, inserted] = range_index_.try_emplace(key, ranges_.size());
    if (inserted) ranges_.push_back({start, end, {}});
    return ranges_[it->second].decoration;
  }

  std::string render() {
    std::string out;
    emit(root_, out);
    return out;
  }

 private:
  std::size_t measure(const xml::Node& node) {
    if (node.is_text()) {
      text_start_[&node] = cursor_;
      cursor_ += count_code_points(node.text);
      return cursor_;
    }
    std::size_t begin = cursor_;
    for (const auto& child : node.children) measure(child);
    extents_[&node] = {begin, cursor_};
    return cursor_;
  }

  void emit(const xml::Node& node, std::string& out) {
    if (node.is_text()) {
      emit_text(node, out);
      return;
    }
    if (!node.is_element()) return;
    const Decoration* wrap = nullptr;
    if (auto it = element_index_.find(&node); it != element_index_.end()) {
      wrap = &element_decorations_[it->second];
    }
    if (wrap) out += wrap->open_tag();

    HtmlTag tag = map_tag(node.name);
    out += '<';
    out += tag.tag;
    if (!tag.cls.empty()) out += " class=\"" + tag.cls + "\"";
    if (tag.tag == "img") {
      const std::string* src = node.attribute("src");
      if (!src) src = node.attribute("href");
      if (src) out += " src=\"" + escape_html(*src) + "\"";
      const std::string* alt = node.attribute("alt");
      out += " alt=\"" + escape_html(alt ? *alt : node.text_content()) + "\"";
    }
    if (tag.is_void) {
      out += "/>";
    } else {
      out += '>';
      for (const auto& child : node.children) emit(child, out);
      out += "</";
      out += tag.tag;
      out += '>';
    }
    if (wrap) out += "</a>";
  }

  // Splits a text node at range boundaries and keeps a stack of open anchor
  // elements, outermost span first. Anchors never cross element boundaries.
  void emit_text(const xml::Node& node, std::string& out) {
    std::size_t g = text_start_.at(&node);
    std::size_t len = count_code_points(node.text);
    if (len == 0) return;
    std::set<std::size_t> cuts = {0, len};
    for (const auto& r : ranges_) {
      if (r.start > g && r.start < g + len) cuts.insert(r.start - g);
      if (r.end > g && r.end < g + len) cuts.insert(r.end - g);
    }
    std::vector<const RangeDecoration*> open;
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
      std::size_t a = *it;
      std::size_t b = *std::next(it);
      std::vector<const RangeDecoration*> active;
      for (const auto& r : ranges_) {
        if (r.start <= g + a && r.end >= g + b) active.push_back(&r);
      }
      std::sort(active.begin(), active.end(), [](const auto* x, const auto* y) {
        if (x->start != y->start) return x->start < y->start;
        if (x->end != y->end) return x->end > y->end;
        return x->decoration.links.front() < y->decoration.links.front();
      });
      std::size_t keep = 0;
      while (keep < open.size() && keep < active.size() && open[keep] == active[keep]) ++keep;
      for (std::size_t i = open.size(); i > keep; --i) out += "</a>";
      open.resize(keep);
      for (std::size_t i = keep; i < active.size(); ++i) {
        out += active[i]->decoration.open_tag();
        open.push_back(active[i]);
      }
      std::size_t from = code_point_offset(node.text, a);
      std::size_t to = code_point_offset(node.text, b);
      out += escape_html(std::string_view(node.text).substr(from, to - from));
    }
    for (std::size_t i = 0; i < open.size(); ++i) out += "</a>";
  }

  const xml::Node& root_;
  std::size_t cursor_ = 0;
  std::unordered_map<const xml::Node*, std::size_t> text_start_;
  std::unordered_map<const xml::Node*, std::pair<std::size_t, std::size_t>> extents_;
  std::unordered_map<const xml::Node*, std::size_t> element_index_;
  std::vector<Decoration> element_decorations_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> range_index_;
  std::vector<RangeDecoration> ranges_;
};

xml::Node parse_for_render(const std::string& body) {
  try {
    return xml::parse(body);
  } catch (const xml::SyntaxError& e) {
    throw RenderError(std::string("content is not well-formed: ") + e.what());
  }
}

std::optional<std::string> link_title(const SelectedLink& sel, const LinkBase& base,
                                      const RenderOptions& options) {
  if (auto id = options.iris.link_id(sel.link)) {
    if (const Link* link = base.find_link(*id)) {
      if (auto t = link->title_for(options.language)) return t;
    }
  }
  return sel.title;
}

std::string decoration_title(const SelectedLink& sel, const LinkBase& base,
                             const ContextRegistry& contexts, const RenderOptions& options) {
  std::string out = link_title(sel, base, options).value_or("");
  if (const LinkContext* ctx = contexts.find(sel.via_context); ctx && !ctx->title.text.empty()) {
    if (!out.empty()) out += kTitleSeparator;
    out += ctx->title.text;
  }
  return out;
}

struct PageParts {
  const Elo& elo;
  ViewMode mode;
  std::string heading;
  std::string main;
  const Navigation& nav;
  const RenderOptions& options;
};

void nav_item(std::string& out, const char* cls, const char* rel, const char* label,
              const std::optional<NavTarget>& target) {
  if (!target) return;
  out += "<a class=\"" + std::string(cls) + "\" rel=\"" + rel + "\" data-elo=\"" +
         escape_html(target->id) + "\" data-occurrence=\"" + std::to_string(target->occurrence) +
         "\">" + label + "</a>\n";
}

Badges badges_of(const Elo& elo) {
  return {elo.metadata.educational.difficulty, elo.metadata.educational.semantic_density};
}

std::string page(const PageParts& parts) {
  const Badges badges = badges_of(parts.elo);
  std::string out = "<!DOCTYPE html>\n<html lang=\"" + escape_html(parts.options.language) +
                    "\">\n<head>\n<meta charset=\"utf-8\"/>\n<title>" +
                    escape_html(parts.heading) + "</title>\n</head>\n";
  out += "<body class=\"elo-page elo-" + std::string(to_string(parts.mode)) + "\" data-elo=\"" +
         escape_html(parts.elo.id) + "\">\n";
  out += "<nav class=\"elo-nav\">\n";
  nav_item(out, "elo-nav-up", "up", "Up", parts.nav.up);
  nav_item(out, "elo-nav-prev", "prev", "Previous", parts.nav.prev);
  nav_item(out, "elo-nav-next", "next", "Next", parts.nav.next);
  out += "</nav>\n";
  out += "<h1 class=\"elo-title\">" + escape_html(parts.heading) + "</h1>\n";
  if (badges.difficulty || badges.semantic_density) {
    out += "<div class=\"elo-badges\">";
    if (badges.difficulty) {
      out += "<span class=\"elo-badge elo-badge-difficulty\" data-kind=\"difficulty\">" +
             escape_html(*badges.difficulty) + "</span>";
    }
    if (badges.semantic_density) {
      out += "<span class=\"elo-badge elo-badge-semantic-density\" "
             "data-kind=\"semanticDensity\">" +
             escape_html(*badges.semantic_density) + "</span>";
    }
    out += "</div>\n";
  }
  out += parts.main;
  out += "</body>\n</html>\n";
  return out;
}

}  // namespace

std::string_view to_string(ViewMode mode) {
  return mode == ViewMode::Slide ? "slide" : "descriptive";
}

ViewMode parse_view_mode(std::string_view text) {
  if (text == "descriptive") return ViewMode::Descriptive;
  if (text == "slide") return ViewMode::Slide;
  throw ValidationError("unknown view mode '" + std::string(text) +
                        "' (expected descriptive or slide)");
}

std::string page_href(std::string_view resource, const RenderOptions& options) {
  if (looks_absolute(resource)) return std::string(resource);
  return options.href_prefix + std::string(resource) + options.href_suffix;
}

Navigation nav_for(const Repository& repo, std::string_view root, std::size_t occurrence) {
  auto occ = occurrences(repo, root);
  if (occurrence >= occ.size()) {
    throw NotFound("occurrence", std::string(root) + "#" + std::to_string(occurrence));
  }
  Navigation nav;
  if (occurrence > 0) nav.prev = NavTarget{occ[occurrence - 1].id, occurrence - 1};
  if (occurrence + 1 < occ.size()) nav.next = NavTarget{occ[occurrence + 1].id, occurrence + 1};
  if (auto parent = occ[occurrence].parent) nav.up = NavTarget{occ[*parent].id, *parent};
  return nav;
}

std::size_t first_occurrence(const Repository& repo, std::string_view root,
                             std::string_view id) {
  auto occ = occurrences(repo, root);
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i].id == id) return i;
  }
  throw NotFound("ELO under " + std::string(root), std::string(id));
}

PageView render_descriptive(const Elo& elo, const std::vector<SelectedLink>& selected,
                            const LinkBase& base, const ContextRegistry& contexts,
                            const Navigation& nav,
                            const std::vector<std::string>& active_contexts,
                            const RenderOptions& options) {
  xml::Node body = parse_for_render(elo.paragraph.body);
  BodyRenderer renderer(body);

  // Apply in link order so merged decorations list their links sorted.
  std::vector<const SelectedLink*> ordered;
  for (const auto& s : selected) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->link < b->link; });

  std::map<std::string, Decoration> related;
  for (const SelectedLink* sel : ordered) {
    auto source_id = options.iris.anchor_id(sel->object);
    auto target_id = options.iris.anchor_id(sel->subject);
    const Anchor* source = source_id ? base.find_anchor(*source_id) : nullptr;
    const Anchor* target = target_id ? base.find_anchor(*target_id) : nullptr;
    if (!source || !target || source->resource != elo.id) continue;

    std::string href = page_href(target->resource, options);
    std::string title = decoration_title(*sel, base, contexts, options);
    if (!source->selector) {
      std::string label = link_title(*sel, base, options)
                              .value_or(target->title.value_or(target->resource));
      related[sel->link].add(sel->link, href, title, label);
      continue;
    }
    FragmentSpan span;
    try {
      span = resolve_selector(*source->selector, renderer.root());
    } catch (const DanglingSelector& e) {
      throw RenderError("anchor " + source->id + " no longer resolves: " + e.what());
    } catch (const RangeError& e) {
      throw RenderError("anchor " + source->id + " no longer resolves: " + e.what());
    }
    const xml::Node* element = &renderer.root();
    for (auto i : span.child_indices) element = &element->children[i];
    if (span.range) {
      std::size_t start = renderer.extent(element).first + span.range->start;
      renderer.range_decoration(start, start + span.range->length)
          .add(sel->link, href, title, {});
    } else {
      renderer.element_decoration(element).add(sel->link, href, title, {});
    }
  }

  std::string main = "<div class=\"elo-body\">" + renderer.render() + "</div>\n";
  if (!related.empty()) {
    main += "<ul class=\"elo-related\">\n";
    for (const auto& [link, deco] : related) {
      main += "<li>" + deco.open_tag() + escape_html(deco.labels.front()) + "</a></li>\n";
    }
    main += "</ul>\n";
  }

  PageView view;
  view.elo_id = elo.id;
  view.mode = ViewMode::Descriptive;
  view.nav = nav;
  view.active_contexts = active_contexts;
  view.badges = badges_of(elo);
  view.html = page({elo, ViewMode::Descriptive, elo.paragraph.title, main, nav, options});
  return view;
}

PageView render_slide(const Elo& elo, const Navigation& nav,
                      const std::vector<std::string>& active_contexts,
                      const RenderOptions& options) {
  SlideContent slide = elo.slide ? *elo.slide : derive_standard_slide(elo.paragraph);
  std::string main;
  if (!slide.bullets.empty()) {
    main += "<ul class=\"elo-slide-bullets\">\n";
    for (const auto& b : slide.bullets) main += "<li>" + escape_html(b) + "</li>\n";
    main += "</ul>\n";
  }
  if (slide.body && !xml::is_blank(*slide.body)) {
    xml::Node body = parse_for_render(*slide.body);
    main += "<div class=\"elo-body\">" + BodyRenderer(body).render() + "</div>\n";
  }

  PageView view;
  view.elo_id = elo.id;
  view.mode = ViewMode::Slide;
  view.nav = nav;
  view.active_contexts = active_contexts;
  view.badges = badges_of(elo);
  view.html = page({elo, ViewMode::Slide, slide.title, main, nav, options});
  return view;
}

std::string escape_html(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace hylos
