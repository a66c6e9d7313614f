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

#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hylos/errors.hpp"
#include "hylos/statements.hpp"
#include "hylos/workspace.hpp"
#include "hylos/xml.hpp"

namespace hylos {
namespace {

using testing::make_elo;

constexpr std::string_view kAllLinks =
    "SELECT * WHERE (?l, <rdf:type>, <rdf:Statement>) USING "
    "rdf FOR <http://www.w3.org/1999/02/22-rdf-syntax-ns#>";

// Link targets of a page: every href plus the merged data-targets lists.
std::set<std::string> hrefs(const std::string& html) {
  static const std::regex attr(R"rx((?:href|data-targets)="([^"]*)")rx");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(html.begin(), html.end(), attr);
       it != std::sregex_iterator(); ++it) {
    std::string value = (*it)[1];
    for (std::size_t start = 0;;) {
      std::size_t comma = value.find(',', start);
      out.insert(value.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

PageView render(const State& s, const std::string& doc, const std::vector<std::string>& active) {
  Graph g = build_model(s.repo, s.base, s.iris());
  ContextSet set;
  for (const auto& id : active) set = activate(set, s.contexts, id);
  auto selected = links_for_document(doc, set, s.contexts, g, s.base, s.iris(), s.config.language);
  return render_descriptive(s.repo.get_elo(doc), selected, s.base, s.contexts, {}, active,
                            render_options(s));
}

// Source ELO "src" with text "alpha beta gamma", targets t1 and t2, and a
// context selecting every link.
class SpanTest : public ::testing::Test {
 protected:
  void SetUp() override {
    s_.repo.put_elo(make_elo("src", "Source", "<paragraph><p>alpha beta gamma</p></paragraph>"));
    s_.repo.put_elo(make_elo("t1", "T1"));
    s_.repo.put_elo(make_elo("t2", "T2"));
    anchor("t1", "t1", std::nullopt);
    anchor("t2", "t2", std::nullopt);
    s_.contexts.add(make_context("all", "", {"en", "All"}, {}, std::string(kAllLinks)));
  }
  void anchor(const std::string& id, const std::string& resource, std::optional<std::string> sel) {
    AnchorDraft d;
    d.id = id;
    d.resource = resource;
    if (sel) d.selector = Selector::parse(*sel);
    s_.base.create_anchor(s_.repo, d);
  }
  void link(const std::string& id, const std::string& from, const std::string& to) {
    LinkDraft d;
    d.id = id;
    d.arcs = {{from, to, "mir:SeeAlso", std::nullopt}};
    d.titles = {{"en", id}};
    d.created = "2004-01-01";
    s_.base.create_link(d);
  }
  State s_;
};

TEST_F(SpanTest, NestedSpansWrapOuterFirst) {
  anchor("outer", "src", "/paragraph/p@0+16");
  anchor("inner", "src", "/paragraph/p@6+4");
  link("lo", "outer", "t1");
  link("li", "inner", "t2");
  std::string html = render(s_, "src", {"all"}).html;
  std::regex nested(
      R"rx(<p><a class="elo-anchor-link" href="t1.html"[^>]*>alpha <a class="elo-anchor-link" href="t2.html"[^>]*>beta</a> gamma</a></p>)rx");
  EXPECT_TRUE(std::regex_search(html, nested)) << html;
  EXPECT_NO_THROW(xml::parse(html));
}

TEST_F(SpanTest, IdenticalSpansMerge) {
  anchor("one", "src", "/paragraph/p@6+4");
  anchor("two", "src", "/paragraph/p@6+4");
  link("la", "one", "t1");
  link("lb", "two", "t2");
  std::string html = render(s_, "src", {"all"}).html;
  EXPECT_EQ(count(html, "elo-anchor-link"), 1u) << html;
  EXPECT_NE(html.find("data-targets=\"t1.html,t2.html\""), std::string::npos) << html;
  EXPECT_NE(html.find(">beta</a>"), std::string::npos);
}

TEST_F(SpanTest, OverlappingSpansStayWellFormed) {
  anchor("left", "src", "/paragraph/p@0+10");
  anchor("right", "src", "/paragraph/p@6+10");
  link("l1", "left", "t1");
  link("l2", "right", "t2");
  std::string html = render(s_, "src", {"all"}).html;
  EXPECT_NO_THROW(xml::parse(html)) << html;
  EXPECT_EQ(hrefs(html), (std::set<std::string>{"t1.html", "t2.html"}));
  xml::Node doc = xml::parse(html);
  EXPECT_NE(doc.text_content().find("alpha beta gamma"), std::string::npos);
}

TEST_F(SpanTest, ElementAnchor) {
  anchor("para", "src", "/paragraph/p");
  link("lp", "para", "t1");
  std::string html = render(s_, "src", {"all"}).html;
  std::regex wrapped(R"rx(<a class="elo-anchor-link" href="t1.html"[^>]*><p>alpha beta gamma</p></a>)rx");
  EXPECT_TRUE(std::regex_search(html, wrapped)) << html;
}

TEST_F(SpanTest, GenericSourceGoesToRelatedList) {
  anchor("whole", "src", std::nullopt);
  link("lg", "whole", "t2");
  std::string html = render(s_, "src", {"all"}).html;
  EXPECT_NE(html.find("<ul class=\"elo-related\">"), std::string::npos);
  EXPECT_NE(html.find("href=\"t2.html\""), std::string::npos);
  EXPECT_NE(html.find("<p>alpha beta gamma</p>"), std::string::npos);
}

TEST_F(SpanTest, ExternalTargetKeepsIri) {
  anchor("span", "src", "/paragraph/p@0+5");
  anchor("ext", "http://example.org/a?b=1&c=2", std::nullopt);
  link("lx", "span", "ext");
  std::string html = render(s_, "src", {"all"}).html;
  EXPECT_NE(html.find("href=\"http://example.org/a?b=1&amp;c=2\""), std::string::npos) << html;
}

TEST_F(SpanTest, StaleSelectorIsRenderError) {
  anchor("late", "src", "/paragraph/p@10+6");
  link("ll", "late", "t1");
  Elo shorter = s_.repo.get_elo("src");
  shorter.paragraph.body = "<paragraph><p>short</p></paragraph>";
  s_.repo.put_elo(shorter);
  EXPECT_THROW(render(s_, "src", {"all"}), RenderError);
}

TEST(RenderDescriptiveTest, HamsterPageLinksHandbook) {
  State s = testing::hamster_state();
  PageView view = render(s, "hamster-text", {"link-context1"});
  EXPECT_NE(view.html.find("href=\"handbook.html\""), std::string::npos);
  EXPECT_NE(view.html.find(">hamster having hay fever</a>"), std::string::npos);
  EXPECT_NE(view.html.find("title=\"For freshman — Background Information\""), std::string::npos)
      << view.html;
  EXPECT_EQ(view.active_contexts, std::vector<std::string>{"link-context1"});
  EXPECT_EQ(view.badges.difficulty, "medium");
  EXPECT_NO_THROW(xml::parse(view.html));
}

TEST(RenderDescriptiveTest, ZeroLinksIsUndecorated) {
  State s = testing::hamster_state();
  std::string plain = render(s, "hamster-text", {}).html;
  EXPECT_EQ(plain, render_descriptive(s.repo.get_elo("hamster-text"), {}, s.base, s.contexts, {},
                                      {}, render_options(s))
                       .html);
  std::string decorated = render(s, "hamster-text", {"link-context1"}).html;
  std::regex tag(R"rx(<a class="elo-anchor-link"[^>]*>([^<]*)</a>)rx");
  EXPECT_EQ(std::regex_replace(decorated, tag, "$1"), plain);
  EXPECT_TRUE(hrefs(plain).empty());
}

TEST(RenderDescriptiveTest, IgnoresLinksOfOtherDocuments) {
  State s = testing::hamster_state();
  Graph g = build_model(s.repo, s.base);
  ContextSet set = activate({}, s.contexts, "link-context1");
  auto selected = links_for_document("hamster-text", set, s.contexts, g, s.base);
  const Elo& handbook = s.repo.get_elo("handbook");
  EXPECT_EQ(render_descriptive(handbook, selected, s.base, s.contexts).html,
            render_descriptive(handbook, {}, s.base, s.contexts).html);
}

TEST(RenderDescriptiveTest, HostileTextIsEscaped) {
  Elo e = make_elo("x", "<script>alert('x')</script> & \"q\"",
                   "<paragraph><p>a &lt;b&gt; &amp; c</p><custom kind=\"&quot;\">z</custom>"
                   "</paragraph>");
  e.metadata.educational.difficulty = "easy";
  std::string html = render_descriptive(e, {}, {}, {}).html;
  EXPECT_EQ(html.find("<script>"), std::string::npos);
  EXPECT_NE(html.find("&lt;script&gt;alert(&#39;x&#39;)&lt;/script&gt; &amp; &quot;q&quot;"),
            std::string::npos);
  EXPECT_NE(html.find("a &lt;b&gt; &amp; c"), std::string::npos);
  EXPECT_NE(html.find("elo-x-custom"), std::string::npos);
  EXPECT_NO_THROW(xml::parse(html));
}

TEST(RenderDescriptiveTest, NavigationHasNoHref) {
  Navigation nav{NavTarget{"a", 0}, NavTarget{"c", 3}, NavTarget{"b", 1}};
  std::string html = render_descriptive(make_elo("d", "D"), {}, {}, {}, nav).html;
  EXPECT_TRUE(hrefs(html).empty());
  EXPECT_NE(html.find("data-elo=\"c\" data-occurrence=\"3\""), std::string::npos);
}

TEST(RenderSlideTest, AuthoredSlideWins) {
  Elo e = make_elo("x", "Paragraph title");
  e.paragraph.sectional_titles = {"Derived"};
  e.slide = SlideContent{"Slide title", {"one", "two"}, std::nullopt};
  std::string html = render_slide(e).html;
  EXPECT_NE(html.find("<h1 class=\"elo-title\">Slide title</h1>"), std::string::npos);
  EXPECT_NE(html.find("<li>one</li>\n<li>two</li>"), std::string::npos);
  EXPECT_EQ(html.find("Derived"), std::string::npos);
}

TEST(RenderSlideTest, DerivedFromSectionalTitles) {
  Elo e = make_elo("x", "Title");
  e.paragraph.sectional_titles = {"Symptoms", "Treatment"};
  std::string html = render_slide(e).html;
  EXPECT_NE(html.find("<li>Symptoms</li>"), std::string::npos);
  EXPECT_NE(html.find("elo-slide"), std::string::npos);
}

TEST(RenderSlideTest, NothingToDerive) {
  Elo e = make_elo("x", "");
  EXPECT_THROW(render_slide(e), EmptySource);
}

TEST(ViewModeTest, ParseAndPrint) {
  EXPECT_EQ(parse_view_mode("slide"), ViewMode::Slide);
  EXPECT_EQ(to_string(parse_view_mode("descriptive")), "descriptive");
  EXPECT_THROW(parse_view_mode("pdf"), ValidationError);
}

TEST(PageHrefTest, Forms) {
  RenderOptions o;
  EXPECT_EQ(page_href("handbook", o), "handbook.html");
  o.href_prefix = "/elos/";
  o.href_suffix = "";
  EXPECT_EQ(page_href("handbook", o), "/elos/handbook");
  EXPECT_EQ(page_href("http://example.org/x", o), "http://example.org/x");
}

Repository abdc() {
  Repository repo;
  for (const char* id : {"a", "b", "c", "d"}) repo.put_elo(make_elo(id, id));
  repo.attach_child("a", "b", 0);
  repo.attach_child("a", "c", 1);
  repo.attach_child("b", "d", 0);
  return repo;
}

TEST(NavForTest, InnerPosition) {
  Navigation nav = nav_for(abdc(), "a", 2);
  EXPECT_EQ(nav.prev, (NavTarget{"b", 1}));
  EXPECT_EQ(nav.next, (NavTarget{"c", 3}));
  EXPECT_EQ(nav.up, (NavTarget{"b", 1}));
}

TEST(NavForTest, Boundaries) {
  Navigation first = nav_for(abdc(), "a", 0);
  EXPECT_FALSE(first.prev);
  EXPECT_FALSE(first.up);
  EXPECT_EQ(first.next, (NavTarget{"b", 1}));
  Navigation last = nav_for(abdc(), "a", 3);
  EXPECT_FALSE(last.next);
  EXPECT_EQ(last.up, (NavTarget{"a", 0}));
  EXPECT_THROW(nav_for(abdc(), "a", 4), NotFound);
}

TEST(NavForTest, SingleNode) {
  Repository repo;
  repo.put_elo(make_elo("solo", "solo"));
  EXPECT_EQ(nav_for(repo, "solo", 0), Navigation{});
}

TEST(NavForTest, DiamondOccurrencesHaveOwnParents) {
  Repository repo = testing::diamond_repo();
  EXPECT_EQ(nav_for(repo, "a", 2).up, (NavTarget{"b", 1}));
  EXPECT_EQ(nav_for(repo, "a", 4).up, (NavTarget{"c", 3}));
  EXPECT_EQ(first_occurrence(repo, "a", "d"), 2u);
  EXPECT_THROW(first_occurrence(repo, "b", "c"), NotFound);
}

TEST(RenderPropertyTest, DecorationSoundnessDeterminismEscaping) {
  testing::Rng rng(71);
  std::size_t decorated = 0;
  for (int round = 0; round < 40; ++round) {
    State s = testing::random_state(rng);
    RenderOptions options = render_options(s);
    Graph g = build_model(s.repo, s.base, s.iris());
    ContextSet all;
    for (const auto& c : s.contexts.all()) all = activate(all, s.contexts, c.id);
    for (const auto& [id, elo] : s.repo.elos()) {
      auto selected =
          links_for_document(id, all, s.contexts, g, s.base, s.iris(), s.config.language);
      std::set<std::string> expected;
      for (const auto& l : selected) {
        expected.insert(page_href(s.base.anchor(*s.iris().anchor_id(l.subject)).resource,
                                  options));
      }
      PageView view = render_descriptive(elo, selected, s.base, s.contexts, {}, all.ids(), options);
      ASSERT_EQ(hrefs(view.html), expected) << view.html;
      decorated += expected.size();

      PageView again = render_descriptive(elo, selected, s.base, s.contexts, {}, all.ids(), options);
      ASSERT_EQ(view.html, again.html);

      xml::Node doc = xml::parse(view.html);
      const xml::Node* body = nullptr;
      for (const auto& child : doc.children) {
        if (child.name == "body") body = &child;
      }
      ASSERT_NE(body, nullptr);
      const xml::Node* h1 = nullptr;
      for (const auto& child : body->children) {
        if (child.name == "h1") h1 = &child;
      }
      ASSERT_NE(h1, nullptr);
      ASSERT_EQ(h1->text_content(), elo.paragraph.title);
    }
  }
  EXPECT_GT(decorated, 0u);
}

}  // namespace
}  // namespace hylos
