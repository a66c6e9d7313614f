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

#include "hylos/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "hylos/errors.hpp"

namespace hylos {
namespace {

Triple t(std::string s, std::string p, Term o) {
  return {Term::iri(std::move(s)), Term::iri(std::move(p)), std::move(o)};
}

TEST(TermTest, NTriplesForms) {
  EXPECT_EQ(Term::iri("http://x/a").to_ntriples(), "<http://x/a>");
  EXPECT_EQ(Term::literal("hi").to_ntriples(), "\"hi\"");
  EXPECT_EQ(Term::literal("hi", "en").to_ntriples(), "\"hi\"@en");
  EXPECT_NE(Term::literal("hi", "en"), Term::literal("hi"));
  EXPECT_NE(Term::iri("x"), Term::literal("x"));
}

TEST(TermTest, LiteralEscaping) {
  EXPECT_EQ(escape_ntriples_literal("a\"b\\c\nd\re\tf"), "a\\\"b\\\\c\\nd\\re\\tf");
  EXPECT_EQ(Term::literal("\xC3\xA9").to_ntriples(), "\"\xC3\xA9\"");
}

TEST(GraphTest, SetSemanticsAndOrder) {
  Graph g({t("http://x/b", "http://x/p", Term::literal("1")),
           t("http://x/a", "http://x/p", Term::literal("1")),
           t("http://x/b", "http://x/p", Term::literal("1"))});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.triples()[0].subject.value(), "http://x/a");
  EXPECT_TRUE(g.contains(t("http://x/b", "http://x/p", Term::literal("1"))));
  EXPECT_FALSE(g.contains(t("http://x/b", "http://x/p", Term::literal("2"))));
}

TEST(GraphTest, MatchByComponent) {
  Graph g({t("http://x/a", "http://x/p", Term::iri("http://x/b")),
           t("http://x/a", "http://x/q", Term::literal("v")),
           t("http://x/c", "http://x/p", Term::iri("http://x/b"))});
  EXPECT_EQ(g.match({}).size(), 3u);
  EXPECT_EQ(g.match({Term::iri("http://x/a"), std::nullopt, std::nullopt}).size(), 2u);
  EXPECT_EQ(g.match({std::nullopt, Term::iri("http://x/p"), std::nullopt}).size(), 2u);
  EXPECT_EQ(g.match({std::nullopt, std::nullopt, Term::literal("v")}).size(), 1u);
  EXPECT_EQ(g.match({Term::iri("http://x/c"), Term::iri("http://x/p"), Term::iri("http://x/b")})
                .size(),
            1u);
  EXPECT_TRUE(g.match({Term::iri("http://x/unknown"), std::nullopt, std::nullopt}).empty());
}

TEST(GraphTest, MatchAgreesWithScan) {
  testing::Rng rng(31);
  const auto& pool = testing::term_pool();
  for (int round = 0; round < 200; ++round) {
    Graph g = testing::random_graph(rng, 30);
    TriplePatternMatch pattern;
    auto maybe = [&]() -> std::optional<Term> {
      if (testing::coin(rng)) return std::nullopt;
      return pool[testing::pick(rng, pool.size())];
    };
    pattern.subject = maybe();
    pattern.predicate = maybe();
    pattern.object = maybe();
    std::vector<Triple> expected;
    for (const auto& tr : g.triples()) {
      if (pattern.subject && tr.subject != *pattern.subject) continue;
      if (pattern.predicate && tr.predicate != *pattern.predicate) continue;
      if (pattern.object && tr.object != *pattern.object) continue;
      expected.push_back(tr);
    }
    ASSERT_EQ(g.match(pattern), expected);
  }
}

TEST(GraphTest, TermsAreDistinctAndSorted) {
  Graph g({t("http://x/a", "http://x/p", Term::iri("http://x/a"))});
  auto terms = g.terms();
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_TRUE(std::is_sorted(terms.begin(), terms.end()));
}

TEST(GraphTest, WithAddsTriples) {
  Graph g({t("http://x/a", "http://x/p", Term::literal("1"))});
  Graph more = g.with({t("http://x/b", "http://x/p", Term::literal("1"))});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(more.size(), 2u);
}

TEST(NTriplesTest, RoundTrip) {
  testing::Rng rng(32);
  for (int round = 0; round < 100; ++round) {
    std::vector<Triple> triples;
    for (int i = 0; i < 10; ++i) {
      triples.push_back(t("http://example.org/s" + std::to_string(testing::pick(rng, 3)),
                          "http://example.org/p",
                          testing::coin(rng)
                              ? Term::literal(testing::random_text(rng, true) + "\"\\\n\t",
                                              testing::coin(rng) ? "en" : "")
                              : Term::iri("http://example.org/o")));
    }
    Graph g(triples);
    ASSERT_EQ(Graph(parse_ntriples(g.to_ntriples())), g);
  }
}

TEST(NTriplesTest, DumpFormat) {
  Graph g({t("http://x/a", "http://x/p", Term::literal("v", "de"))});
  EXPECT_EQ(g.to_ntriples(), "<http://x/a> <http://x/p> \"v\"@de .\n");
}

TEST(NTriplesTest, ErrorsCarryLineNumber) {
  try {
    parse_ntriples("<http://x/a> <http://x/p> \"v\" .\n<http://x/a> <http://x/p> oops .\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_ntriples("<http://x/a> <http://x/p> \"v\""), FormatError);
}

TEST(FingerprintTest, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(fnv1a("foobar"), 0x85944171f73967e8ull);
}

TEST(FingerprintTest, EqualGraphsHashEqual) {
  Triple a = t("http://x/a", "http://x/p", Term::literal("1"));
  Triple b = t("http://x/b", "http://x/p", Term::literal("2"));
  EXPECT_EQ(Graph({a, b}).fingerprint(), Graph({b, a, b}).fingerprint());
  EXPECT_NE(Graph({a}).fingerprint(), Graph({a, b}).fingerprint());
}

}  // namespace
}  // namespace hylos
