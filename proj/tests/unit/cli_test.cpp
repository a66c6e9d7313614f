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

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "hylos/http_api.hpp"
#include "hylos/persistence.hpp"

namespace hylos {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Outcome r = run({"--repo", repo(), "ingest", testing::sample_repository().string()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  std::string repo() const { return dir_.path().string(); }
  Outcome in_repo(std::vector<std::string> args) {
    args.insert(args.begin(), {"--repo", repo()});
    return run(std::move(args));
  }

  testing::TempDir dir_{"cli"};
};

TEST_F(CliTest, IngestCreatesRepository) {
  EXPECT_TRUE(fs::exists(dir_.path() / "linkbase.xml"));
  EXPECT_TRUE(fs::exists(dir_.path() / "elos" / "hamster-text.xml"));
  Outcome again = in_repo({"ingest", testing::sample_repository().string()});
  EXPECT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.out.rfind("ingested 3 ELOs, 2 anchors, 1 links, 1 contexts", 0), 0u) << again.out;
}

TEST_F(CliTest, QueryPrintsTsv) {
  Outcome r = in_repo({"query", std::string(testing::kBackgroundQuery)});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "?link\n<http://www.rz.fhtw-berlin.de/MIR#link1>\n");
}

TEST_F(CliTest, QueryErrors) {
  Outcome r = in_repo({"query", "SELECT * (?a,?b,?c)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("syntax error"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, RenderWithContext) {
  Outcome r = in_repo({"render", "hamster-text", "--context", "link-context1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("href=\"handbook.html\""), std::string::npos);
  Outcome plain = in_repo({"render", "hamster-text"});
  EXPECT_EQ(plain.out.find("handbook.html"), std::string::npos);
  Outcome slide = in_repo({"render", "hamster-text", "--mode", "slide"});
  EXPECT_NE(slide.out.find("elo-slide"), std::string::npos);
  EXPECT_EQ(in_repo({"render", "hamster-text", "--context", "nope"}).code, 1);
  EXPECT_EQ(in_repo({"render", "nope"}).code, 1);
}

TEST_F(CliTest, RenderMatchesHttpPage) {
  Outcome cli = in_repo({"render", "hamster-text", "--context", "link-context1"});
  Workspace ws(load_repository(dir_.path()));
  Api api(ws);
  HttpResponse r = api.handle(
      {"GET", "/api/elos/hamster-text/page", {{"contexts", "link-context1"}}, ""});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(nlohmann::json::parse(r.body)["html"].get<std::string>(), cli.out);
}

TEST_F(CliTest, UsageErrors) {
  Outcome unknown = in_repo({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(in_repo({}).code, 2);
  EXPECT_EQ(in_repo({"render"}).code, 2);
  EXPECT_EQ(in_repo({"render", "hamster-text", "--mode"}).code, 2);
  Outcome help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("ingest"), std::string::npos);
}

TEST_F(CliTest, ListingCommands) {
  Outcome ls = in_repo({"ls", "--tree", "vet-course"});
  EXPECT_EQ(ls.code, 0);
  EXPECT_NE(ls.out.find("\n  hamster-text\t"), std::string::npos) << ls.out;
  EXPECT_NE(in_repo({"link", "list"}).out.find("link1\tcourse1/unit2"), std::string::npos);
  EXPECT_NE(in_repo({"anchor", "list", "--resource", "handbook"}).out.find("handbook\thandbook"),
            std::string::npos);
  EXPECT_NE(in_repo({"context", "list"}).out.find("link-context1\tBackground Information"),
            std::string::npos);
  Outcome show = in_repo({"elo", "show", "hamster-text"});
  EXPECT_NE(show.out.find("about hamster diseases"), std::string::npos);
  EXPECT_EQ(in_repo({"elo", "show", "nope"}).code, 1);
}

TEST_F(CliTest, LinkAddPersists) {
  Outcome add = in_repo({"link", "add", "--id", "link2", "--from", "handbook", "--to", "hamster",
                     "--arcrole", "mir:Example", "--title", "Case", "--created", "2004-05-01",
                     "--space", "course1/unit2"});
  ASSERT_EQ(add.code, 0) << add.err;
  EXPECT_EQ(add.out, "link2\n");
  State s = load_repository(dir_.path());
  ASSERT_TRUE(s.base.find_link("link2"));
  EXPECT_EQ(s.base.link("link2").arcs[0].arcrole, "http://www.rz.fhtw-berlin.de/MIR#Example");
  Outcome dangling = in_repo({"link", "add", "--from", "handbook", "--to", "ghost", "--arcrole",
                          "mir:Example"});
  EXPECT_EQ(dangling.code, 1);
  EXPECT_NE(dangling.err.find("ghost"), std::string::npos);
}

TEST_F(CliTest, AnchorAndEloRemoval) {
  Outcome add = in_repo({"anchor", "add", "--resource", "handbook", "--id", "hb-text", "--selector",
                     "/paragraph/p@0+9"});
  ASSERT_EQ(add.code, 0) << add.err;
  EXPECT_EQ(in_repo({"anchor", "rm", "handbook"}).code, 1);
  EXPECT_EQ(in_repo({"elo", "rm", "handbook"}).code, 1);
  Outcome cascade = in_repo({"elo", "rm", "handbook", "--cascade"});
  EXPECT_EQ(cascade.code, 0) << cascade.err;
  State s = load_repository(dir_.path());
  EXPECT_FALSE(s.repo.contains("handbook"));
  EXPECT_FALSE(s.base.find_anchor("hb-text"));
  EXPECT_FALSE(s.base.find_link("link1"));
}

TEST_F(CliTest, ContextAddAndRemove) {
  fs::path file = dir_.path() / "incoming.xml";
  std::string doc(testing::kBackgroundContext);
  doc.replace(doc.find("link-context1"), 13, "link-context2");
  testing::write_file(file, doc);
  Outcome add = in_repo({"context", "add", file.string()});
  ASSERT_EQ(add.code, 0) << add.err;
  EXPECT_EQ(add.out, "link-context2\n");
  EXPECT_EQ(in_repo({"context", "rm", "link-context2"}).code, 0);
  EXPECT_EQ(in_repo({"context", "rm", "link-context2"}).code, 1);
}

TEST_F(CliTest, GraphDump) {
  Outcome r = in_repo({"graph", "dump"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("<http://www.rz.fhtw-berlin.de/MIR#link1> "
                       "<http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> "
                       "<http://www.rz.fhtw-berlin.de/MIR#anchor-handbook> ."),
            std::string::npos);
}

TEST(CliRepoTest, MissingRepository) {
  Outcome r = run({"--repo", "/nonexistent/hylos", "ls"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace hylos
