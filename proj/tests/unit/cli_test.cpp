// Copyright 2026 The infodiv Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>

#include "infodiv/csv.hpp"

namespace infodiv::cli {
namespace {

const std::string kDataDir = INFODIV_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kDataDir + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("infodiv_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, ClusterWritesJsonToStdout) {
  const auto r = invoke({"cluster", data("block.csv")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, read_file(data("block_dendrogram.json")));
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ClusterFormatsAndOutFile) {
  TempDir tmp;
  const auto out = tmp.path("tree.nwk");
  const auto r = invoke({"cluster", data("sample.csv"), "--stop", "full",
                         "--format", "newick", "--out", out});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(out), read_file(data("sample_full.newick")));

  for (const char* format : {"dot", "text", "svg"}) {
    const auto f = invoke({"cluster", data("block.csv"), "--format", format});
    EXPECT_EQ(f.code, kExitOk) << format << ": " << f.err;
    EXPECT_FALSE(f.out.empty());
  }
}

TEST(Cli, ExhaustiveModeMatchesOnBlockMatrix) {
  const auto r =
      invoke({"cluster", data("block.csv"), "--mode", "exhaustive"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, read_file(data("block_dendrogram.json")));
}

TEST(Cli, UsageErrorsExitOne) {
  auto r = invoke({"cluster", data("block.csv"), "--bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"cluster", data("block.csv"), "--format", "png"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"similarity", data("block.csv")}).code, kExitUsage);
  EXPECT_EQ(invoke({"entropy", data("block.csv")}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle", data("block.csv"), "--max-groups", "0"}).code,
            kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("cluster"), std::string::npos);
}

TEST(Cli, DataErrorsExitTwoWithCoordinates) {
  const auto r = invoke({"cluster", data("negative.csv")});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("NegativeValue"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line 2, column 3"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  EXPECT_EQ(invoke({"cluster", data("missing.csv")}).code, kExitData);
  EXPECT_EQ(invoke({"render", data("block.csv")}).code, kExitData);
}

TEST(Cli, DropZeroRowsIsReported) {
  TempDir tmp;
  const auto csv = tmp.file("z.csv", ",a,b\nzero,0,0\nr1,2,0\nr2,0,2\n");
  EXPECT_EQ(invoke({"cluster", csv}).code, kExitData);
  const auto r = invoke({"cluster", csv, "--drop-zero-rows"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("zero"), std::string::npos);
}

TEST(Cli, SimilarityCsv) {
  TempDir tmp;
  const auto csv = tmp.file("s.csv", ",a,b\na,1,2\nb,2,1\n");
  const auto r = invoke({"similarity", csv, "--measure", "cosine"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, ",a,b\na,1,0.8\nb,0.8,1\n");

  const auto p = invoke({"similarity", csv, "--measure", "pearson"});
  EXPECT_EQ(p.out, ",a,b\na,1,-1\nb,-1,1\n");

  const auto bad = invoke({"similarity", data("block.csv"), "--measure",
                           "pearson"});
  EXPECT_EQ(bad.code, kExitData);
}

TEST(Cli, Entropy) {
  TempDir tmp;
  const auto csv = tmp.file("m.csv", ",x,y\na,3,1\nb,1,3\nc,3,1\n");
  const auto groups = tmp.file("g.json", R"({"a": "one", "b": 2, "c": "one"})");
  const auto r = invoke({"entropy", csv, "--groups", groups});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"h0\": 0.168590"), std::string::npos) << r.out;
  // Group names sort as strings: "2" before "one".
  EXPECT_LT(r.out.find("\"name\": \"2\""), r.out.find("\"name\": \"one\""));

  const auto partial = tmp.file("p.json", R"({"a": "one", "b": "two"})");
  EXPECT_EQ(invoke({"entropy", csv, "--groups", partial}).code, kExitData);
  const auto extra =
      tmp.file("e.json", R"({"a": 1, "b": 2, "c": 1, "zz": 3})");
  EXPECT_EQ(invoke({"entropy", csv, "--groups", extra}).code, kExitData);
  const auto broken = tmp.file("b.json", "{");
  EXPECT_EQ(invoke({"entropy", csv, "--groups", broken}).code, kExitData);
}

TEST(Cli, Oracle) {
  const auto bisect = invoke({"oracle", data("block.csv")});
  EXPECT_EQ(bisect.code, kExitOk) << bisect.err;
  EXPECT_NE(bisect.out.find("\"gap\": 0"), std::string::npos);
  EXPECT_NE(bisect.out.find("\"candidates_examined\": 7"), std::string::npos);

  const auto part = invoke({"oracle", data("block.csv"), "--max-groups", "4"});
  EXPECT_EQ(part.code, kExitOk) << part.err;
  EXPECT_NE(part.out.find("\"candidates_examined\": 15"), std::string::npos);

  EXPECT_EQ(invoke({"oracle", data("block.csv"), "--max-groups", "5"}).code,
            kExitData);
}

TEST(Cli, RenderRoundTrip) {
  const auto r = invoke({"render", data("sample_full.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, read_file(data("sample_full.txt")));
  const auto svg =
      invoke({"render", data("sample_full.json"), "--format", "svg"});
  EXPECT_EQ(svg.code, kExitOk);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST(Cli, MalformedThreadsVariableIsUsageError) {
  ::setenv("INFODIV_THREADS", "lots", 1);
  const auto r = invoke({"cluster", data("block.csv")});
  ::unsetenv("INFODIV_THREADS");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("INFODIV_THREADS"), std::string::npos);
}

}  // namespace
}  // namespace infodiv::cli
