#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zigzag/cli.hpp"
#include "zigzag/eulerian.hpp"
#include "zigzag/generators.hpp"

using namespace zigzag;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zigzag_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST(Cli, GenerateToStdout) {
  const CliRun r = run({"generate", "bipyramid", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(parse_triangulation(r.out).same_faces(bipyramid(3)));
  EXPECT_NE(r.err.find("zigzags: 1 (z-knotted)"), std::string::npos);
}

TEST(Cli, GeneratePlatonic) {
  const CliRun r = run({"generate", "platonic", "--name", "icosahedron"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_triangulation(r.out).face_count(), 20u);
  EXPECT_EQ(run({"generate", "platonic", "--name", "cube"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"generate", "bipyramid"}).code, 2);
  EXPECT_EQ(run({"generate", "bipyramid", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"analyze", "f.tri", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"convert"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run({"generate", "bipyramid", "--n", "2"}).code, 1);
  const CliRun missing = run({"analyze", "/nonexistent/x.tri"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("error:", 0), 0u);
}

TEST_F(CliFiles, AnalyzeTextAndTsv) {
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "6", "-o", path("bp6.tri")}).code, 0);
  const CliRun text = run({"analyze", path("bp6.tri"), "--zorient", "01"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("census: 2 zigzags × length 18"), std::string::npos);
  EXPECT_NE(text.out.find("homogeneous: yes"), std::string::npos);
  EXPECT_NE(text.out.find("special pairs: not applicable"), std::string::npos);
  const CliRun tsv = run({"analyze", path("bp6.tri"), "--zorient", "01", "--format", "tsv"});
  EXPECT_NE(tsv.out.find("zigzags\t2\n"), std::string::npos);
  EXPECT_NE(tsv.out.find("type_ii_edges\t6\n"), std::string::npos);
  EXPECT_EQ(run({"analyze", path("bp6.tri"), "--zorient", "0"}).code, 1);
}

TEST_F(CliFiles, AnalyzeListing) {
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "3", "-o", path("bp3.tri")}).code, 0);
  const CliRun r = run({"analyze", path("bp3.tri"), "--listing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("z 0 18\n"), std::string::npos);
  EXPECT_EQ(count(r.out, "\nE "), 9u);
  EXPECT_EQ(count(r.out, "\nV "), 5u);
  EXPECT_EQ(count(r.out, "\nF "), 6u);
  EXPECT_NE(r.out.find("special pairs: 3"), std::string::npos);
}

TEST_F(CliFiles, ConvertRoundTrip) {
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "5", "-o", path("bp5.tri")}).code, 0);
  ASSERT_EQ(run({"convert", "--extract", path("bp5.tri"), "-o", path("bp5.eul")}).code, 0);
  const DirectedEmbedding d = parse_embedding(slurp(path("bp5.eul")));
  EXPECT_EQ(d.arcs.size(), 5u);
  ASSERT_EQ(run({"convert", "--triangulate", path("bp5.eul"), "-o", path("back.tri")}).code, 0);
  EXPECT_TRUE(parse_triangulation(slurp(path("back.tri"))).same_faces(bipyramid(5)));
}

TEST_F(CliFiles, ConvertNeedsExactlyOneDirection) {
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "4", "-o", path("bp4.tri")}).code, 0);
  EXPECT_EQ(run({"convert", "--extract", path("bp4.tri"), "--triangulate", path("bp4.tri")}).code, 2);
  EXPECT_EQ(run({"convert", "--extract", path("bp4.tri"), "--zorient", "0000"}).code, 1);
}

TEST_F(CliFiles, Glue) {
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "3", "-o", path("bp3.tri")}).code, 0);
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "4", "-o", path("bp4.tri")}).code, 0);
  const CliRun r = run({"glue", "--host", path("bp3.tri"), "--piece", path("bp4.tri"), "--host-pair", "1,2,3",
                     "--piece-pair", "1,2,3", "-o", path("g.tri")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Triangulation g = parse_triangulation(slurp(path("g.tri")));
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 21u);
  EXPECT_EQ(g.face_count(), 14u);
  EXPECT_TRUE(g.find_vertex("L.a").has_value());
  EXPECT_TRUE(g.find_vertex("R.b").has_value());
  const CliRun bad = run({"glue", "--host", path("bp3.tri"), "--piece", path("bp4.tri"), "--host-pair", "1,2,3",
                       "--piece-pair", "3,2,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(run({"glue", "--host", path("bp3.tri"), "--piece", path("bp4.tri"), "--host-pair", "1,2",
                 "--piece-pair", "1,2,3"})
                .code,
            1);
}

TEST_F(CliFiles, BuildTreeAndVerify) {
  const std::string tree = write("star.tree", "n 1 5\nn 2 4\nn 3 6\na 1 2\na 1 3\n");
  const CliRun r = run({"build-tree", tree, "-o", path("star.tri")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Triangulation t = parse_triangulation(slurp(path("star.tri")));
  EXPECT_EQ(t.vertex_count(), 17u);
  EXPECT_EQ(t.edge_count(), 45u);
  EXPECT_EQ(t.face_count(), 30u);
  EXPECT_EQ(run({"verify", path("star.tri")}).code, 0);

  const std::string bad = write("bad.tree", "n 1 3\nn 2 2\na 1 2\n");
  const CliRun rejected = run({"build-tree", bad});
  EXPECT_EQ(rejected.code, 1);
  EXPECT_NE(rejected.err.find("at least 4"), std::string::npos);
}

TEST_F(CliFiles, VerifyRejectsNonSurface) {
  const std::string f = write("disc.tri", "f 1 2 3\n");
  EXPECT_EQ(run({"verify", f}).code, 1);
}

TEST_F(CliFiles, ExportDot) {
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "3", "-o", path("bp3.tri")}).code, 0);
  const CliRun classified = run({"export-dot", path("bp3.tri"), "--zorient", "0"});
  EXPECT_EQ(classified.code, 0);
  EXPECT_EQ(classified.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(classified.out, "[style=bold]"), 3u);
  EXPECT_EQ(count(classified.out, "[dir=none]"), 6u);

  ASSERT_EQ(run({"generate", "platonic", "--name", "tetrahedron", "-o", path("tet.tri")}).code, 0);
  const CliRun plain = run({"export-dot", path("tet.tri")});
  EXPECT_EQ(plain.out.rfind("graph", 0), 0u);
  EXPECT_EQ(count(plain.out, " -- "), 6u);
  EXPECT_EQ(count(plain.out, "->"), 0u);
}

TEST_F(CliFiles, Deterministic) {
  const std::string tree = write("chain.tree", "n 1 3\nn 2 4\nn 3 6\na 1 2\na 2 3\n");
  const CliRun a = run({"build-tree", tree});
  const CliRun b = run({"build-tree", tree});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  ASSERT_EQ(run({"generate", "bipyramid", "--n", "7", "-o", path("bp7.tri")}).code, 0);
  EXPECT_EQ(run({"analyze", path("bp7.tri")}).out, run({"analyze", path("bp7.tri")}).out);
}
