#include <gtest/gtest.h>

#include <algorithm>

#include "zigzag/errors.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/triangulation.hpp"

using namespace zigzag;

namespace {

const char* kBp3Text = "f a 1 2\nf a 2 3\nf a 3 1\nf b 1 2\nf b 2 3\nf b 3 1\n";
const char* kTetraText = "f 1 2 3\nf 1 2 4\nf 1 3 4\nf 2 3 4\n";

std::vector<std::string> link_names(const Triangulation& t, std::string_view v) {
  std::vector<std::string> out;
  for (VertexIndex x : vertex_link(t, v).cycle) out.push_back(t.name(x));
  return out;
}

bool contains_message(const ValidationReport& r, std::string_view text) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(text) != std::string::npos; });
}

}  // namespace

TEST(Parse, BipyramidText) {
  const Triangulation t = parse_triangulation(kBp3Text);
  EXPECT_EQ(t.vertex_count(), 5u);
  EXPECT_EQ(t.edge_count(), 9u);
  EXPECT_EQ(t.face_count(), 6u);
  EXPECT_TRUE(validate(t).ok());
}

TEST(Parse, Tetrahedron) {
  const Triangulation t = parse_triangulation(kTetraText);
  EXPECT_EQ(t.face_count(), 4u);
  EXPECT_TRUE(validate(t).ok());
}

TEST(Parse, CommentsAndBlankLines) {
  const Triangulation t = parse_triangulation("# tetrahedron\n\nf 1 2 3  # first\nf 1 2 4\nf 1 3 4\nf 2 3 4\n");
  EXPECT_EQ(t, parse_triangulation(kTetraText));
}

TEST(Parse, DuplicateFaceNamesLine) {
  try {
    parse_triangulation("f a 1 2\nf a 1 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("duplicate face"), std::string::npos);
  }
}

TEST(Parse, DuplicateFaceInOtherOrder) { EXPECT_THROW(parse_triangulation("f a 1 2\nf 2 a 1\n"), ParseError); }

TEST(Parse, RepeatedVertex) { EXPECT_THROW(parse_triangulation("f a a 2\n"), ParseError); }

TEST(Parse, MalformedRecords) {
  EXPECT_THROW(parse_triangulation("f a 1\n"), ParseError);
  EXPECT_THROW(parse_triangulation("g a 1 2\n"), ParseError);
  EXPECT_THROW(parse_triangulation("f a 1 2 3\n"), ParseError);
}

TEST(Parse, SerializeRoundTrip) {
  for (const Triangulation& t : {bipyramid(7), platonic("icosahedron"), parse_triangulation(kBp3Text)}) {
    EXPECT_EQ(parse_triangulation(serialize_triangulation(t)), t);
  }
}

TEST(Validate, BoundaryEdge) {
  const Triangulation t = parse_triangulation("f 1 2 3\nf 1 2 4\nf 1 3 4\n");
  const ValidationReport r = validate(t);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(contains_message(r, "lies in 1 face"));
}

TEST(Validate, Disconnected) {
  const Triangulation t = parse_triangulation(std::string(kTetraText) + "f 5 6 7\nf 5 6 8\nf 5 7 8\nf 6 7 8\n");
  EXPECT_TRUE(contains_message(validate(t), "graph disconnected"));
}

TEST(Validate, PinchedVertexFailsLinkCheck) {
  // Two octahedra sharing the single vertex a.
  std::vector<FaceNames> faces = bipyramid(4).face_names();
  for (FaceNames f : bipyramid(4, "x").face_names()) {
    for (auto& v : f) {
      if (v == "xa") v = "a";
    }
    faces.push_back(f);
  }
  EXPECT_FALSE(validate(Triangulation::from_faces(faces)).ok());
}

TEST(Validate, EdgeInThreeFaces) {
  const Triangulation t = parse_triangulation(std::string(kTetraText) + "f 1 2 5\n");
  EXPECT_TRUE(contains_message(validate(t), "lies in 3 face"));
}

TEST(Link, BipyramidApex) { EXPECT_EQ(link_names(bipyramid(3), "a"), (std::vector<std::string>{"1", "2", "3"})); }

TEST(Link, BipyramidBaseVertex) {
  EXPECT_EQ(link_names(bipyramid(3), "1"), (std::vector<std::string>{"2", "a", "3", "b"}));
}

TEST(Link, Tetrahedron) {
  EXPECT_EQ(link_names(parse_triangulation(kTetraText), "1"), (std::vector<std::string>{"2", "3", "4"}));
}

TEST(Link, UnknownVertex) { EXPECT_THROW(vertex_link(bipyramid(3), "z"), DomainError); }

TEST(Euler, Examples) {
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(euler_characteristic(bipyramid(n)), 2) << n;
  EXPECT_EQ(euler_characteristic(platonic("tetrahedron")), 2);
  EXPECT_EQ(euler_characteristic(platonic("icosahedron")), 2);
}

TEST(Properties, IncidenceCounts) {
  std::vector<Triangulation> all{platonic("tetrahedron"), platonic("icosahedron")};
  for (int n = 3; n <= 12; ++n) all.push_back(bipyramid(n));
  for (const Triangulation& t : all) {
    EXPECT_EQ(3 * t.face_count(), 2 * t.edge_count());
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      const auto link = vertex_link(t, static_cast<VertexIndex>(v));
      EXPECT_EQ(link.cycle.size(), t.degree(static_cast<VertexIndex>(v)));
      EXPECT_EQ(link.cycle.size(), t.faces_of_vertex(static_cast<VertexIndex>(v)).size());
    }
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
      for (std::size_t j = i + 1; j < t.edge_count(); ++j) {
        std::size_t shared = 0;
        for (FaceIndex f : t.faces_of_edge(static_cast<EdgeIndex>(i))) {
          shared += t.face(f).contains(t.edge(static_cast<EdgeIndex>(j)));
        }
        EXPECT_LE(shared, 1u);
      }
    }
  }
}

TEST(Tokens, Validity) {
  EXPECT_TRUE(is_valid_token("node3.a+"));
  EXPECT_FALSE(is_valid_token(""));
  EXPECT_FALSE(is_valid_token("a b"));
  EXPECT_THROW(Triangulation::from_faces({{"a", "b", ""}}), DomainError);
}
