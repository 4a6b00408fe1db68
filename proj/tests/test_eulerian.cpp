#include <gtest/gtest.h>

#include <numeric>

#include "zigzag/errors.hpp"
#include "zigzag/eulerian.hpp"
#include "zigzag/generators.hpp"

using namespace zigzag;

namespace {

DirectedEmbedding directed_triangle() {
  DirectedEmbedding d;
  d.vertices = {"1", "2", "3"};
  d.arcs = {{1, "1", "2"}, {2, "2", "3"}, {3, "3", "1"}};
  d.faces = {{"a", {1, 2, 3}}, {"b", {2, 3, 1}}};
  return d;
}

ZOrientation all_type_ii(const Triangulation& t) {
  for (const ZOrientation& tau : all_z_orientations(t)) {
    const Classification c = classify(t, tau);
    if (c.count_faces(ZType::II) == t.face_count()) return tau;
  }
  throw std::logic_error("no orientation with all faces of type II");
}

bool mentions(const ValidationReport& r, std::string_view text) {
  for (const auto& v : r.violations) {
    if (v.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Extract, Bipyramid3) {
  const Triangulation t = bipyramid(3);
  const DirectedEmbedding d = extract_directed_embedding(t, bipyramid_canonical_zorientation(3));
  EXPECT_EQ(d.vertices, (std::vector<std::string>{"1", "2", "3"}));
  ASSERT_EQ(d.arcs.size(), 3u);
  EXPECT_TRUE(equivalent(d, directed_triangle()));
  EXPECT_TRUE(validate(d).ok());
}

TEST(Extract, Bipyramid5Pentagon) {
  const DirectedEmbedding d = extract_directed_embedding(bipyramid(5), bipyramid_canonical_zorientation(5));
  EXPECT_EQ(d.vertices.size(), 5u);
  ASSERT_EQ(d.faces.size(), 2u);
  EXPECT_EQ(*d.faces[0].name, "a");
  EXPECT_EQ(*d.faces[1].name, "b");
  for (const Arc& a : d.arcs) EXPECT_EQ(std::stoi(a.to), std::stoi(a.from) % 5 + 1);
}

TEST(Extract, RequiresHomogeneity) {
  const Triangulation t = bipyramid(4);
  EXPECT_THROW(extract_directed_embedding(t, make_z_orientation(t, parse_bits("0000"))), DomainError);
}

TEST(Triangulate, DirectedTriangleGivesBipyramid3) {
  const OrientedTriangulation r = triangulate_embedding(directed_triangle());
  EXPECT_TRUE(r.triangulation.same_faces(bipyramid(3)));
  EXPECT_EQ(r.orientation, bipyramid_canonical_zorientation(3));
}

TEST(Triangulate, SixGonalAllTypeII) {
  const Triangulation bp6 = bipyramid(6);
  const DirectedEmbedding d = embedding_of_type_ii_faces(bp6, all_type_ii(bp6));
  ASSERT_TRUE(validate(d).ok());
  const OrientedTriangulation r = triangulate_embedding(d);
  const Triangulation& t = r.triangulation;
  EXPECT_EQ(t.vertex_count(), 20u);
  EXPECT_EQ(t.edge_count(), 54u);
  EXPECT_EQ(t.face_count(), 36u);
  EXPECT_EQ(euler_characteristic(t), 2);
  EXPECT_TRUE(validate(t).ok());
  EXPECT_TRUE(is_homogeneous(t, r.orientation));
  EXPECT_TRUE(t.find_vertex("F1").has_value());
}

TEST(Triangulate, OutputCounts) {
  std::vector<DirectedEmbedding> inputs;
  for (int n = 3; n <= 9; ++n) inputs.push_back(extract_directed_embedding(bipyramid(n), bipyramid_canonical_zorientation(n)));
  for (int n : {6, 10}) inputs.push_back(embedding_of_type_ii_faces(bipyramid(n), all_type_ii(bipyramid(n))));
  for (const DirectedEmbedding& d : inputs) {
    const OrientedTriangulation r = triangulate_embedding(d);
    const Classification c = classify(r.triangulation, r.orientation);
    EXPECT_EQ(c.count_edges(ZType::I), 2 * c.count_edges(ZType::II));
    EXPECT_EQ(c.count_edges(ZType::II), d.arcs.size());
    const std::size_t total = std::accumulate(d.faces.begin(), d.faces.end(), std::size_t{0},
                                              [](std::size_t s, const FaceCycle& f) { return s + f.arcs.size(); });
    EXPECT_EQ(r.triangulation.face_count(), total);
    EXPECT_EQ(c.count_faces(ZType::II), 0u);
    EXPECT_EQ(c.count_vertices(ZType::I), d.faces.size());
  }
}

TEST(Triangulate, RejectsUnbalanced) {
  DirectedEmbedding d = directed_triangle();
  d.arcs[2] = {3, "1", "3"};
  EXPECT_TRUE(mentions(validate(d), "unbalanced"));
  EXPECT_THROW(triangulate_embedding(d), DomainError);
}

TEST(Triangulate, RejectsArcInOneFace) {
  DirectedEmbedding d = directed_triangle();
  d.faces.pop_back();
  EXPECT_FALSE(validate(d).ok());
  EXPECT_THROW(triangulate_embedding(d), DomainError);
}

TEST(Triangulate, RejectsBrokenCycle) {
  DirectedEmbedding d = directed_triangle();
  d.faces[0].arcs = {1, 3, 2};
  EXPECT_FALSE(validate(d).ok());
}

TEST(RoundTrip, Bipyramids) {
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(round_trip_check(bipyramid(n), bipyramid_canonical_zorientation(n))) << n;
}

TEST(RoundTrip, ExtractOfTriangulateIsIdentity) {
  const Triangulation bp6 = bipyramid(6);
  const DirectedEmbedding d = embedding_of_type_ii_faces(bp6, all_type_ii(bp6));
  const OrientedTriangulation r = triangulate_embedding(d);
  EXPECT_TRUE(equivalent(extract_directed_embedding(r.triangulation, r.orientation), d));
  EXPECT_TRUE(equivalent(extract_directed_embedding(triangulate_embedding(directed_triangle()).triangulation,
                                                    bipyramid_canonical_zorientation(3)),
                         directed_triangle()));
}

TEST(Text, EmbeddingRoundTrip) {
  const DirectedEmbedding d = extract_directed_embedding(bipyramid(7), bipyramid_canonical_zorientation(7));
  const std::string text = serialize_embedding(d);
  EXPECT_TRUE(equivalent(parse_embedding(text), d));
  EXPECT_EQ(serialize_embedding(parse_embedding(text)), text);
}

TEST(Text, EmbeddingParseErrors) {
  EXPECT_THROW(parse_embedding("a x 1 2\n"), ParseError);
  EXPECT_THROW(parse_embedding("a 1 1 2\na 1 2 3\n"), ParseError);
  EXPECT_THROW(parse_embedding("c a\n"), ParseError);
  EXPECT_THROW(parse_embedding("x\n"), ParseError);
  EXPECT_THROW(parse_embedding("v\n"), ParseError);
}
