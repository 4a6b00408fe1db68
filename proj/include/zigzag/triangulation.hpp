#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zigzag {

using VertexIndex = std::int32_t;
using EdgeIndex = std::int32_t;
using FaceIndex = std::int32_t;

/// Undirected edge; `lo < hi` always. Vertex indices follow token order, so
/// comparing edges compares their endpoint names lexicographically.
struct Edge {
  VertexIndex lo = 0;
  VertexIndex hi = 0;

  static Edge of(VertexIndex u, VertexIndex v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  bool contains(VertexIndex v) const { return lo == v || hi == v; }
  VertexIndex other(VertexIndex v) const { return v == lo ? hi : lo; }
  bool touches(const Edge& e) const { return contains(e.lo) || contains(e.hi); }

  auto operator<=>(const Edge&) const = default;
};

/// Triangle with sorted vertex indices.
struct Face {
  std::array<VertexIndex, 3> v{};

  static Face of(VertexIndex a, VertexIndex b, VertexIndex c);
  bool contains(VertexIndex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool contains(const Edge& e) const { return contains(e.lo) && contains(e.hi); }
  /// The vertex of this face not on `e`.
  VertexIndex opposite(const Edge& e) const;
  std::array<Edge, 3> edges() const {
    return {Edge{v[0], v[1]}, Edge{v[0], v[2]}, Edge{v[1], v[2]}};
  }

  auto operator<=>(const Face&) const = default;
};

using FaceNames = std::array<std::string, 3>;

/// A closed-surface triangulation held purely as a face list over named
/// vertices. Construction builds the incidence indexes but does not check
/// the surface conditions; call `validate` for that.
///
/// Vertices are indexed in lexicographic order of their names, edges in
/// lexicographic order of their endpoint pairs, faces in input order.
class Triangulation {
 public:
  Triangulation() = default;

  /// Throws DomainError on an invalid token, a face with a repeated vertex,
  /// or a duplicated face.
  static Triangulation from_faces(const std::vector<FaceNames>& faces);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  const std::string& name(VertexIndex v) const { return names_.at(static_cast<std::size_t>(v)); }
  std::span<const std::string> names() const { return names_; }
  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  /// Throws DomainError if the vertex is absent.
  VertexIndex vertex(std::string_view name) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::optional<EdgeIndex> find_edge(VertexIndex u, VertexIndex v) const;
  EdgeIndex edge_index(const Edge& e) const;

  std::span<const Face> faces() const { return faces_; }
  const Face& face(FaceIndex f) const { return faces_.at(static_cast<std::size_t>(f)); }
  std::optional<FaceIndex> find_face(VertexIndex a, VertexIndex b, VertexIndex c) const;

  std::span<const FaceIndex> faces_of_edge(EdgeIndex e) const {
    return edge_faces_.at(static_cast<std::size_t>(e));
  }
  std::span<const EdgeIndex> edges_of_vertex(VertexIndex v) const {
    return vertex_edges_.at(static_cast<std::size_t>(v));
  }
  std::span<const FaceIndex> faces_of_vertex(VertexIndex v) const {
    return vertex_faces_.at(static_cast<std::size_t>(v));
  }
  std::size_t degree(VertexIndex v) const { return edges_of_vertex(v).size(); }

  /// Face containing both edges, if any. Distinct edges share at most one.
  std::optional<FaceIndex> common_face(const Edge& a, const Edge& b) const;

  /// Faces as sorted name triples, in stored order.
  std::vector<FaceNames> face_names() const;
  std::string edge_label(const Edge& e) const;
  std::string face_label(const Face& f) const;

  /// Same vertex names and the same set of faces (face order ignored).
  bool same_faces(const Triangulation& other) const;
  bool operator==(const Triangulation& other) const {
    return names_ == other.names_ && faces_ == other.faces_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, VertexIndex, std::less<>> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, EdgeIndex> edge_lookup_;
  std::vector<Face> faces_;
  std::map<Face, FaceIndex> face_lookup_;
  std::vector<std::vector<FaceIndex>> edge_faces_;
  std::vector<std::vector<EdgeIndex>> vertex_edges_;
  std::vector<std::vector<FaceIndex>> vertex_faces_;

  std::uint64_t edge_key(VertexIndex u, VertexIndex v) const;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks every surface condition: each edge in exactly two faces, pairwise
/// face intersections, connectivity, and a single link cycle per vertex.
ValidationReport validate(const Triangulation& t);

/// Neighbors of a vertex in rotation order around it.
struct LinkCycle {
  VertexIndex center = 0;
  std::vector<VertexIndex> cycle;
};

/// The link of `v`, starting at its least neighbor and heading toward that
/// neighbor's lesser link-neighbor. Throws DomainError if the link is not a
/// single cycle.
LinkCycle vertex_link(const Triangulation& t, VertexIndex v);
LinkCycle vertex_link(const Triangulation& t, std::string_view v);

int euler_characteristic(const Triangulation& t);

bool is_valid_token(std::string_view token);

/// `.tri` reader. Faces come back in file order; surface validation is not
/// applied. Throws ParseError naming the offending line.
Triangulation parse_triangulation(std::string_view text);
std::string serialize_triangulation(const Triangulation& t);

}  // namespace zigzag
