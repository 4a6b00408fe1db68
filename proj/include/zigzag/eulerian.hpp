#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/triangulation.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

struct Arc {
  int id = 0;
  std::string from;
  std::string to;

  bool operator==(const Arc&) const = default;
};

/// A face given as the arcs along its boundary, in traversal order.
struct FaceCycle {
  std::optional<std::string> name;
  std::vector<int> arcs;

  bool operator==(const FaceCycle&) const = default;
};

/// A simple digraph with an explicit face structure in which every face is a
/// directed cycle. Valid embeddings are connected, balanced, and use each
/// arc in exactly two face cycles.
struct DirectedEmbedding {
  std::vector<std::string> vertices;
  std::vector<Arc> arcs;
  std::vector<FaceCycle> faces;

  const Arc& arc(int id) const;
  /// Name of the cone vertex placed in face `k`: the face name, else "F<k+1>".
  std::string face_vertex_name(std::size_t k) const;
};

/// Combinatorial checks only; whether the faces glue to a closed surface is
/// decided by triangulate_embedding.
ValidationReport validate(const DirectedEmbedding& d);

/// Sorted vertices, arcs renumbered 1..m in (from, to) order, each face
/// cycle rotated to start at its least arc, faces ordered by name.
DirectedEmbedding canonicalize(const DirectedEmbedding& d);
/// Equal after canonicalize; arc ids are irrelevant.
bool equivalent(const DirectedEmbedding& a, const DirectedEmbedding& b);

/// Type-II vertices and directed type-II edges of a homogeneous
/// triangulation, with one face cycle C(v) per type-I vertex v, named v.
/// Throws DomainError if `tau` is not homogeneous.
DirectedEmbedding extract_directed_embedding(const Triangulation& t, const ZOrientation& tau);

/// A triangulation all of whose faces are type II under `tau`, read as a
/// directed embedding: every edge an arc, every face a 3-cycle (unnamed).
DirectedEmbedding embedding_of_type_ii_faces(const Triangulation& t, const ZOrientation& tau);

struct OrientedTriangulation {
  Triangulation triangulation;
  ZOrientation orientation;
};

/// Cones every face cycle from a new vertex and returns the triangulation
/// with the unique z-orientation that runs along every arc in its own
/// direction. Throws DomainError if `d` is invalid or does not describe a
/// closed surface.
OrientedTriangulation triangulate_embedding(const DirectedEmbedding& d);

/// True when triangulating the extracted embedding reproduces `t` and `tau`
/// exactly.
bool round_trip_check(const Triangulation& t, const ZOrientation& tau);

/// `.eul` text: `v <name>`, `a <id> <from> <to>`, `c <face> <id>...`.
DirectedEmbedding parse_embedding(std::string_view text);
std::string serialize_embedding(const DirectedEmbedding& d);

}  // namespace zigzag
