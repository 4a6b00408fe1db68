#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/triangulation.hpp"

namespace zigzag {

/// One directed traversal of an edge by a zigzag.
struct Pass {
  VertexIndex from = 0;
  VertexIndex to = 0;

  Edge edge() const { return Edge::of(from, to); }
  Pass flipped() const { return {to, from}; }

  bool operator==(const Pass&) const = default;
  /// Orders by (edge, from, to).
  std::strong_ordering operator<=>(const Pass& o) const {
    if (auto c = edge() <=> o.edge(); c != 0) return c;
    if (auto c = from <=> o.from; c != 0) return c;
    return to <=> o.to;
  }
};

/// A zigzag as the cyclic sequence of its passes. Consecutive passes chain
/// (`passes[i].to == passes[i+1].from`) and the length is the minimal period.
struct Zigzag {
  std::vector<Pass> passes;

  std::size_t size() const { return passes.size(); }
  bool operator==(const Zigzag&) const = default;
  auto operator<=>(const Zigzag&) const = default;
};

/// The reversed zigzag, read backwards with every pass flipped.
Zigzag reversed(const Zigzag& z);
/// Least rotation among `z` and its reversal.
Zigzag canonical_form(const Zigzag& z);
/// Least rotation of `z` itself, keeping its direction.
Zigzag canonical_rotation(const Zigzag& z);
/// Same cyclic directed sequence, up to rotation.
bool same_cycle(const Zigzag& a, const Zigzag& b);

/// Consecutive pair of zigzag edges.
struct ZigzagState {
  Edge prev;
  Edge cur;

  bool operator==(const ZigzagState&) const = default;
};

/// Advances one step: the other face on `cur` supplies the edge disjoint from
/// `prev`. Throws DomainError if the two edges do not share a face.
ZigzagState zigzag_successor(const Triangulation& t, const ZigzagState& s);
/// Inverse of zigzag_successor.
ZigzagState zigzag_predecessor(const Triangulation& t, const ZigzagState& s);

/// The zigzag through the given consecutive pair, starting with its pass
/// through `s.prev`.
Zigzag trace_zigzag(const Triangulation& t, const ZigzagState& s);

/// All zigzags up to reversal, each in canonical form, sorted.
std::vector<Zigzag> enumerate_zigzags(const Triangulation& t);
bool is_z_knotted(const Triangulation& t);

/// One chosen direction per zigzag, indexed like enumerate_zigzags.
/// `bits[i]` is true when the reversal of the i-th canonical zigzag is chosen.
struct ZOrientation {
  std::vector<Zigzag> chosen;
  std::vector<bool> bits;

  bool operator==(const ZOrientation&) const = default;
};

ZOrientation make_z_orientation(const Triangulation& t, const std::vector<bool>& bits);
ZOrientation make_z_orientation(const std::vector<Zigzag>& canonical, const std::vector<bool>& bits);
/// Orientation whose chosen zigzags match the given directed zigzags, in
/// any rotation. Throws DomainError if they are not exactly one per zigzag.
ZOrientation z_orientation_from(const Triangulation& t, const std::vector<Zigzag>& directed);
ZOrientation reversed(const ZOrientation& tau);

/// Parses a bit string such as "0110".
std::vector<bool> parse_bits(std::string_view text);
std::string format_bits(const std::vector<bool>& bits);

/// Every z-orientation; refuses beyond 20 zigzags.
std::vector<ZOrientation> all_z_orientations(const Triangulation& t);
inline constexpr std::size_t kMaxEnumeratedZigzags = 20;

enum class ZType : std::uint8_t { I = 1, II = 2 };
std::string_view to_string(ZType type);

struct Classification {
  std::vector<ZType> edge_types;                   // by EdgeIndex
  std::vector<std::optional<Pass>> edge_directions;  // set for type II
  std::vector<ZType> vertex_types;                 // by VertexIndex
  std::vector<ZType> face_types;                   // by FaceIndex

  std::size_t count_edges(ZType type) const;
  std::size_t count_vertices(ZType type) const;
  std::size_t count_faces(ZType type) const;
};

/// Edge, vertex and face types under `tau`. Throws DomainError if `tau` does
/// not double cover the edges, InvariantViolation if a face is neither type.
Classification classify(const Triangulation& t, const ZOrientation& tau);

/// F_i is the face holding passes i and i+1.
std::vector<FaceIndex> face_shadow(const Triangulation& t, const Zigzag& z);

/// All faces type I and every chosen zigzag reads (II, I, I) cyclically.
bool is_homogeneous(const Triangulation& t, const ZOrientation& tau);
bool is_homogeneous(const Classification& c, const Triangulation& t, const ZOrientation& tau);

/// In/out counts of directed type-II edges at a type-II vertex.
struct VertexBalance {
  VertexIndex vertex = 0;
  std::size_t in = 0;
  std::size_t out = 0;
};
std::vector<VertexBalance> type_ii_balance(const Triangulation& t, const Classification& c);

/// Renders a zigzag as space-separated `u>v` passes.
std::string format_zigzag(const Triangulation& t, const Zigzag& z);
/// Inverse of format_zigzag; throws DomainError on unknown vertices or
/// passes that are not edges.
Zigzag parse_zigzag(const Triangulation& t, std::string_view text);

}  // namespace zigzag
