#pragma once

#include <array>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/triangulation.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

/// What role a pair of type-II edges can play in a gluing.
enum class SiteKind {
  host,               // z-knotted; the edges interleave e1..e2..e1..e2
  two_zigzag_piece,   // e1 twice in one zigzag, e2 twice in the other
  four_zigzag_piece,  // e1 once in each of two zigzags, e2 in the other two
};
std::string_view to_string(SiteKind kind);

/// Two type-II edges e1 = {v1, shared}, e2 = {shared, v2}. Order matters
/// for gluing: e1 is identified with the other side's e1.
struct SpecialPair {
  Edge e1;
  Edge e2;
  VertexIndex shared = 0;
  SiteKind kind = SiteKind::host;

  bool operator==(const SpecialPair&) const = default;
};

/// Pair with e1 = {u, v}, e2 = {v, w}.
SpecialPair pair_from_names(const Triangulation& t, std::string_view u, std::string_view v, std::string_view w,
                            SiteKind kind = SiteKind::host);
/// "u,v,w", the form pair_from_names reads.
std::string describe(const Triangulation& t, const SpecialPair& p);
SpecialPair swapped(const SpecialPair& p);

/// Direct check of the definition: both edges type II, sharing one vertex,
/// with interleaved occurrences in the single zigzag of `tau`.
bool is_special_pair(const Triangulation& t, const ZOrientation& tau, const Classification& c, const Edge& e1,
                     const Edge& e2);

/// Every special pair (e1 < e2), sorted. Requires a z-knotted triangulation
/// whose orientation is homogeneous with all faces type I.
std::vector<SpecialPair> find_special_pairs(const Triangulation& t, const ZOrientation& tau);

/// The eight occurrences alternate c1 t1 c2 t2 c1 t1 c2 t2. Throws
/// DomainError if the pairs share an edge or either is not special.
bool are_concordant(const Triangulation& t, const ZOrientation& tau, const SpecialPair& p, const SpecialPair& q);

/// Vertex-sharing type-II pairs usable on the piece side of a gluing.
/// Requires 2 or 4 zigzags and a homogeneous orientation.
std::vector<SpecialPair> find_piece_pairs(const Triangulation& t, const ZOrientation& tau);

struct NamedPass {
  std::string from;
  std::string to;

  bool operator==(const NamedPass&) const = default;
};
using NamedWalk = std::vector<NamedPass>;

enum Sign : std::size_t { kPlus = 0, kMinus = 1 };

/// Zigzag pieces between the occurrences of e1 and e2, indexed
/// [edge 0/1][kPlus/kMinus]: A for hosts, B for two-zigzag pieces, C for
/// four-zigzag pieces.
struct SegmentDecomposition {
  SiteKind kind = SiteKind::host;
  std::array<std::array<NamedWalk, 2>, 2> segments;

  const NamedWalk& at(std::size_t edge, Sign sign) const { return segments[edge][sign]; }
  std::size_t total_length() const;
};

/// A special pair together with the side labelling of its four faces and
/// the segment decomposition of the zigzag(s) through it.
struct GluingSite {
  SpecialPair pair;
  std::string v, v1, v2;           // shared vertex and the far ends of e1, e2
  std::array<NamedPass, 2> edge_pass;  // type-II direction of e1, e2
  /// faces[i][sign]: the face F_i^sign on edge e_i.
  std::array<std::array<FaceIndex, 2>, 2> faces{};
  /// Interior vertices of the two arcs of link(v) between v1 and v2.
  std::array<std::set<std::string>, 2> side;
  SegmentDecomposition segments;

  bool enters(std::size_t i) const { return edge_pass[i].to == v; }
  Sign side_of(std::string_view neighbor) const;
};

/// Splits link(v) at v1, v2, labels the faces on e1, e2 by side consistently
/// with the occurrence pattern of the zigzag(s), and cuts the zigzag(s) into
/// segments. Both consistent labellings exist in practice; the one putting
/// the lexicographically smaller faces on the minus side wins. Throws
/// DomainError if no labelling is consistent.
GluingSite resolve_site(const Triangulation& t, const ZOrientation& tau, const SpecialPair& pair);

/// Each e_i enters v on the host exactly when e'_i enters v' on the piece.
bool check_compatibility(const GluingSite& host, const GluingSite& piece);

/// Name given to the copy of `v` on side `sign` after splitting.
std::string split_name(std::string_view v, Sign sign);

/// The glued zigzag assembled from the segments, written in the vertex
/// names of the glued triangulation.
NamedWalk predict_glued_zigzag(const GluingSite& host, const GluingSite& piece);

/// Vertex identification applied to the piece: v' -> split host v, v'_i ->
/// v_i, every other piece name unchanged.
std::string piece_vertex_in_glued(const GluingSite& host, const GluingSite& piece, std::string_view name,
                                  std::string_view neighbor);

/// Topological part of the gluing only: split both sides along their sites
/// and identify the boundaries. No zigzag checks.
Triangulation splice(const Triangulation& host, const GluingSite& host_site, const Triangulation& piece,
                     const GluingSite& piece_site);

struct GlueResult {
  Triangulation triangulation;
  ZOrientation orientation;
  Zigzag zigzag;
  std::size_t type_i_vertices = 0;
};

/// G(host, piece). Throws DomainError when a precondition fails (wrong site
/// kinds, incompatible directions, clashing names) and InvariantViolation if
/// the result misses any of the verified properties: valid surface, single
/// homogeneous zigzag equal to the predicted one, all faces type I, additive
/// counts.
GlueResult glue(const Triangulation& host, const ZOrientation& host_tau, const GluingSite& host_site,
                const Triangulation& piece, const ZOrientation& piece_tau, const GluingSite& piece_site);

/// Prior special pairs that survive the gluing, re-expressed in the glued
/// triangulation: host pairs concordant to the used pair, and piece pairs
/// whose edges sit in both segments of their zigzag. Each is re-verified
/// against the glued zigzag.
std::vector<SpecialPair> inherited_pairs(const GlueResult& glued, const Triangulation& host,
                                         const GluingSite& host_site, std::span<const SpecialPair> host_pairs,
                                         const Triangulation& piece, const GluingSite& piece_site,
                                         std::span<const SpecialPair> piece_pairs);

}  // namespace zigzag
