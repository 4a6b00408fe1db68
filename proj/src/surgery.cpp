#include "zigzag/surgery.hpp"

#include <algorithm>
#include <optional>

#include "zigzag/cyclic.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

std::string_view to_string(SiteKind kind) {
  switch (kind) {
    case SiteKind::host:
      return "host";
    case SiteKind::two_zigzag_piece:
      return "two-zigzag piece";
    case SiteKind::four_zigzag_piece:
      return "four-zigzag piece";
  }
  return "?";
}

std::size_t SegmentDecomposition::total_length() const {
  std::size_t n = 0;
  for (const auto& per_edge : segments) {
    for (const auto& s : per_edge) n += s.size();
  }
  return n;
}

Sign GluingSite::side_of(std::string_view neighbor) const {
  const std::string key(neighbor);
  if (side[kPlus].contains(key)) return kPlus;
  if (side[kMinus].contains(key)) return kMinus;
  throw InvariantViolation("vertex " + key + " is not beside " + v);
}

std::string split_name(std::string_view v, Sign sign) { return std::string(v) + (sign == kPlus ? "+" : "-"); }

SpecialPair pair_from_names(const Triangulation& t, std::string_view u, std::string_view v, std::string_view w,
                            SiteKind kind) {
  const VertexIndex a = t.vertex(u);
  const VertexIndex s = t.vertex(v);
  const VertexIndex b = t.vertex(w);
  if (!t.find_edge(a, s) || !t.find_edge(s, b)) {
    throw DomainError("pair " + std::string(u) + "," + std::string(v) + "," + std::string(w) + " is not two edges");
  }
  if (a == b) throw DomainError("pair edges coincide");
  return {Edge::of(a, s), Edge::of(s, b), s, kind};
}

std::string describe(const Triangulation& t, const SpecialPair& p) {
  return t.name(p.e1.other(p.shared)) + "," + t.name(p.shared) + "," + t.name(p.e2.other(p.shared));
}

SpecialPair swapped(const SpecialPair& p) { return {p.e2, p.e1, p.shared, p.kind}; }

namespace {

std::vector<std::size_t> occurrences(const Zigzag& z, const Edge& e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z.passes[i].edge() == e) out.push_back(i);
  }
  return out;
}

bool interleaved(std::size_t p1, std::size_t p2, std::size_t q1, std::size_t q2) {
  const auto between = [&](std::size_t q) { return p1 < q && q < p2; };
  return between(q1) != between(q2);
}

// Shadow faces just before and just after the pass at position i.
std::pair<FaceIndex, FaceIndex> shadow_around(const Triangulation& t, const Zigzag& z, std::size_t i) {
  const std::size_t n = z.size();
  const Pass& prev = z.passes[(i + n - 1) % n];
  const Pass& cur = z.passes[i];
  const Pass& next = z.passes[(i + 1) % n];
  const auto before = t.find_face(prev.from, cur.from, cur.to);
  const auto after = t.find_face(cur.from, cur.to, next.to);
  if (!before || !after) throw InvariantViolation("zigzag passes do not share faces");
  return {*before, *after};
}

NamedWalk named(const Triangulation& t, const Zigzag& z, std::size_t begin, std::size_t end) {
  NamedWalk out;
  for (std::size_t i = begin; i < end; ++i) out.push_back({t.name(z.passes[i].from), t.name(z.passes[i].to)});
  return out;
}

Zigzag rotate_to(const Zigzag& z, std::size_t start) {
  return Zigzag{rotated(std::span<const Pass>(z.passes), start)};
}

void require_homogeneous(const Classification& c, const Triangulation& t, const ZOrientation& tau) {
  if (!is_homogeneous(c, t, tau)) throw DomainError("z-orientation is not homogeneous with all faces of type I");
}

std::size_t count_in(const Zigzag& z, const Edge& e) { return occurrences(z, e).size(); }

bool walk_has_edge(const NamedWalk& w, const std::string& a, const std::string& b) {
  return std::any_of(w.begin(), w.end(), [&](const NamedPass& p) {
    return (p.from == a && p.to == b) || (p.from == b && p.to == a);
  });
}

}  // namespace

bool is_special_pair(const Triangulation& t, const ZOrientation& tau, const Classification& c, const Edge& e1,
                     const Edge& e2) {
  if (tau.chosen.size() != 1 || e1 == e2 || !e1.touches(e2)) return false;
  for (const Edge& e : {e1, e2}) {
    const auto idx = t.find_edge(e.lo, e.hi);
    if (!idx || c.edge_types[static_cast<std::size_t>(*idx)] != ZType::II) return false;
  }
  const auto p = occurrences(tau.chosen[0], e1);
  const auto q = occurrences(tau.chosen[0], e2);
  if (p.size() != 2 || q.size() != 2) return false;
  return interleaved(p[0], p[1], q[0], q[1]);
}

std::vector<SpecialPair> find_special_pairs(const Triangulation& t, const ZOrientation& tau) {
  const Classification c = classify(t, tau);
  if (tau.chosen.size() != 1) throw DomainError("special pairs need a z-knotted triangulation");
  require_homogeneous(c, t, tau);

  std::vector<SpecialPair> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    std::vector<Edge> incident;
    for (EdgeIndex e : t.edges_of_vertex(static_cast<VertexIndex>(v))) {
      if (c.edge_types[static_cast<std::size_t>(e)] == ZType::II) incident.push_back(t.edge(e));
    }
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        if (!is_special_pair(t, tau, c, incident[i], incident[j])) continue;
        // Only one order of the two edges admits a side labelling.
        SpecialPair p{incident[i], incident[j], static_cast<VertexIndex>(v), SiteKind::host};
        try {
          resolve_site(t, tau, p);
        } catch (const DomainError&) {
          p = swapped(p);
        }
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialPair& a, const SpecialPair& b) {
    return std::tie(a.e1, a.e2) < std::tie(b.e1, b.e2);
  });
  return out;
}

bool are_concordant(const Triangulation& t, const ZOrientation& tau, const SpecialPair& p, const SpecialPair& q) {
  if (p.e1 == q.e1 || p.e1 == q.e2 || p.e2 == q.e1 || p.e2 == q.e2) {
    throw DomainError("concordance is defined for pairs without a common edge");
  }
  const Classification c = classify(t, tau);
  if (!is_special_pair(t, tau, c, p.e1, p.e2) || !is_special_pair(t, tau, c, q.e1, q.e2)) {
    throw DomainError("concordance is defined for special pairs");
  }
  const Zigzag& z = tau.chosen[0];
  std::vector<std::pair<std::size_t, bool>> marks;  // position, belongs to p
  for (const Edge& e : {p.e1, p.e2}) {
    for (std::size_t i : occurrences(z, e)) marks.emplace_back(i, true);
  }
  for (const Edge& e : {q.e1, q.e2}) {
    for (std::size_t i : occurrences(z, e)) marks.emplace_back(i, false);
  }
  std::sort(marks.begin(), marks.end());
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i].second == marks[(i + 1) % marks.size()].second) return false;
  }
  return true;
}

std::vector<SpecialPair> find_piece_pairs(const Triangulation& t, const ZOrientation& tau) {
  const std::size_t k = tau.chosen.size();
  if (k != 2 && k != 4) {
    throw DomainError("piece pairs need exactly 2 or 4 zigzags, found " + std::to_string(k));
  }
  const Classification c = classify(t, tau);
  require_homogeneous(c, t, tau);

  // Zigzags through e, one entry per occurrence.
  auto holders = [&](const Edge& e) {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < k; ++z) {
      for (std::size_t n = count_in(tau.chosen[z], e); n > 0; --n) out.push_back(z);
    }
    return out;
  };

  std::vector<SpecialPair> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    std::vector<Edge> incident;
    for (EdgeIndex e : t.edges_of_vertex(static_cast<VertexIndex>(v))) {
      if (c.edge_types[static_cast<std::size_t>(e)] == ZType::II) incident.push_back(t.edge(e));
    }
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (std::size_t j = i + 1; j < incident.size(); ++j) {
        const auto h1 = holders(incident[i]);
        const auto h2 = holders(incident[j]);
        bool ok = false;
        if (k == 2) {
          ok = h1[0] == h1[1] && h2[0] == h2[1] && h1[0] != h2[0];
        } else {
          ok = h1[0] != h1[1] && h2[0] != h2[1] && h1[0] != h2[0] && h1[0] != h2[1] && h1[1] != h2[0] &&
               h1[1] != h2[1];
        }
        if (ok) {
          out.push_back({incident[i], incident[j], static_cast<VertexIndex>(v),
                         k == 2 ? SiteKind::two_zigzag_piece : SiteKind::four_zigzag_piece});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialPair& a, const SpecialPair& b) {
    return std::tie(a.e1, a.e2) < std::tie(b.e1, b.e2);
  });
  return out;
}

GluingSite resolve_site(const Triangulation& t, const ZOrientation& tau, const SpecialPair& pair) {
  const Classification c = classify(t, tau);
  require_homogeneous(c, t, tau);

  const VertexIndex v = pair.shared;
  if (pair.e1 == pair.e2 || !pair.e1.contains(v) || !pair.e2.contains(v)) {
    throw DomainError("pair edges must be distinct and share the given vertex");
  }
  const std::array<Edge, 2> edges{pair.e1, pair.e2};
  for (const Edge& e : edges) {
    if (c.edge_types[static_cast<std::size_t>(t.edge_index(e))] != ZType::II) {
      throw DomainError("edge " + t.edge_label(e) + " is not of type II");
    }
  }
  const VertexIndex v1 = pair.e1.other(v);
  const VertexIndex v2 = pair.e2.other(v);

  // The two arcs of link(v) strictly between v1 and v2.
  const auto ring = vertex_link(t, v).cycle;
  const std::size_t n = ring.size();
  const auto pos = [&](VertexIndex x) {
    return static_cast<std::size_t>(std::find(ring.begin(), ring.end(), x) - ring.begin());
  };
  const std::size_t i1 = pos(v1);
  const std::size_t i2 = pos(v2);
  std::array<std::set<VertexIndex>, 2> arcs;
  for (std::size_t k = (i1 + 1) % n; k != i2; k = (k + 1) % n) arcs[0].insert(ring[k]);
  for (std::size_t k = (i2 + 1) % n; k != i1; k = (k + 1) % n) arcs[1].insert(ring[k]);
  if (arcs[0].empty() || arcs[1].empty()) throw DomainError("e1 and e2 lie on a common face");

  // face_on[i][a]: the face on e_i whose third vertex lies on arc a.
  std::array<std::array<FaceIndex, 2>, 2> face_on{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto faces = t.faces_of_edge(t.edge_index(edges[i]));
    for (FaceIndex f : faces) {
      const VertexIndex apex = t.face(f).opposite(edges[i]);
      face_on[i][arcs[0].contains(apex) ? 0 : 1] = f;
    }
  }

  struct Labelling {
    std::size_t minus_arc;
    std::array<std::array<FaceIndex, 2>, 2> faces;  // [i][sign]
  };
  auto labelling = [&](std::size_t minus_arc) {
    Labelling l{minus_arc, {}};
    for (std::size_t i = 0; i < 2; ++i) {
      l.faces[i][kMinus] = face_on[i][minus_arc];
      l.faces[i][kPlus] = face_on[i][1 - minus_arc];
    }
    return l;
  };
  const auto is_pair = [](std::pair<FaceIndex, FaceIndex> got, FaceIndex a, FaceIndex b) {
    return got.first == a && got.second == b;
  };

  // Occurrence data per kind; consistency of a labelling is checked below.
  const std::size_t k = tau.chosen.size();
  const SiteKind kind = pair.kind;
  if ((kind == SiteKind::host && k != 1) || (kind == SiteKind::two_zigzag_piece && k != 2) ||
      (kind == SiteKind::four_zigzag_piece && k != 4)) {
    throw DomainError(std::string("a ") + std::string(to_string(kind)) + " site cannot have " + std::to_string(k) +
                      " zigzags");
  }

  auto consistent = [&](const Labelling& l) -> bool {
    const auto& F = l.faces;
    if (kind == SiteKind::host) {
      const Zigzag& z = tau.chosen[0];
      const auto p = occurrences(z, edges[0]);
      const auto q = occurrences(z, edges[1]);
      if (p.size() != 2 || q.size() != 2 || !interleaved(p[0], p[1], q[0], q[1])) return false;
      for (std::size_t a = 0; a < 2; ++a) {
        if (!is_pair(shadow_around(t, z, p[a]), F[0][kMinus], F[0][kPlus])) continue;
        const std::size_t start = p[a];
        const std::size_t other_e1 = p[1 - a];
        auto after = [&](std::size_t x) { return (x + z.size() - start) % z.size(); };
        const std::size_t next_e2 = after(q[0]) < after(q[1]) ? q[0] : q[1];
        const std::size_t last_e2 = next_e2 == q[0] ? q[1] : q[0];
        return is_pair(shadow_around(t, z, next_e2), F[1][kMinus], F[1][kPlus]) &&
               is_pair(shadow_around(t, z, other_e1), F[0][kPlus], F[0][kMinus]) &&
               is_pair(shadow_around(t, z, last_e2), F[1][kPlus], F[1][kMinus]);
      }
      return false;
    }
    for (std::size_t i = 0; i < 2; ++i) {
      std::size_t forward = 0;   // occurrences reading F^-, F^+
      std::size_t backward = 0;  // occurrences reading F^+, F^-
      std::set<std::size_t> holders;
      for (std::size_t zi = 0; zi < k; ++zi) {
        for (std::size_t at : occurrences(tau.chosen[zi], edges[i])) {
          holders.insert(zi);
          const auto sh = shadow_around(t, tau.chosen[zi], at);
          if (is_pair(sh, F[i][kMinus], F[i][kPlus])) ++forward;
          if (is_pair(sh, F[i][kPlus], F[i][kMinus])) ++backward;
        }
      }
      const std::size_t want_holders = kind == SiteKind::two_zigzag_piece ? 1 : 2;
      if (forward != 1 || backward != 1 || holders.size() != want_holders) return false;
    }
    return true;
  };

  std::optional<Labelling> chosen;
  for (std::size_t minus_arc : {0, 1}) {
    Labelling l = labelling(minus_arc);
    if (!consistent(l)) continue;
    const auto minus_faces = [&](const Labelling& x) {
      std::array<Face, 2> fs{t.face(x.faces[0][kMinus]), t.face(x.faces[1][kMinus])};
      std::sort(fs.begin(), fs.end());
      return fs;
    };
    if (!chosen || minus_faces(l) < minus_faces(*chosen)) chosen = l;
  }
  if (!chosen) throw DomainError("no side labelling of " + describe(t, pair) + " matches its zigzag occurrences");

  GluingSite site;
  site.pair = pair;
  site.v = t.name(v);
  site.v1 = t.name(v1);
  site.v2 = t.name(v2);
  site.faces = chosen->faces;
  for (std::size_t i = 0; i < 2; ++i) {
    const Pass dir = *c.edge_directions[static_cast<std::size_t>(t.edge_index(edges[i]))];
    site.edge_pass[i] = {t.name(dir.from), t.name(dir.to)};
  }
  for (VertexIndex x : arcs[chosen->minus_arc]) site.side[kMinus].insert(t.name(x));
  for (VertexIndex x : arcs[1 - chosen->minus_arc]) site.side[kPlus].insert(t.name(x));

  const auto& F = site.faces;
  auto& seg = site.segments;
  seg.kind = kind;
  if (kind == SiteKind::host) {
    const Zigzag& z0 = tau.chosen[0];
    std::size_t start = 0;
    for (std::size_t at : occurrences(z0, edges[0])) {
      if (is_pair(shadow_around(t, z0, at), F[0][kMinus], F[0][kPlus])) start = at;
    }
    const Zigzag z = rotate_to(z0, start);
    const auto p = occurrences(z, edges[0]);  // {0, p'}
    const auto q = occurrences(z, edges[1]);  // {q, q'}
    seg.segments[0][kPlus] = named(t, z, 1, q[0]);
    seg.segments[1][kPlus] = named(t, z, q[0] + 1, p[1]);
    seg.segments[0][kMinus] = named(t, z, p[1] + 1, q[1]);
    seg.segments[1][kMinus] = named(t, z, q[1] + 1, z.size());
  } else {
    for (std::size_t i = 0; i < 2; ++i) {
      for (const Zigzag& zz : tau.chosen) {
        for (std::size_t at : occurrences(zz, edges[i])) {
          const auto sh = shadow_around(t, zz, at);
          const Zigzag z = rotate_to(zz, at);
          if (kind == SiteKind::two_zigzag_piece) {
            if (!is_pair(sh, F[i][kMinus], F[i][kPlus])) continue;
            const std::size_t back = occurrences(z, edges[i]).at(1);
            seg.segments[i][kPlus] = named(t, z, 1, back);
            seg.segments[i][kMinus] = named(t, z, back + 1, z.size());
          } else {
            const Sign s = is_pair(sh, F[i][kMinus], F[i][kPlus]) ? kPlus : kMinus;
            seg.segments[i][s] = named(t, z, 1, z.size());
          }
        }
      }
    }
  }
  return site;
}

bool check_compatibility(const GluingSite& host, const GluingSite& piece) {
  return host.enters(0) == piece.enters(0) && host.enters(1) == piece.enters(1);
}

namespace {

std::string host_vertex_in_glued(const GluingSite& host, const std::string& x, const std::string& neighbor) {
  return x == host.v ? split_name(host.v, host.side_of(neighbor)) : x;
}

NamedPass host_pass_in_glued(const GluingSite& host, const NamedPass& p) {
  return {host_vertex_in_glued(host, p.from, p.to), host_vertex_in_glued(host, p.to, p.from)};
}

NamedPass piece_pass_in_glued(const GluingSite& host, const GluingSite& piece, const NamedPass& p) {
  return {piece_vertex_in_glued(host, piece, p.from, p.to), piece_vertex_in_glued(host, piece, p.to, p.from)};
}

NamedPass split_edge_pass(const GluingSite& host, std::size_t i, Sign sign) {
  NamedPass p = host.edge_pass[i];
  const std::string vs = split_name(host.v, sign);
  if (p.from == host.v) p.from = vs;
  if (p.to == host.v) p.to = vs;
  return p;
}

}  // namespace

std::string piece_vertex_in_glued(const GluingSite& host, const GluingSite& piece, std::string_view name,
                                  std::string_view neighbor) {
  if (name == piece.v) return split_name(host.v, piece.side_of(neighbor));
  if (name == piece.v1) return host.v1;
  if (name == piece.v2) return host.v2;
  return std::string(name);
}

NamedWalk predict_glued_zigzag(const GluingSite& host, const GluingSite& piece) {
  if (host.segments.kind != SiteKind::host || piece.segments.kind == SiteKind::host) {
    throw DomainError("gluing needs a host site and a piece site");
  }
  if (!check_compatibility(host, piece)) throw DomainError("sites disagree on edge directions at the shared vertex");

  NamedWalk walk;
  auto edge = [&](std::size_t i, Sign s) { walk.push_back(split_edge_pass(host, i, s)); };
  auto host_seg = [&](std::size_t i, Sign s) {
    for (const auto& p : host.segments.at(i, s)) walk.push_back(host_pass_in_glued(host, p));
  };
  auto piece_seg = [&](std::size_t i, Sign s) {
    for (const auto& p : piece.segments.at(i, s)) walk.push_back(piece_pass_in_glued(host, piece, p));
  };

  if (piece.segments.kind == SiteKind::two_zigzag_piece) {
    edge(0, kPlus), host_seg(0, kPlus), edge(1, kMinus), piece_seg(1, kMinus);
    edge(1, kMinus), host_seg(1, kMinus), edge(0, kMinus), piece_seg(0, kMinus);
    edge(0, kMinus), host_seg(0, kMinus), edge(1, kPlus), piece_seg(1, kPlus);
    edge(1, kPlus), host_seg(1, kPlus), edge(0, kPlus), piece_seg(0, kPlus);
  } else {
    edge(0, kPlus), host_seg(0, kPlus), edge(1, kMinus), piece_seg(1, kMinus);
    edge(1, kPlus), host_seg(1, kPlus), edge(0, kPlus), piece_seg(0, kPlus);
    edge(0, kMinus), host_seg(0, kMinus), edge(1, kPlus), piece_seg(1, kPlus);
    edge(1, kMinus), host_seg(1, kMinus), edge(0, kMinus), piece_seg(0, kMinus);
  }

  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i].to != walk[(i + 1) % walk.size()].from) {
      throw InvariantViolation("assembled zigzag breaks after " + walk[i].from + ">" + walk[i].to);
    }
  }
  return walk;
}

Triangulation splice(const Triangulation& host, const GluingSite& host_site, const Triangulation& piece,
                     const GluingSite& piece_site) {
  std::set<std::string> host_names(host.names().begin(), host.names().end());
  host_names.erase(host_site.v);
  for (Sign s : {kPlus, kMinus}) {
    if (!host_names.insert(split_name(host_site.v, s)).second) {
      throw DomainError("split vertex name " + split_name(host_site.v, s) + " is already taken");
    }
  }
  for (const auto& name : piece.names()) {
    if (name == piece_site.v || name == piece_site.v1 || name == piece_site.v2) continue;
    if (host_names.contains(name)) throw DomainError("vertex name " + name + " occurs on both sides of the gluing");
  }

  // Rewrites a face through `v`, choosing the copy of v by the side of the
  // face's other vertices.
  auto split_face = [](const FaceNames& f, const GluingSite& site,
                       const auto& rename) -> FaceNames {
    FaceNames out = f;
    const auto it = std::find(f.begin(), f.end(), site.v);
    if (it == f.end()) {
      for (auto& x : out) x = rename(x, std::string_view{});
      return out;
    }
    std::optional<Sign> side;
    for (const auto& x : f) {
      if (x == site.v) continue;
      if (site.side[kPlus].contains(x)) side = kPlus;
      if (site.side[kMinus].contains(x)) side = kMinus;
    }
    if (!side) throw InvariantViolation("face at " + site.v + " has no side");
    for (auto& x : out) x = x == site.v ? split_name(site.v, *side) : rename(x, std::string_view{});
    return out;
  };

  std::vector<FaceNames> faces;
  const auto keep = [](const std::string& x, std::string_view) { return x; };
  for (const auto& f : host.face_names()) faces.push_back(split_face(f, host_site, keep));

  const auto piece_rename = [&](const std::string& x, std::string_view) {
    if (x == piece_site.v1) return host_site.v1;
    if (x == piece_site.v2) return host_site.v2;
    return x;
  };
  for (const auto& f : piece.face_names()) {
    FaceNames g = split_face(f, piece_site, piece_rename);
    for (auto& x : g) {
      if (x == split_name(piece_site.v, kPlus)) x = split_name(host_site.v, kPlus);
      if (x == split_name(piece_site.v, kMinus)) x = split_name(host_site.v, kMinus);
    }
    faces.push_back(g);
  }
  return Triangulation::from_faces(faces);
}

GlueResult glue(const Triangulation& host, const ZOrientation& host_tau, const GluingSite& host_site,
                const Triangulation& piece, const ZOrientation& piece_tau, const GluingSite& piece_site) {
  if (host_site.segments.kind != SiteKind::host) throw DomainError("host site is not a special pair of a z-knotted host");
  if (piece_site.segments.kind == SiteKind::host) {
    throw DomainError("piece must have two or four zigzags; gluing two z-knotted triangulations is not z-knotted");
  }
  const Classification hc = classify(host, host_tau);
  const Classification pc = classify(piece, piece_tau);
  if (host_tau.chosen.size() != 1) throw DomainError("host is not z-knotted");
  require_homogeneous(hc, host, host_tau);
  require_homogeneous(pc, piece, piece_tau);
  if (!check_compatibility(host_site, piece_site)) {
    throw DomainError("incompatible sites: e1/e2 must enter or leave the shared vertex alike on both sides");
  }

  GlueResult out;
  out.triangulation = splice(host, host_site, piece, piece_site);
  const Triangulation& t = out.triangulation;

  const NamedWalk walk = predict_glued_zigzag(host_site, piece_site);
  for (const auto& p : walk) {
    const auto from = t.find_vertex(p.from);
    const auto to = t.find_vertex(p.to);
    if (!from || !to || !t.find_edge(*from, *to)) {
      throw InvariantViolation("predicted pass " + p.from + ">" + p.to + " is not an edge of the gluing");
    }
    out.zigzag.passes.push_back({*from, *to});
  }

  if (auto report = validate(t); !report.ok()) {
    throw InvariantViolation("glued complex is not a surface triangulation: " + report.violations.front());
  }
  const auto zigzags = enumerate_zigzags(t);
  if (zigzags.size() != 1) {
    throw InvariantViolation("glued triangulation has " + std::to_string(zigzags.size()) + " zigzags");
  }
  if (canonical_form(out.zigzag) != zigzags[0]) {
    throw InvariantViolation("glued zigzag differs from the assembled sequence");
  }
  out.orientation = make_z_orientation(zigzags, {!same_cycle(zigzags[0], out.zigzag)});

  const Classification c = classify(t, out.orientation);
  if (!is_homogeneous(c, t, out.orientation)) throw InvariantViolation("glued zigzag is not homogeneous");
  out.type_i_vertices = c.count_vertices(ZType::I);
  const std::size_t expected_type_i = hc.count_vertices(ZType::I) + pc.count_vertices(ZType::I);
  if (out.type_i_vertices != expected_type_i) {
    throw InvariantViolation("glued triangulation has " + std::to_string(out.type_i_vertices) +
                             " type-I vertices, expected " + std::to_string(expected_type_i));
  }
  if (t.vertex_count() + 2 != host.vertex_count() + piece.vertex_count() ||
      t.edge_count() != host.edge_count() + piece.edge_count() ||
      t.face_count() != host.face_count() + piece.face_count() ||
      euler_characteristic(t) != euler_characteristic(host) + euler_characteristic(piece) - 2) {
    throw InvariantViolation("glued counts are not additive");
  }
  return out;
}

std::vector<SpecialPair> inherited_pairs(const GlueResult& glued, const Triangulation& host,
                                         const GluingSite& host_site, std::span<const SpecialPair> host_pairs,
                                         const Triangulation& piece, const GluingSite& piece_site,
                                         std::span<const SpecialPair> piece_pairs) {
  const Triangulation& g = glued.triangulation;
  const Classification gc = classify(g, glued.orientation);

  struct NamedEdge {
    std::string a, b;
  };
  auto names_of = [](const Triangulation& t, const Edge& e) { return NamedEdge{t.name(e.lo), t.name(e.hi)}; };
  auto in_both = [](const SegmentDecomposition& s, std::size_t i, const NamedEdge& e) {
    return walk_has_edge(s.at(i, kPlus), e.a, e.b) && walk_has_edge(s.at(i, kMinus), e.a, e.b);
  };
  auto survives = [&](const SegmentDecomposition& s, const NamedEdge& c1, const NamedEdge& c2) {
    return (in_both(s, 0, c1) && in_both(s, 1, c2)) || (in_both(s, 1, c1) && in_both(s, 0, c2));
  };

  std::vector<SpecialPair> out;
  auto emit = [&](const NamedEdge& c1, const NamedEdge& c2, SiteKind origin_unused) {
    (void)origin_unused;
    const Edge e1 = Edge::of(g.vertex(c1.a), g.vertex(c1.b));
    const Edge e2 = Edge::of(g.vertex(c2.a), g.vertex(c2.b));
    if (!e1.touches(e2)) throw InvariantViolation("inherited pair edges no longer meet");
    const VertexIndex shared = e2.contains(e1.lo) ? e1.lo : e1.hi;
    if (!is_special_pair(g, glued.orientation, gc, e1, e2)) {
      throw InvariantViolation("inherited pair " + c1.a + c1.b + "," + c2.a + c2.b + " is not special after gluing");
    }
    out.push_back({e1, e2, shared, SiteKind::host});
  };

  const Edge used1 = host_site.pair.e1, used2 = host_site.pair.e2;
  for (const SpecialPair& p : host_pairs) {
    if (p.e1 == used1 || p.e1 == used2 || p.e2 == used1 || p.e2 == used2) continue;
    NamedEdge c1 = names_of(host, p.e1), c2 = names_of(host, p.e2);
    if (!survives(host_site.segments, c1, c2)) continue;
    c1 = {host_vertex_in_glued(host_site, c1.a, c1.b), host_vertex_in_glued(host_site, c1.b, c1.a)};
    c2 = {host_vertex_in_glued(host_site, c2.a, c2.b), host_vertex_in_glued(host_site, c2.b, c2.a)};
    emit(c1, c2, SiteKind::host);
  }
  const Edge pused1 = piece_site.pair.e1, pused2 = piece_site.pair.e2;
  for (const SpecialPair& p : piece_pairs) {
    if (p.e1 == pused1 || p.e1 == pused2 || p.e2 == pused1 || p.e2 == pused2) continue;
    NamedEdge c1 = names_of(piece, p.e1), c2 = names_of(piece, p.e2);
    if (!survives(piece_site.segments, c1, c2)) continue;
    c1 = {piece_vertex_in_glued(host_site, piece_site, c1.a, c1.b),
          piece_vertex_in_glued(host_site, piece_site, c1.b, c1.a)};
    c2 = {piece_vertex_in_glued(host_site, piece_site, c2.a, c2.b),
          piece_vertex_in_glued(host_site, piece_site, c2.b, c2.a)};
    emit(c1, c2, p.kind);
  }
  return out;
}

}  // namespace zigzag
