#include "zigzag/zigzag.hpp"

#include <algorithm>
#include <sstream>

#include "zigzag/cyclic.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

Zigzag reversed(const Zigzag& z) {
  Zigzag r;
  r.passes.reserve(z.size());
  for (auto it = z.passes.rbegin(); it != z.passes.rend(); ++it) r.passes.push_back(it->flipped());
  return r;
}

Zigzag canonical_rotation(const Zigzag& z) {
  const std::span<const Pass> s(z.passes);
  return Zigzag{rotated(s, least_rotation(s))};
}

Zigzag canonical_form(const Zigzag& z) {
  Zigzag forward = canonical_rotation(z);
  Zigzag backward = canonical_rotation(reversed(z));
  return backward.passes < forward.passes ? backward : forward;
}

bool same_cycle(const Zigzag& a, const Zigzag& b) {
  return a.size() == b.size() && canonical_rotation(a) == canonical_rotation(b);
}

namespace {

// A flag (u, s, w) is the zigzag state prev = {u,s}, cur = {s,w} on face
// {u,s,w}; its pass through prev runs u -> s.
struct Flag {
  VertexIndex u, s, w;
};

std::size_t position(const Face& f, VertexIndex x) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (f.v[i] == x) return i;
  }
  throw InvariantViolation("vertex not on face");
}

std::size_t flag_slot(const Triangulation& t, const Flag& fl) {
  const auto fi = t.find_face(fl.u, fl.s, fl.w);
  if (!fi) throw InvariantViolation("flag is not on a face");
  const Face& f = t.face(*fi);
  return static_cast<std::size_t>(*fi) * 9 + position(f, fl.u) * 3 + position(f, fl.s);
}

VertexIndex across(const Triangulation& t, const Edge& e, VertexIndex away_from) {
  const auto idx = t.find_edge(e.lo, e.hi);
  if (!idx) throw DomainError("not an edge: " + t.edge_label(e));
  const auto faces = t.faces_of_edge(*idx);
  if (faces.size() != 2) throw DomainError("edge " + t.edge_label(e) + " does not lie in two faces");
  for (FaceIndex fi : faces) {
    const Face& f = t.face(fi);
    if (!f.contains(away_from)) return f.opposite(e);
  }
  throw DomainError("edge " + t.edge_label(e) + " has no second face");
}

Flag next_flag(const Triangulation& t, const Flag& fl) {
  return {fl.s, fl.w, across(t, Edge::of(fl.s, fl.w), fl.u)};
}

Flag prev_flag(const Triangulation& t, const Flag& fl) {
  return {across(t, Edge::of(fl.u, fl.s), fl.w), fl.u, fl.s};
}

Flag flag_of(const Triangulation& t, const ZigzagState& st) {
  const Edge& a = st.prev;
  const Edge& b = st.cur;
  if (a == b || !a.touches(b)) throw DomainError("zigzag state edges share no face");
  const VertexIndex shared = b.contains(a.lo) ? a.lo : a.hi;
  const Flag fl{a.other(shared), shared, b.other(shared)};
  if (!t.find_face(fl.u, fl.s, fl.w)) throw DomainError("zigzag state edges share no face");
  return fl;
}

ZigzagState state_of(const Flag& fl) { return {Edge::of(fl.u, fl.s), Edge::of(fl.s, fl.w)}; }

Zigzag trace(const Triangulation& t, const Flag& start, std::vector<std::int32_t>* marks, std::int32_t id) {
  Zigzag z;
  Flag fl = start;
  const std::size_t start_slot = flag_slot(t, start);
  std::size_t slot = start_slot;
  do {
    if (marks) (*marks)[slot] = id;
    z.passes.push_back({fl.u, fl.s});
    fl = next_flag(t, fl);
    slot = flag_slot(t, fl);
    if (z.passes.size() > 6 * t.face_count()) throw InvariantViolation("zigzag orbit does not close");
  } while (slot != start_slot);
  return z;
}

}  // namespace

ZigzagState zigzag_successor(const Triangulation& t, const ZigzagState& s) {
  return state_of(next_flag(t, flag_of(t, s)));
}

ZigzagState zigzag_predecessor(const Triangulation& t, const ZigzagState& s) {
  return state_of(prev_flag(t, flag_of(t, s)));
}

Zigzag trace_zigzag(const Triangulation& t, const ZigzagState& s) {
  return trace(t, flag_of(t, s), nullptr, 0);
}

std::vector<Zigzag> enumerate_zigzags(const Triangulation& t) {
  std::vector<std::int32_t> marks(t.face_count() * 9, -1);
  std::vector<Zigzag> out;
  std::int32_t next_id = 0;
  for (std::size_t fi = 0; fi < t.face_count(); ++fi) {
    const Face& f = t.face(static_cast<FaceIndex>(fi));
    static constexpr std::array<std::array<std::size_t, 3>, 6> kPerms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : kPerms) {
      const Flag fl{f.v[p[0]], f.v[p[1]], f.v[p[2]]};
      if (marks[flag_slot(t, fl)] >= 0) continue;
      const std::int32_t id = next_id++;
      Zigzag z = trace(t, fl, &marks, id);
      // The reversed orbit runs through the flags (w, s, u).
      const std::size_t n = z.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Flag rev{z.passes[(i + 1) % n].to, z.passes[i].to, z.passes[i].from};
        const std::size_t slot = flag_slot(t, rev);
        if (marks[slot] == id) throw InvariantViolation("self-reversed zigzag");
        marks[slot] = id;
      }
      out.push_back(canonical_form(z));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_z_knotted(const Triangulation& t) { return enumerate_zigzags(t).size() == 1; }

ZOrientation make_z_orientation(const std::vector<Zigzag>& canonical, const std::vector<bool>& bits) {
  if (bits.size() != canonical.size()) {
    throw DomainError("z-orientation needs " + std::to_string(canonical.size()) + " bits, got " +
                      std::to_string(bits.size()));
  }
  ZOrientation tau;
  tau.bits = bits;
  tau.chosen.reserve(canonical.size());
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    tau.chosen.push_back(bits[i] ? canonical_rotation(reversed(canonical[i])) : canonical[i]);
  }
  return tau;
}

ZOrientation make_z_orientation(const Triangulation& t, const std::vector<bool>& bits) {
  return make_z_orientation(enumerate_zigzags(t), bits);
}

ZOrientation z_orientation_from(const Triangulation& t, const std::vector<Zigzag>& directed) {
  const auto canonical = enumerate_zigzags(t);
  if (directed.size() != canonical.size()) {
    throw DomainError("expected " + std::to_string(canonical.size()) + " directed zigzags, got " +
                      std::to_string(directed.size()));
  }
  std::vector<bool> bits(canonical.size(), false);
  std::vector<bool> used(canonical.size(), false);
  for (const Zigzag& d : directed) {
    const Zigzag cf = canonical_form(d);
    const auto it = std::lower_bound(canonical.begin(), canonical.end(), cf);
    if (it == canonical.end() || *it != cf) throw DomainError("not a zigzag of this triangulation");
    const auto i = static_cast<std::size_t>(it - canonical.begin());
    if (used[i]) throw DomainError("zigzag listed twice");
    used[i] = true;
    bits[i] = !same_cycle(canonical[i], d);
  }
  return make_z_orientation(canonical, bits);
}

ZOrientation reversed(const ZOrientation& tau) {
  ZOrientation r;
  for (std::size_t i = 0; i < tau.chosen.size(); ++i) {
    r.chosen.push_back(canonical_rotation(reversed(tau.chosen[i])));
    r.bits.push_back(!tau.bits[i]);
  }
  return r;
}

std::vector<bool> parse_bits(std::string_view text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c == '1');
    } else {
      throw DomainError("bit string may contain only 0 and 1");
    }
  }
  return bits;
}

std::string format_bits(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<ZOrientation> all_z_orientations(const Triangulation& t) {
  const auto canonical = enumerate_zigzags(t);
  const std::size_t k = canonical.size();
  if (k > kMaxEnumeratedZigzags) {
    throw DomainError(std::to_string(k) + " zigzags; refusing to enumerate 2^" + std::to_string(k) +
                      " orientations");
  }
  std::vector<ZOrientation> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = ((mask >> (k - 1 - i)) & 1U) != 0;
    out.push_back(make_z_orientation(canonical, bits));
  }
  return out;
}

std::string_view to_string(ZType type) { return type == ZType::I ? "I" : "II"; }

std::size_t Classification::count_edges(ZType type) const {
  return static_cast<std::size_t>(std::count(edge_types.begin(), edge_types.end(), type));
}
std::size_t Classification::count_vertices(ZType type) const {
  return static_cast<std::size_t>(std::count(vertex_types.begin(), vertex_types.end(), type));
}
std::size_t Classification::count_faces(ZType type) const {
  return static_cast<std::size_t>(std::count(face_types.begin(), face_types.end(), type));
}

Classification classify(const Triangulation& t, const ZOrientation& tau) {
  std::vector<std::vector<Pass>> passes(t.edge_count());
  for (const Zigzag& z : tau.chosen) {
    for (const Pass& p : z.passes) {
      const auto e = t.find_edge(p.from, p.to);
      if (!e) throw DomainError("zigzag passes a non-edge");
      auto& slot = passes[static_cast<std::size_t>(*e)];
      if (slot.size() == 2) throw DomainError("not a z-orientation: edge " + t.edge_label(p.edge()) + " passed more than twice");
      slot.push_back(p);
    }
  }

  Classification c;
  c.edge_types.resize(t.edge_count());
  c.edge_directions.resize(t.edge_count());
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const auto& ps = passes[e];
    if (ps.size() != 2) {
      throw DomainError("not a z-orientation: edge " + t.edge_label(t.edge(static_cast<EdgeIndex>(e))) +
                        " passed " + std::to_string(ps.size()) + " times");
    }
    if (ps[0] == ps[1]) {
      c.edge_types[e] = ZType::II;
      c.edge_directions[e] = ps[0];
    } else {
      c.edge_types[e] = ZType::I;
    }
  }

  c.vertex_types.assign(t.vertex_count(), ZType::I);
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    if (c.edge_types[e] == ZType::II) {
      const Edge& ed = t.edge(static_cast<EdgeIndex>(e));
      c.vertex_types[static_cast<std::size_t>(ed.lo)] = ZType::II;
      c.vertex_types[static_cast<std::size_t>(ed.hi)] = ZType::II;
    }
  }

  c.face_types.resize(t.face_count());
  for (std::size_t fi = 0; fi < t.face_count(); ++fi) {
    const Face& f = t.face(static_cast<FaceIndex>(fi));
    std::size_t type_ii = 0;
    std::array<int, 3> out_degree{};
    for (const Edge& e : f.edges()) {
      const auto idx = static_cast<std::size_t>(t.edge_index(e));
      if (c.edge_types[idx] != ZType::II) continue;
      ++type_ii;
      ++out_degree[position(f, c.edge_directions[idx]->from)];
    }
    if (type_ii == 1) {
      c.face_types[fi] = ZType::I;
    } else if (type_ii == 3 && out_degree == std::array<int, 3>{1, 1, 1}) {
      c.face_types[fi] = ZType::II;
    } else {
      throw InvariantViolation("face " + t.face_label(f) + " is neither type I nor type II");
    }
  }
  return c;
}

std::vector<FaceIndex> face_shadow(const Triangulation& t, const Zigzag& z) {
  std::vector<FaceIndex> shadow;
  shadow.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Pass& a = z.passes[i];
    const Pass& b = z.passes[(i + 1) % z.size()];
    const auto f = t.find_face(a.from, a.to, b.to);
    if (!f || a.to != b.from) throw DomainError("consecutive passes do not share a face");
    shadow.push_back(*f);
  }
  return shadow;
}

bool is_homogeneous(const Classification& c, const Triangulation& t, const ZOrientation& tau) {
  if (c.count_faces(ZType::II) != 0) return false;
  for (const Zigzag& z : tau.chosen) {
    const std::size_t n = z.size();
    if (n % 3 != 0) return false;
    std::optional<std::size_t> residue;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<std::size_t>(t.edge_index(z.passes[i].edge()));
      const bool is_ii = c.edge_types[e] == ZType::II;
      if (is_ii && !residue) residue = i % 3;
    }
    if (!residue) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<std::size_t>(t.edge_index(z.passes[i].edge()));
      if ((c.edge_types[e] == ZType::II) != (i % 3 == *residue)) return false;
    }
  }
  return true;
}

bool is_homogeneous(const Triangulation& t, const ZOrientation& tau) {
  return is_homogeneous(classify(t, tau), t, tau);
}

std::vector<VertexBalance> type_ii_balance(const Triangulation& t, const Classification& c) {
  std::vector<VertexBalance> out;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (c.vertex_types[v] != ZType::II) continue;
    VertexBalance b{static_cast<VertexIndex>(v), 0, 0};
    for (EdgeIndex e : t.edges_of_vertex(static_cast<VertexIndex>(v))) {
      const auto& dir = c.edge_directions[static_cast<std::size_t>(e)];
      if (!dir) continue;
      if (dir->to == b.vertex) ++b.in;
      if (dir->from == b.vertex) ++b.out;
    }
    out.push_back(b);
  }
  return out;
}

std::string format_zigzag(const Triangulation& t, const Zigzag& z) {
  std::string s;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s += ' ';
    s += t.name(z.passes[i].from) + ">" + t.name(z.passes[i].to);
  }
  return s;
}

Zigzag parse_zigzag(const Triangulation& t, std::string_view text) {
  Zigzag z;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    const auto gt = tok.find('>');
    if (gt == std::string::npos) throw DomainError("pass '" + tok + "' is not of the form u>v");
    const VertexIndex from = t.vertex(tok.substr(0, gt));
    const VertexIndex to = t.vertex(tok.substr(gt + 1));
    if (!t.find_edge(from, to)) throw DomainError("pass '" + tok + "' is not an edge");
    z.passes.push_back({from, to});
  }
  return z;
}

}  // namespace zigzag
