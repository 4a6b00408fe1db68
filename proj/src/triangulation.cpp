#include "zigzag/triangulation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zigzag/errors.hpp"

namespace zigzag {

Face Face::of(VertexIndex a, VertexIndex b, VertexIndex c) {
  Face f{{a, b, c}};
  std::sort(f.v.begin(), f.v.end());
  return f;
}

VertexIndex Face::opposite(const Edge& e) const {
  for (VertexIndex x : v) {
    if (!e.contains(x)) return x;
  }
  throw InvariantViolation("edge is not on face");
}

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' || c == '#';
  });
}

Triangulation Triangulation::from_faces(const std::vector<FaceNames>& faces) {
  Triangulation t;
  std::set<std::string, std::less<>> names;
  for (const auto& f : faces) {
    for (const auto& n : f) {
      if (!is_valid_token(n)) throw DomainError("invalid vertex token '" + n + "'");
      names.insert(n);
    }
    if (f[0] == f[1] || f[0] == f[2] || f[1] == f[2]) {
      throw DomainError("face " + f[0] + " " + f[1] + " " + f[2] + " repeats a vertex");
    }
  }
  t.names_.assign(names.begin(), names.end());
  for (std::size_t i = 0; i < t.names_.size(); ++i) {
    t.index_.emplace(t.names_[i], static_cast<VertexIndex>(i));
  }

  std::set<Edge> edge_set;
  for (const auto& fn : faces) {
    const Face f = Face::of(t.index_.at(fn[0]), t.index_.at(fn[1]), t.index_.at(fn[2]));
    if (!t.face_lookup_.emplace(f, static_cast<FaceIndex>(t.faces_.size())).second) {
      throw DomainError("duplicate face " + fn[0] + " " + fn[1] + " " + fn[2]);
    }
    t.faces_.push_back(f);
    for (const Edge& e : f.edges()) edge_set.insert(e);
  }
  t.edges_.assign(edge_set.begin(), edge_set.end());

  const std::size_t nv = t.names_.size();
  t.edge_faces_.resize(t.edges_.size());
  t.vertex_edges_.resize(nv);
  t.vertex_faces_.resize(nv);
  for (std::size_t i = 0; i < t.edges_.size(); ++i) {
    const Edge& e = t.edges_[i];
    t.edge_lookup_.emplace(t.edge_key(e.lo, e.hi), static_cast<EdgeIndex>(i));
    t.vertex_edges_[static_cast<std::size_t>(e.lo)].push_back(static_cast<EdgeIndex>(i));
    t.vertex_edges_[static_cast<std::size_t>(e.hi)].push_back(static_cast<EdgeIndex>(i));
  }
  for (std::size_t i = 0; i < t.faces_.size(); ++i) {
    const Face& f = t.faces_[i];
    for (const Edge& e : f.edges()) {
      t.edge_faces_[static_cast<std::size_t>(t.edge_index(e))].push_back(static_cast<FaceIndex>(i));
    }
    for (VertexIndex x : f.v) t.vertex_faces_[static_cast<std::size_t>(x)].push_back(static_cast<FaceIndex>(i));
  }
  return t;
}

std::uint64_t Triangulation::edge_key(VertexIndex u, VertexIndex v) const {
  const auto e = Edge::of(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.lo)) << 32) |
         static_cast<std::uint32_t>(e.hi);
}

std::optional<VertexIndex> Triangulation::find_vertex(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Triangulation::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw DomainError("no vertex named '" + std::string(name) + "'");
  return *v;
}

std::optional<EdgeIndex> Triangulation::find_edge(VertexIndex u, VertexIndex v) const {
  if (u == v) return std::nullopt;
  auto it = edge_lookup_.find(edge_key(u, v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

EdgeIndex Triangulation::edge_index(const Edge& e) const {
  auto idx = find_edge(e.lo, e.hi);
  if (!idx) throw DomainError("no edge " + name(e.lo) + " " + name(e.hi));
  return *idx;
}

std::optional<FaceIndex> Triangulation::find_face(VertexIndex a, VertexIndex b, VertexIndex c) const {
  auto it = face_lookup_.find(Face::of(a, b, c));
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<FaceIndex> Triangulation::common_face(const Edge& a, const Edge& b) const {
  if (a == b) return std::nullopt;
  VertexIndex shared;
  if (b.contains(a.lo)) {
    shared = a.lo;
  } else if (b.contains(a.hi)) {
    shared = a.hi;
  } else {
    return std::nullopt;
  }
  return find_face(shared, a.other(shared), b.other(shared));
}

std::vector<FaceNames> Triangulation::face_names() const {
  std::vector<FaceNames> out;
  out.reserve(faces_.size());
  for (const Face& f : faces_) out.push_back({name(f.v[0]), name(f.v[1]), name(f.v[2])});
  return out;
}

std::string Triangulation::edge_label(const Edge& e) const { return name(e.lo) + " " + name(e.hi); }

std::string Triangulation::face_label(const Face& f) const {
  return name(f.v[0]) + " " + name(f.v[1]) + " " + name(f.v[2]);
}

bool Triangulation::same_faces(const Triangulation& other) const {
  if (names_ != other.names_ || faces_.size() != other.faces_.size()) return false;
  return std::all_of(faces_.begin(), faces_.end(),
                     [&](const Face& f) { return other.face_lookup_.contains(f); });
}

namespace {

// Adjacency of the link graph at v: for every face {v,x,y}, x and y are linked.
std::map<VertexIndex, std::vector<VertexIndex>> link_graph(const Triangulation& t, VertexIndex v) {
  std::map<VertexIndex, std::vector<VertexIndex>> adj;
  for (FaceIndex fi : t.faces_of_vertex(v)) {
    const Face& f = t.face(fi);
    std::array<VertexIndex, 2> others{};
    std::size_t k = 0;
    for (VertexIndex x : f.v) {
      if (x != v) others[k++] = x;
    }
    adj[others[0]].push_back(others[1]);
    adj[others[1]].push_back(others[0]);
  }
  return adj;
}

std::optional<std::string> link_problem(const Triangulation& t, VertexIndex v) {
  const auto adj = link_graph(t, v);
  if (adj.empty()) return "vertex " + t.name(v) + " lies in no face";
  for (const auto& [u, nbrs] : adj) {
    if (nbrs.size() != 2) {
      return "link of " + t.name(v) + " is not a cycle at " + t.name(u);
    }
  }
  // Degree 2 everywhere: a disjoint union of cycles. Require exactly one.
  std::set<VertexIndex> seen{adj.begin()->first};
  std::vector<VertexIndex> stack{adj.begin()->first};
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (VertexIndex w : adj.at(u)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  if (seen.size() != adj.size()) return "link of " + t.name(v) + " splits into several cycles";
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const Triangulation& t) {
  ValidationReport report;
  auto& out = report.violations;

  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    const auto nfaces = t.faces_of_edge(static_cast<EdgeIndex>(i)).size();
    if (nfaces != 2) {
      out.push_back("edge " + t.edge_label(t.edge(static_cast<EdgeIndex>(i))) + " lies in " +
                    std::to_string(nfaces) + (nfaces == 1 ? " face" : " faces"));
    }
  }

  // Two distinct triangles over distinct vertex triples always meet in an
  // edge, a vertex, or nothing; coinciding triples are rejected on
  // construction, so the intersection condition needs no separate pass.

  if (t.vertex_count() > 0) {
    std::vector<bool> seen(t.vertex_count(), false);
    std::vector<VertexIndex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexIndex u = stack.back();
      stack.pop_back();
      for (EdgeIndex e : t.edges_of_vertex(u)) {
        const VertexIndex w = t.edge(e).other(u);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != t.vertex_count()) out.push_back("graph disconnected");
  } else {
    out.push_back("no faces");
  }

  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (auto problem = link_problem(t, static_cast<VertexIndex>(v))) out.push_back(*problem);
  }
  return report;
}

LinkCycle vertex_link(const Triangulation& t, VertexIndex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= t.vertex_count()) throw DomainError("vertex out of range");
  if (auto problem = link_problem(t, v)) throw DomainError(*problem);
  const auto adj = link_graph(t, v);

  LinkCycle link{v, {}};
  const VertexIndex start = adj.begin()->first;
  const auto& first_nbrs = adj.at(start);
  VertexIndex prev = start;
  VertexIndex cur = std::min(first_nbrs[0], first_nbrs[1]);
  link.cycle.push_back(start);
  while (cur != start) {
    link.cycle.push_back(cur);
    const auto& nbrs = adj.at(cur);
    const VertexIndex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return link;
}

LinkCycle vertex_link(const Triangulation& t, std::string_view v) { return vertex_link(t, t.vertex(v)); }

int euler_characteristic(const Triangulation& t) {
  return static_cast<int>(t.vertex_count()) - static_cast<int>(t.edge_count()) +
         static_cast<int>(t.face_count());
}

Triangulation parse_triangulation(std::string_view text) {
  std::vector<FaceNames> faces;
  std::set<std::array<std::string, 3>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] != "f") throw ParseError(line_no, "unknown record '" + tokens[0] + "'");
    if (tokens.size() != 4) throw ParseError(line_no, "face record needs exactly three vertices");

    FaceNames f{tokens[1], tokens[2], tokens[3]};
    if (f[0] == f[1] || f[0] == f[2] || f[1] == f[2]) throw ParseError(line_no, "face with repeated vertex");
    auto key = f;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate face");
    faces.push_back(std::move(f));
  }
  return Triangulation::from_faces(faces);
}

std::string serialize_triangulation(const Triangulation& t) {
  std::string out;
  for (const auto& f : t.face_names()) out += "f " + f[0] + " " + f[1] + " " + f[2] + "\n";
  return out;
}

}  // namespace zigzag
