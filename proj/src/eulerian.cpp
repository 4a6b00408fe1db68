#include "zigzag/eulerian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "zigzag/cyclic.hpp"
#include "zigzag/errors.hpp"

namespace zigzag {

const Arc& DirectedEmbedding::arc(int id) const {
  for (const Arc& a : arcs) {
    if (a.id == id) return a;
  }
  throw DomainError("no arc with index " + std::to_string(id));
}

std::string DirectedEmbedding::face_vertex_name(std::size_t k) const {
  const auto& f = faces.at(k);
  return f.name ? *f.name : "F" + std::to_string(k + 1);
}

ValidationReport validate(const DirectedEmbedding& d) {
  ValidationReport report;
  auto& out = report.violations;

  std::set<std::string> vertices(d.vertices.begin(), d.vertices.end());
  std::map<int, const Arc*> by_id;
  std::set<std::pair<std::string, std::string>> undirected;
  std::map<std::string, int> balance;
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const Arc& a : d.arcs) {
    if (!by_id.emplace(a.id, &a).second) out.push_back("arc index " + std::to_string(a.id) + " repeated");
    if (!is_valid_token(a.from) || !is_valid_token(a.to)) {
      out.push_back("arc " + std::to_string(a.id) + " has an invalid vertex token");
      continue;
    }
    if (a.from == a.to) {
      out.push_back("arc " + std::to_string(a.id) + " is a loop");
      continue;
    }
    vertices.insert(a.from);
    vertices.insert(a.to);
    if (!undirected.insert(std::minmax(a.from, a.to)).second) {
      out.push_back("arcs between " + a.from + " and " + a.to + " are not simple");
    }
    ++balance[a.from];
    --balance[a.to];
    adjacency[a.from].push_back(a.to);
    adjacency[a.to].push_back(a.from);
  }
  if (d.arcs.empty()) out.push_back("no arcs");

  for (const auto& [v, b] : balance) {
    if (b != 0) out.push_back("vertex " + v + " is unbalanced (out - in = " + std::to_string(b) + ")");
  }

  if (!vertices.empty()) {
    std::set<std::string> seen{*vertices.begin()};
    std::vector<std::string> stack{*vertices.begin()};
    while (!stack.empty()) {
      const std::string u = stack.back();
      stack.pop_back();
      for (const auto& w : adjacency[u]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != vertices.size()) out.push_back("graph disconnected");
  }

  std::map<int, int> uses;
  std::set<std::string> face_names;
  for (std::size_t k = 0; k < d.faces.size(); ++k) {
    const FaceCycle& f = d.faces[k];
    const std::string label = d.face_vertex_name(k);
    if (!is_valid_token(label)) out.push_back("face name '" + label + "' is not a valid token");
    if (!face_names.insert(label).second) out.push_back("face name " + label + " repeated");
    if (vertices.contains(label)) out.push_back("face name " + label + " clashes with a vertex");
    if (f.arcs.size() < 3) {
      out.push_back("face " + label + " has fewer than three arcs");
      continue;
    }
    bool known = true;
    for (int id : f.arcs) {
      if (!by_id.contains(id)) {
        out.push_back("face " + label + " uses unknown arc " + std::to_string(id));
        known = false;
      }
    }
    if (!known) continue;
    std::set<std::string> on_face;
    for (std::size_t i = 0; i < f.arcs.size(); ++i) {
      const Arc& a = *by_id.at(f.arcs[i]);
      const Arc& b = *by_id.at(f.arcs[(i + 1) % f.arcs.size()]);
      if (a.to != b.from) {
        out.push_back("face " + label + " is not a directed cycle at arcs " + std::to_string(a.id) + "," +
                      std::to_string(b.id));
      }
      if (!on_face.insert(a.from).second) out.push_back("face " + label + " revisits vertex " + a.from);
      ++uses[a.id];
    }
  }
  for (const Arc& a : d.arcs) {
    const int n = uses[a.id];
    if (n != 2) out.push_back("arc " + std::to_string(a.id) + " lies on " + std::to_string(n) + " face cycles");
  }
  return report;
}

DirectedEmbedding canonicalize(const DirectedEmbedding& d) {
  DirectedEmbedding c;
  std::set<std::string> vertices(d.vertices.begin(), d.vertices.end());
  for (const Arc& a : d.arcs) {
    vertices.insert(a.from);
    vertices.insert(a.to);
  }
  c.vertices.assign(vertices.begin(), vertices.end());

  std::vector<Arc> arcs = d.arcs;
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    renumber[arcs[i].id] = static_cast<int>(i + 1);
    arcs[i].id = static_cast<int>(i + 1);
  }
  c.arcs = std::move(arcs);

  for (std::size_t k = 0; k < d.faces.size(); ++k) {
    FaceCycle f;
    f.name = d.face_vertex_name(k);
    for (int id : d.faces[k].arcs) f.arcs.push_back(renumber.contains(id) ? renumber.at(id) : id);
    const std::span<const int> s(f.arcs);
    f.arcs = rotated(s, least_rotation(s));
    c.faces.push_back(std::move(f));
  }
  std::sort(c.faces.begin(), c.faces.end(),
            [](const FaceCycle& x, const FaceCycle& y) { return std::tie(x.name, x.arcs) < std::tie(y.name, y.arcs); });
  return c;
}

bool equivalent(const DirectedEmbedding& a, const DirectedEmbedding& b) {
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  return ca.vertices == cb.vertices && ca.arcs == cb.arcs && ca.faces == cb.faces;
}

DirectedEmbedding extract_directed_embedding(const Triangulation& t, const ZOrientation& tau) {
  const Classification c = classify(t, tau);
  if (!is_homogeneous(c, t, tau)) throw DomainError("z-orientation is not homogeneous");

  DirectedEmbedding d;
  std::map<Edge, int> arc_id;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (c.vertex_types[v] == ZType::II) d.vertices.push_back(t.name(static_cast<VertexIndex>(v)));
  }
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    if (c.edge_types[e] != ZType::II) continue;
    const Pass dir = *c.edge_directions[e];
    const int id = static_cast<int>(d.arcs.size()) + 1;
    d.arcs.push_back({id, t.name(dir.from), t.name(dir.to)});
    arc_id.emplace(t.edge(static_cast<EdgeIndex>(e)), id);
  }

  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (c.vertex_types[v] != ZType::I) continue;
    auto ring = vertex_link(t, static_cast<VertexIndex>(v)).cycle;
    const auto& first = c.edge_directions.at(static_cast<std::size_t>(t.edge_index(Edge::of(ring[0], ring[1]))));
    if (!first) throw InvariantViolation("link of type-I vertex " + t.name(static_cast<VertexIndex>(v)) + " has a type-I edge");
    if (first->from != ring[0]) std::reverse(ring.begin(), ring.end());

    FaceCycle f;
    f.name = t.name(static_cast<VertexIndex>(v));
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const VertexIndex from = ring[i];
      const VertexIndex to = ring[(i + 1) % ring.size()];
      const auto e = static_cast<std::size_t>(t.edge_index(Edge::of(from, to)));
      if (c.edge_types[e] != ZType::II || c.edge_directions[e]->from != from) {
        throw InvariantViolation("C(" + t.name(static_cast<VertexIndex>(v)) + ") is not a directed type-II cycle");
      }
      f.arcs.push_back(arc_id.at(Edge::of(from, to)));
    }
    const std::span<const int> s(f.arcs);
    f.arcs = rotated(s, least_rotation(s));
    d.faces.push_back(std::move(f));
  }

  if (auto report = validate(d); !report.ok()) {
    throw InvariantViolation("extracted embedding is invalid: " + report.violations.front());
  }
  return d;
}

DirectedEmbedding embedding_of_type_ii_faces(const Triangulation& t, const ZOrientation& tau) {
  const Classification c = classify(t, tau);
  if (c.count_faces(ZType::I) != 0) throw DomainError("every face must be of type II");

  DirectedEmbedding d;
  for (const auto& name : t.names()) d.vertices.push_back(name);
  std::map<std::pair<VertexIndex, VertexIndex>, int> arc_id;
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const Pass dir = *c.edge_directions[e];
    const int id = static_cast<int>(d.arcs.size()) + 1;
    d.arcs.push_back({id, t.name(dir.from), t.name(dir.to)});
    arc_id.emplace(std::pair{dir.from, dir.to}, id);
  }
  for (const Face& f : t.faces()) {
    // A type-II face is a directed 3-cycle; follow it from its least vertex.
    FaceCycle cycle;
    VertexIndex at = f.v[0];
    for (int step = 0; step < 3; ++step) {
      for (VertexIndex next : f.v) {
        if (auto it = arc_id.find({at, next}); it != arc_id.end()) {
          cycle.arcs.push_back(it->second);
          at = next;
          break;
        }
      }
    }
    d.faces.push_back(std::move(cycle));
  }
  return d;
}

OrientedTriangulation triangulate_embedding(const DirectedEmbedding& d) {
  if (auto report = validate(d); !report.ok()) {
    throw DomainError("invalid directed embedding: " + report.violations.front());
  }

  std::vector<FaceNames> faces;
  std::vector<std::string> cone_names;
  for (std::size_t k = 0; k < d.faces.size(); ++k) {
    const std::string apex = d.face_vertex_name(k);
    cone_names.push_back(apex);
    for (int id : d.faces[k].arcs) {
      const Arc& a = d.arc(id);
      faces.push_back({apex, a.from, a.to});
    }
  }

  OrientedTriangulation out;
  out.triangulation = Triangulation::from_faces(faces);
  const Triangulation& t = out.triangulation;
  if (auto report = validate(t); !report.ok()) {
    throw DomainError("faces do not close up into a surface: " + report.violations.front());
  }

  std::set<std::pair<VertexIndex, VertexIndex>> arcs;
  for (const Arc& a : d.arcs) arcs.emplace(t.vertex(a.from), t.vertex(a.to));

  const auto canonical = enumerate_zigzags(t);
  std::vector<bool> bits;
  for (const Zigzag& z : canonical) {
    bool forward = true;
    bool backward = true;
    bool touches_arc = false;
    for (const Pass& p : z.passes) {
      const bool along = arcs.contains({p.from, p.to});
      const bool against = arcs.contains({p.to, p.from});
      if (!along && !against) continue;
      touches_arc = true;
      forward = forward && along;
      backward = backward && against;
    }
    if (!touches_arc || forward == backward) {
      throw InvariantViolation("zigzag does not follow the arcs in a single direction");
    }
    bits.push_back(backward);
  }
  out.orientation = make_z_orientation(canonical, bits);

  const Classification c = classify(t, out.orientation);
  for (const auto& [from, to] : arcs) {
    const auto e = static_cast<std::size_t>(t.edge_index(Edge::of(from, to)));
    if (c.edge_types[e] != ZType::II || c.edge_directions[e]->from != from) {
      throw InvariantViolation("arc is not a directed type-II edge of the triangulation");
    }
  }
  for (const auto& name : cone_names) {
    if (c.vertex_types[static_cast<std::size_t>(t.vertex(name))] != ZType::I) {
      throw InvariantViolation("cone vertex " + name + " is not of type I");
    }
  }
  if (!is_homogeneous(c, t, out.orientation)) throw InvariantViolation("T(embedding) is not homogeneous");
  return out;
}

bool round_trip_check(const Triangulation& t, const ZOrientation& tau) {
  const auto back = triangulate_embedding(extract_directed_embedding(t, tau));
  return t.same_faces(back.triangulation) && back.orientation == tau;
}

DirectedEmbedding parse_embedding(std::string_view text) {
  DirectedEmbedding d;
  std::set<std::string> vertices;
  std::set<int> ids;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.empty()) continue;

    auto to_int = [&](const std::string& s) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty()) throw ParseError(line_no, "expected an integer arc index, got '" + s + "'");
      return value;
    };

    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line_no, "vertex record needs one name");
      vertices.insert(tok[1]);
    } else if (tok[0] == "a") {
      if (tok.size() != 4) throw ParseError(line_no, "arc record needs index, from, to");
      const int id = to_int(tok[1]);
      if (!ids.insert(id).second) throw ParseError(line_no, "duplicate arc index " + tok[1]);
      d.arcs.push_back({id, tok[2], tok[3]});
    } else if (tok[0] == "c") {
      if (tok.size() < 3) throw ParseError(line_no, "face record needs a name and arcs");
      FaceCycle f;
      f.name = tok[1];
      for (std::size_t i = 2; i < tok.size(); ++i) f.arcs.push_back(to_int(tok[i]));
      d.faces.push_back(std::move(f));
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  for (const Arc& a : d.arcs) {
    vertices.insert(a.from);
    vertices.insert(a.to);
  }
  d.vertices.assign(vertices.begin(), vertices.end());
  return d;
}

std::string serialize_embedding(const DirectedEmbedding& d) {
  const DirectedEmbedding c = canonicalize(d);
  std::string out;
  for (const auto& v : c.vertices) out += "v " + v + "\n";
  for (const Arc& a : c.arcs) out += "a " + std::to_string(a.id) + " " + a.from + " " + a.to + "\n";
  for (const FaceCycle& f : c.faces) {
    out += "c " + *f.name;
    for (int id : f.arcs) out += " " + std::to_string(id);
    out += "\n";
  }
  return out;
}

}  // namespace zigzag
