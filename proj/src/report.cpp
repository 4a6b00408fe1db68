#include "zigzag/report.hpp"

#include <sstream>

#include "zigzag/surgery.hpp"

namespace zigzag {

namespace {

struct Facts {
  std::size_t vertices, edges, faces;
  int euler;
  std::vector<Zigzag> zigzags;
  Classification c;
  bool homogeneous;
  std::vector<VertexBalance> balance;
  bool pairs_listed = false;
  std::vector<SpecialPair> pairs;
};

Facts gather(const Triangulation& t, const ZOrientation& tau) {
  Facts f{t.vertex_count(), t.edge_count(), t.face_count(), euler_characteristic(t), tau.chosen,
          classify(t, tau), false, {}, false, {}};
  f.homogeneous = is_homogeneous(f.c, t, tau);
  f.balance = type_ii_balance(t, f.c);
  if (f.homogeneous && tau.chosen.size() == 1) {
    f.pairs_listed = true;
    f.pairs = find_special_pairs(t, tau);
  }
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string face_summary(const Classification& c) {
  const std::size_t one = c.count_faces(ZType::I);
  const std::size_t two = c.count_faces(ZType::II);
  if (two == 0) return "all faces type I";
  if (one == 0) return "all faces type II";
  return std::to_string(one) + " type I, " + std::to_string(two) + " type II";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string format_census(const std::vector<Zigzag>& zigzags) {
  const std::size_t k = zigzags.size();
  std::string out = std::to_string(k) + (k == 1 ? " zigzag" : " zigzags");
  bool uniform = true;
  for (const Zigzag& z : zigzags) uniform = uniform && z.size() == zigzags.front().size();
  if (k == 0) return out;
  if (uniform) return out + " × length " + std::to_string(zigzags.front().size());
  out += ", lengths";
  for (std::size_t i = 0; i < k; ++i) out += (i ? ", " : " ") + std::to_string(zigzags[i].size());
  return out;
}

std::string format_zigzag_listing(const Triangulation& t, const std::vector<Zigzag>& zigzags) {
  std::string out;
  for (std::size_t i = 0; i < zigzags.size(); ++i) {
    out += "z " + std::to_string(i) + " " + std::to_string(zigzags[i].size()) + "\n";
    out += format_zigzag(t, zigzags[i]) + "\n";
  }
  return out;
}

std::string format_classification(const Triangulation& t, const Classification& c) {
  std::ostringstream out;
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const Edge& edge = t.edge(static_cast<EdgeIndex>(e));
    out << "E " << t.name(edge.lo) << " " << t.name(edge.hi) << " " << to_string(c.edge_types[e]);
    if (const auto& d = c.edge_directions[e]) out << " " << t.name(d->from) << " " << t.name(d->to);
    out << "\n";
  }
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    out << "V " << t.name(static_cast<VertexIndex>(v)) << " " << to_string(c.vertex_types[v]) << "\n";
  }
  for (std::size_t f = 0; f < t.face_count(); ++f) {
    out << "F " << t.face_label(t.face(static_cast<FaceIndex>(f))) << " " << to_string(c.face_types[f]) << "\n";
  }
  return out.str();
}

std::string analyze_report(const Triangulation& t, const ZOrientation& tau) {
  const Facts f = gather(t, tau);
  std::ostringstream out;
  out << "vertices: " << f.vertices << ", edges: " << f.edges << ", faces: " << f.faces
      << ", euler characteristic: " << f.euler << "\n";
  out << "census: " << format_census(f.zigzags) << "\n";
  out << "z-orientation: " << format_bits(tau.bits) << "\n";
  out << "z-knotted: " << yes_no(f.zigzags.size() == 1) << "; homogeneous: " << yes_no(f.homogeneous) << "\n";
  out << "edges: " << f.c.count_edges(ZType::I) << " type I, " << f.c.count_edges(ZType::II) << " type II\n";
  out << "vertices: " << f.c.count_vertices(ZType::I) << " type I, " << f.c.count_vertices(ZType::II)
      << " type II\n";
  out << "faces: " << face_summary(f.c) << "\n";

  out << "type I vertices:";
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (f.c.vertex_types[v] == ZType::I) out << " " << t.name(static_cast<VertexIndex>(v));
  }
  out << "\n";

  out << "type II edges:";
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    if (const auto& d = f.c.edge_directions[e]) out << " " << t.name(d->from) << ">" << t.name(d->to);
  }
  out << "\n";

  out << "balance (vertex in out):\n";
  for (const VertexBalance& b : f.balance) {
    out << "  " << t.name(b.vertex) << " " << b.in << " " << b.out << (b.in == b.out ? "" : "  UNBALANCED") << "\n";
  }

  if (f.pairs_listed) {
    out << "special pairs: " << f.pairs.size() << "\n";
    for (const SpecialPair& p : f.pairs) out << "  " << describe(t, p) << "\n";
  } else {
    out << "special pairs: not applicable\n";
  }
  return out.str();
}

std::string analyze_tsv(const Triangulation& t, const ZOrientation& tau) {
  const Facts f = gather(t, tau);
  std::ostringstream out;
  auto row = [&](const std::string& key, const auto& value) { out << key << "\t" << value << "\n"; };
  row("vertices", f.vertices);
  row("edges", f.edges);
  row("faces", f.faces);
  row("euler_characteristic", f.euler);
  row("zigzags", f.zigzags.size());
  std::string lengths;
  for (const Zigzag& z : f.zigzags) lengths += (lengths.empty() ? "" : ",") + std::to_string(z.size());
  row("zigzag_lengths", lengths);
  row("z_orientation", format_bits(tau.bits));
  row("z_knotted", yes_no(f.zigzags.size() == 1));
  row("homogeneous", yes_no(f.homogeneous));
  row("type_i_edges", f.c.count_edges(ZType::I));
  row("type_ii_edges", f.c.count_edges(ZType::II));
  row("type_i_vertices", f.c.count_vertices(ZType::I));
  row("type_ii_vertices", f.c.count_vertices(ZType::II));
  row("type_i_faces", f.c.count_faces(ZType::I));
  row("type_ii_faces", f.c.count_faces(ZType::II));
  std::size_t unbalanced = 0;
  for (const VertexBalance& b : f.balance) unbalanced += b.in != b.out;
  row("unbalanced_vertices", unbalanced);
  if (f.pairs_listed) row("special_pairs", f.pairs.size());
  return out.str();
}

std::string export_dot(const Triangulation& t, const Classification* c) {
  std::ostringstream out;
  const char* arrow = c ? " -> " : " -- ";
  out << (c ? "digraph" : "graph") << " triangulation {\n";
  for (const auto& name : t.names()) out << "  " << quoted(name) << ";\n";
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const Edge& edge = t.edge(static_cast<EdgeIndex>(e));
    if (c && c->edge_directions[e]) {
      const Pass& d = *c->edge_directions[e];
      out << "  " << quoted(t.name(d.from)) << arrow << quoted(t.name(d.to)) << " [style=bold];\n";
    } else {
      out << "  " << quoted(t.name(edge.lo)) << arrow << quoted(t.name(edge.hi)) << (c ? " [dir=none]" : "")
          << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace zigzag
