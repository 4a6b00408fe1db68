#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zigzag/cli.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/eulerian.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/report.hpp"
#include "zigzag/surgery.hpp"
#include "zigzag/tree.hpp"

namespace py = pybind11;
using namespace zigzag;

namespace {

using NamedZigzag = std::vector<std::pair<std::string, std::string>>;

NamedZigzag named(const Triangulation& t, const Zigzag& z) {
  NamedZigzag out;
  for (const Pass& p : z.passes) out.emplace_back(t.name(p.from), t.name(p.to));
  return out;
}

SpecialPair pair_from_text(const Triangulation& t, const std::string& text, SiteKind kind) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string s; std::getline(in, s, ',');) parts.push_back(s);
  if (parts.size() != 3) throw DomainError("pair '" + text + "' must be given as u,v,w");
  return pair_from_names(t, parts[0], parts[1], parts[2], kind);
}

py::dict classification_dict(const Triangulation& t, const Classification& c) {
  py::dict d;
  d["type_i_edges"] = c.count_edges(ZType::I);
  d["type_ii_edges"] = c.count_edges(ZType::II);
  d["type_i_vertices"] = c.count_vertices(ZType::I);
  d["type_ii_vertices"] = c.count_vertices(ZType::II);
  d["type_i_faces"] = c.count_faces(ZType::I);
  d["type_ii_faces"] = c.count_faces(ZType::II);
  std::vector<std::pair<std::string, std::string>> directed;
  for (const auto& dir : c.edge_directions) {
    if (dir) directed.emplace_back(t.name(dir->from), t.name(dir->to));
  }
  d["type_ii_directions"] = directed;
  return d;
}

}  // namespace

PYBIND11_MODULE(pyzigzag, m) {
  m.doc() = "Zigzags, z-orientations and z-knotted gluings of surface triangulations";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Triangulation>(m, "Triangulation")
      .def_static("from_faces", &Triangulation::from_faces, py::arg("faces"))
      .def_static("parse", &parse_triangulation, py::arg("text"))
      .def("serialize", &serialize_triangulation)
      .def_property_readonly("vertex_count", &Triangulation::vertex_count)
      .def_property_readonly("edge_count", &Triangulation::edge_count)
      .def_property_readonly("face_count", &Triangulation::face_count)
      .def_property_readonly("names",
                             [](const Triangulation& t) {
                               return std::vector<std::string>(t.names().begin(), t.names().end());
                             })
      .def_property_readonly("faces", &Triangulation::face_names)
      .def("euler_characteristic", &euler_characteristic)
      .def("validate", [](const Triangulation& t) { return validate(t).violations; })
      .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; })
      .def("__repr__", [](const Triangulation& t) {
        return "<Triangulation V=" + std::to_string(t.vertex_count()) + " E=" + std::to_string(t.edge_count()) +
               " F=" + std::to_string(t.face_count()) + ">";
      });

  py::class_<ZOrientation>(m, "ZOrientation")
      .def_property_readonly("bits", [](const ZOrientation& tau) { return format_bits(tau.bits); })
      .def_property_readonly("zigzag_count", [](const ZOrientation& tau) { return tau.chosen.size(); })
      .def("__eq__", [](const ZOrientation& a, const ZOrientation& b) { return a == b; });

  m.def("bipyramid", &bipyramid, py::arg("n"), py::arg("prefix") = "");
  m.def("platonic", &platonic, py::arg("name"));
  m.def("enumerate_zigzags", [](const Triangulation& t) {
    std::vector<NamedZigzag> out;
    for (const Zigzag& z : enumerate_zigzags(t)) out.push_back(named(t, z));
    return out;
  });
  m.def("census", [](const Triangulation& t) {
    std::vector<std::size_t> lengths;
    for (const Zigzag& z : enumerate_zigzags(t)) lengths.push_back(z.size());
    return lengths;
  });
  m.def("is_z_knotted", &is_z_knotted);
  m.def(
      "make_z_orientation",
      [](const Triangulation& t, const std::string& bits) { return make_z_orientation(t, parse_bits(bits)); },
      py::arg("t"), py::arg("bits"));
  m.def(
      "bipyramid_canonical_zorientation",
      [](const Triangulation& t, int n, const std::string& prefix) {
        return bipyramid_canonical_zorientation(t, n, prefix);
      },
      py::arg("t"), py::arg("n"), py::arg("prefix") = "");
  m.def("chosen_zigzags", [](const Triangulation& t, const ZOrientation& tau) {
    std::vector<NamedZigzag> out;
    for (const Zigzag& z : tau.chosen) out.push_back(named(t, z));
    return out;
  });
  m.def("classify", [](const Triangulation& t, const ZOrientation& tau) {
    return classification_dict(t, classify(t, tau));
  });
  m.def("is_homogeneous", py::overload_cast<const Triangulation&, const ZOrientation&>(&is_homogeneous));

  m.def("extract_embedding", [](const Triangulation& t, const ZOrientation& tau) {
    return serialize_embedding(extract_directed_embedding(t, tau));
  });
  m.def("triangulate_embedding", [](const std::string& text) {
    OrientedTriangulation r = triangulate_embedding(parse_embedding(text));
    return py::make_tuple(r.triangulation, r.orientation);
  });
  m.def("round_trip_check", &round_trip_check);

  m.def("special_pairs", [](const Triangulation& t, const ZOrientation& tau) {
    std::vector<std::string> out;
    for (const SpecialPair& p : find_special_pairs(t, tau)) out.push_back(describe(t, p));
    return out;
  });
  m.def(
      "glue",
      [](const Triangulation& host, const ZOrientation& host_tau, const std::string& host_pair,
         const Triangulation& piece, const ZOrientation& piece_tau, const std::string& piece_pair) {
        const SiteKind kind =
            piece_tau.chosen.size() == 2 ? SiteKind::two_zigzag_piece : SiteKind::four_zigzag_piece;
        const GluingSite hs = resolve_site(host, host_tau, pair_from_text(host, host_pair, SiteKind::host));
        const GluingSite ps = resolve_site(piece, piece_tau, pair_from_text(piece, piece_pair, kind));
        GlueResult g = glue(host, host_tau, hs, piece, piece_tau, ps);
        return py::make_tuple(g.triangulation, g.orientation, g.zigzag.size());
      },
      py::arg("host"), py::arg("host_tau"), py::arg("host_pair"), py::arg("piece"), py::arg("piece_tau"),
      py::arg("piece_pair"));

  m.def("validate_tree", [](const std::string& text) { return validate_tree(parse_tree(text)).violations; });
  m.def("tree_build", [](const std::string& text) {
    TreeBuild b = tree_build(parse_tree(text));
    return py::make_tuple(b.triangulation, b.orientation, format_build_log(b.log));
  });

  m.def("analyze_report", &analyze_report);
  m.def(
      "export_dot",
      [](const Triangulation& t, const ZOrientation* tau) {
        if (!tau) return export_dot(t);
        const Classification c = classify(t, *tau);
        return export_dot(t, &c);
      },
      py::arg("t"), py::arg("tau") = nullptr);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
