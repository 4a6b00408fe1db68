#include "zigzag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "zigzag/errors.hpp"
#include "zigzag/eulerian.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/report.hpp"
#include "zigzag/surgery.hpp"
#include "zigzag/tree.hpp"

namespace zigzag {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw DomainError("cannot write " + path);
}

Triangulation load_triangulation(const std::string& path) { return parse_triangulation(read_file(path)); }

ZOrientation orientation_or_zero(const Triangulation& t, const std::optional<std::string>& bits) {
  if (bits) return make_z_orientation(t, parse_bits(*bits));
  return make_z_orientation(t, std::vector<bool>(enumerate_zigzags(t).size(), false));
}

ZOrientation first_homogeneous(const Triangulation& t) {
  for (const ZOrientation& tau : all_z_orientations(t)) {
    if (is_homogeneous(t, tau)) return tau;
  }
  throw DomainError("no homogeneous z-orientation");
}

Triangulation prefixed(const Triangulation& t, const std::string& prefix) {
  std::vector<FaceNames> faces = t.face_names();
  for (auto& f : faces) {
    for (auto& name : f) name = prefix + name;
  }
  return Triangulation::from_faces(faces);
}

std::vector<std::string> split_pair(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string s; std::getline(in, s, ',');) parts.push_back(s);
  if (parts.size() != 3) throw DomainError("pair '" + text + "' must be given as u,v,w");
  return parts;
}

// Writes `payload` to `path` and the summary to `out`; without a path the
// payload goes to `out` and the summary to `err`.
void emit(const std::optional<std::string>& path, const std::string& payload, const std::string& summary,
          std::ostream& out, std::ostream& err) {
  if (path) {
    write_file(*path, payload);
    out << summary;
  } else {
    out << payload;
    err << summary;
  }
}

std::string knot_summary(const Triangulation& t) {
  const auto zs = enumerate_zigzags(t);
  return "zigzags: " + std::to_string(zs.size()) + (zs.size() == 1 ? " (z-knotted)" : "") + "\n";
}

struct Options {
  int n = 0;
  std::string name;
  std::string input;
  std::optional<std::string> output;
  std::optional<std::string> zorient;
  std::string format = "text";
  bool listing = false;
  std::optional<std::string> extract, triangulate;
  std::string host, piece, host_pair, piece_pair;
  std::optional<std::string> host_zorient, piece_zorient;
};

int do_generate(const std::string& kind, const Options& o, std::ostream& out, std::ostream& err) {
  const Triangulation t = kind == "bipyramid" ? bipyramid(o.n) : platonic(o.name);
  emit(o.output, serialize_triangulation(t), knot_summary(t), out, err);
  return 0;
}

int do_analyze(const Options& o, std::ostream& out) {
  const Triangulation t = load_triangulation(o.input);
  const ZOrientation tau = orientation_or_zero(t, o.zorient);
  out << (o.format == "tsv" ? analyze_tsv(t, tau) : analyze_report(t, tau));
  if (o.listing) out << format_zigzag_listing(t, tau.chosen) << format_classification(t, classify(t, tau));
  return 0;
}

int do_convert(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.extract.has_value() == o.triangulate.has_value()) {
    throw CLI::ValidationError("convert needs exactly one of --extract and --triangulate");
  }
  if (o.extract) {
    const Triangulation t = load_triangulation(*o.extract);
    const ZOrientation tau = orientation_or_zero(t, o.zorient);
    const DirectedEmbedding d = extract_directed_embedding(t, tau);
    const std::string summary = "type II vertices: " + std::to_string(d.vertices.size()) +
                                ", arcs: " + std::to_string(d.arcs.size()) +
                                ", face cycles: " + std::to_string(d.faces.size()) + "\n";
    emit(o.output, serialize_embedding(d), summary, out, err);
    return 0;
  }
  const DirectedEmbedding d = parse_embedding(read_file(*o.triangulate));
  const OrientedTriangulation r = triangulate_embedding(d);
  const std::string summary = "vertices: " + std::to_string(r.triangulation.vertex_count()) +
                              ", edges: " + std::to_string(r.triangulation.edge_count()) +
                              ", faces: " + std::to_string(r.triangulation.face_count()) +
                              "\nz-orientation: " + format_bits(r.orientation.bits) + "\n";
  emit(o.output, serialize_triangulation(r.triangulation), summary, out, err);
  return 0;
}

int do_glue(const Options& o, std::ostream& out, std::ostream& err) {
  const Triangulation host = prefixed(load_triangulation(o.host), "L.");
  const Triangulation piece = prefixed(load_triangulation(o.piece), "R.");
  const ZOrientation host_tau =
      o.host_zorient ? make_z_orientation(host, parse_bits(*o.host_zorient)) : first_homogeneous(host);
  const ZOrientation piece_tau =
      o.piece_zorient ? make_z_orientation(piece, parse_bits(*o.piece_zorient)) : first_homogeneous(piece);

  const std::size_t k = piece_tau.chosen.size();
  if (host_tau.chosen.size() != 1) throw DomainError("host is not z-knotted");
  if (k != 2 && k != 4) throw DomainError("piece must have 2 or 4 zigzags, found " + std::to_string(k));
  const SiteKind kind = k == 2 ? SiteKind::two_zigzag_piece : SiteKind::four_zigzag_piece;

  const auto hp = split_pair(o.host_pair);
  const auto pp = split_pair(o.piece_pair);
  const SpecialPair host_pair = pair_from_names(host, "L." + hp[0], "L." + hp[1], "L." + hp[2]);
  const SpecialPair piece_pair = pair_from_names(piece, "R." + pp[0], "R." + pp[1], "R." + pp[2], kind);
  if (!is_special_pair(host, host_tau, classify(host, host_tau), host_pair.e1, host_pair.e2)) {
    throw DomainError("host pair " + o.host_pair + " is not special");
  }
  const GluingSite host_site = resolve_site(host, host_tau, host_pair);
  const GluingSite piece_site = resolve_site(piece, piece_tau, piece_pair);
  const GlueResult g = glue(host, host_tau, host_site, piece, piece_tau, piece_site);

  const Triangulation& t = g.triangulation;
  std::ostringstream summary;
  summary << "vertices: " << t.vertex_count() << ", edges: " << t.edge_count() << ", faces: " << t.face_count()
          << ", euler characteristic: " << euler_characteristic(t) << "\n"
          << "zigzag length: " << g.zigzag.size() << "\n"
          << "z-knotted: yes; homogeneous: yes\n"
          << "type I vertices: " << g.type_i_vertices << "\n"
          << "z-orientation: " << format_bits(g.orientation.bits) << "\n"
          << "predicted zigzag matches enumeration: yes\n";
  emit(o.output, serialize_triangulation(t), summary.str(), out, err);
  return 0;
}

int do_build_tree(const Options& o, std::ostream& out, std::ostream& err) {
  const TreeBuild b = tree_build(parse_tree(read_file(o.input)));
  const Triangulation& t = b.triangulation;
  const Classification c = classify(t, b.orientation);
  std::ostringstream summary;
  summary << format_build_log(b.log) << "vertices: " << t.vertex_count() << ", edges: " << t.edge_count()
          << ", faces: " << t.face_count() << ", euler characteristic: " << euler_characteristic(t) << "\n"
          << "z-knotted: yes; homogeneous: yes\n"
          << "type I vertices: " << c.count_vertices(ZType::I) << "\n"
          << "z-orientation: " << format_bits(b.orientation.bits) << "\n";
  emit(o.output, serialize_triangulation(t), summary.str(), out, err);
  return 0;
}

int do_verify(const Options& o, std::ostream& out) {
  const Triangulation t = load_triangulation(o.input);
  const ValidationReport report = validate(t);
  if (!report.ok()) {
    out << "valid: no\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
    return 1;
  }
  const ZOrientation tau = orientation_or_zero(t, o.zorient);
  const Classification c = classify(t, tau);
  std::size_t unbalanced = 0;
  for (const VertexBalance& b : type_ii_balance(t, c)) unbalanced += b.in != b.out;
  const bool homogeneous = is_homogeneous(c, t, tau);
  out << "valid: yes\n"
      << "euler characteristic: " << euler_characteristic(t) << "\n"
      << "census: " << format_census(tau.chosen) << "\n"
      << "z-orientation: " << format_bits(tau.bits) << "\n"
      << "faces: " << c.count_faces(ZType::I) << " type I, " << c.count_faces(ZType::II) << " type II\n"
      << "unbalanced type II vertices: " << unbalanced << "\n"
      << "homogeneous: " << (homogeneous ? "yes" : "no") << "\n";
  if (homogeneous) out << "round trip: " << (round_trip_check(t, tau) ? "yes" : "no") << "\n";
  return unbalanced == 0 && (!homogeneous || round_trip_check(t, tau)) ? 0 : 1;
}

int do_export_dot(const Options& o, std::ostream& out, std::ostream& err) {
  const Triangulation t = load_triangulation(o.input);
  std::optional<Classification> c;
  if (o.zorient) c = classify(t, make_z_orientation(t, parse_bits(*o.zorient)));
  emit(o.output, export_dot(t, c ? &*c : nullptr), "", out, err);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zigzags, z-orientations and z-knotted gluings of surface triangulations", "zigzag"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Write a bipyramid or Platonic triangulation");
  generate->require_subcommand(1);
  auto* gen_bp = generate->add_subcommand("bipyramid", "BP_n");
  gen_bp->add_option("--n", o.n, "Base length (>= 3)")->required();
  gen_bp->add_option("-o,--output", o.output, "Output .tri file");
  auto* gen_pl = generate->add_subcommand("platonic", "Tetrahedron, octahedron or icosahedron");
  gen_pl->add_option("--name", o.name, "Solid name")->required();
  gen_pl->add_option("-o,--output", o.output, "Output .tri file");

  auto* analyze = app.add_subcommand("analyze", "Census, classification and special pairs");
  analyze->add_option("file", o.input, "Input .tri file")->required();
  analyze->add_option("--zorient", o.zorient, "Bit per zigzag; 1 picks the reversal");
  analyze->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "tsv"}));
  analyze->add_flag("--listing", o.listing, "Append the chosen zigzags and the full classification");

  auto* convert = app.add_subcommand("convert", "Between triangulations and directed Eulerian embeddings");
  convert->add_option("--extract", o.extract, "Homogeneous .tri to reduce to its type-II embedding");
  convert->add_option("--triangulate", o.triangulate, ".eul embedding to cone into a triangulation");
  convert->add_option("--zorient", o.zorient, "Bit per zigzag for --extract");
  convert->add_option("-o,--output", o.output, "Output file");

  auto* glue_cmd = app.add_subcommand("glue", "Glue a piece into a z-knotted host along special pairs");
  glue_cmd->add_option("--host", o.host, "Host .tri")->required();
  glue_cmd->add_option("--piece", o.piece, "Piece .tri")->required();
  glue_cmd->add_option("--host-pair", o.host_pair, "e1=uv, e2=vw as u,v,w")->required();
  glue_cmd->add_option("--piece-pair", o.piece_pair, "e1=uv, e2=vw as u,v,w")->required();
  glue_cmd->add_option("--host-zorient", o.host_zorient, "Host bits (default: first homogeneous)");
  glue_cmd->add_option("--piece-zorient", o.piece_zorient, "Piece bits (default: first homogeneous)");
  glue_cmd->add_option("-o,--output", o.output, "Output .tri file");

  auto* build = app.add_subcommand("build-tree", "Glue bipyramids along a labelled tree");
  build->add_option("file", o.input, "Input .tree file")->required();
  build->add_option("-o,--output", o.output, "Output .tri file");

  auto* verify = app.add_subcommand("verify", "Check a triangulation and its z-orientation");
  verify->add_option("file", o.input, "Input .tri file")->required();
  verify->add_option("--zorient", o.zorient, "Bit per zigzag");

  auto* dot = app.add_subcommand("export-dot", "DOT graph, type-II edges bold when --zorient is given");
  dot->add_option("file", o.input, "Input .tri file")->required();
  dot->add_option("--zorient", o.zorient, "Bit per zigzag");
  dot->add_option("-o,--output", o.output, "Output .dot file");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);

    if (gen_bp->parsed()) return do_generate("bipyramid", o, out, err);
    if (gen_pl->parsed()) return do_generate("platonic", o, out, err);
    if (analyze->parsed()) return do_analyze(o, out);
    if (convert->parsed()) return do_convert(o, out, err);
    if (glue_cmd->parsed()) return do_glue(o, out, err);
    if (build->parsed()) return do_build_tree(o, out, err);
    if (verify->parsed()) return do_verify(o, out);
    if (dot->parsed()) return do_export_dot(o, out, err);
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zigzag
