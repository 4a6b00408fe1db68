#include "zigzag/tree.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

#include "zigzag/errors.hpp"
#include "zigzag/generators.hpp"

namespace zigzag {

namespace {

std::map<int, std::set<int>> adjacency(const TreeSpec& spec) {
  std::map<int, std::set<int>> adj;
  for (const auto& [id, label] : spec.labels) adj[id];
  for (const auto& [a, b] : spec.edges) {
    if (spec.labels.contains(a) && spec.labels.contains(b) && a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  return adj;
}

std::string node_prefix(int id) { return "node" + std::to_string(id) + "."; }

}  // namespace

ValidationReport validate_tree(const TreeSpec& spec) {
  ValidationReport r;
  if (spec.labels.empty()) {
    r.violations.push_back("tree has no nodes");
    return r;
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : spec.edges) {
    if (!spec.labels.contains(a) || !spec.labels.contains(b)) {
      r.violations.push_back("edge " + std::to_string(a) + "-" + std::to_string(b) + " names an unknown node");
    } else if (a == b) {
      r.violations.push_back("node " + std::to_string(a) + " is adjacent to itself");
    } else if (!seen.insert(std::minmax(a, b)).second) {
      r.violations.push_back("edge " + std::to_string(a) + "-" + std::to_string(b) + " is repeated");
    }
  }
  const auto adj = adjacency(spec);

  std::set<int> reached{spec.labels.begin()->first};
  std::vector<int> stack{spec.labels.begin()->first};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj.at(x)) {
      if (reached.insert(y).second) stack.push_back(y);
    }
  }
  if (reached.size() != spec.labels.size()) r.violations.push_back("tree is disconnected");
  if (seen.size() + 1 != spec.labels.size()) r.violations.push_back("tree has a cycle");

  std::vector<int> odd;
  for (const auto& [id, label] : spec.labels) {
    if (label % 2 != 0) odd.push_back(id);
  }
  if (odd.empty()) r.violations.push_back("no node has an odd label, so there is no root");
  if (odd.size() > 1) r.violations.push_back("more than one node has an odd label");

  for (const auto& [id, label] : spec.labels) {
    const std::size_t degree = adj.at(id).size();
    const std::string who = "node " + std::to_string(id) + " (label " + std::to_string(label) + ")";
    if (label % 2 != 0) {
      if (label < 3) {
        r.violations.push_back("root " + who + " needs a label of at least 3");
      } else if (static_cast<std::size_t>((label - 1) / 2) < degree) {
        r.violations.push_back("root " + who + " has degree " + std::to_string(degree) + " > k");
      }
    } else if (degree == 1) {
      if (label < 4) r.violations.push_back("leaf " + who + " needs an even label of at least 4");
    } else if (degree == 0) {
      r.violations.push_back(who + " has no neighbours but is not the root");
    } else if (label < 0 || static_cast<std::size_t>(label / 2) < degree) {
      r.violations.push_back("inner " + who + " has degree " + std::to_string(degree) + " > k");
    }
  }
  return r;
}

int tree_root(const TreeSpec& spec) {
  std::optional<int> root;
  for (const auto& [id, label] : spec.labels) {
    if (label % 2 == 0) continue;
    if (root) throw DomainError("more than one node has an odd label");
    root = id;
  }
  if (!root) throw DomainError("no node has an odd label, so there is no root");
  return *root;
}

TreeSpec parse_tree(std::string_view text) {
  TreeSpec spec;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
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
      if (used != s.size()) throw ParseError(line_no, "expected an integer, got '" + s + "'");
      return value;
    };

    if (tok[0] == "n") {
      if (tok.size() != 3) throw ParseError(line_no, "node record needs an id and a label");
      const int id = to_int(tok[1]);
      if (!spec.labels.emplace(id, to_int(tok[2])).second) {
        throw ParseError(line_no, "node " + tok[1] + " defined twice");
      }
    } else if (tok[0] == "a") {
      if (tok.size() != 3) throw ParseError(line_no, "adjacency record needs two node ids");
      spec.edges.emplace_back(to_int(tok[1]), to_int(tok[2]));
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  return spec;
}

std::string serialize_tree(const TreeSpec& spec) {
  std::string out;
  for (const auto& [id, label] : spec.labels) out += "n " + std::to_string(id) + " " + std::to_string(label) + "\n";
  auto edges = spec.edges;
  for (auto& e : edges) e = std::minmax(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out += "a " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

namespace {

// Current names of a node's base vertices and which base edges are spent.
// Base edge i joins base[i] and base[i + 1].
struct BaseState {
  std::vector<std::string> base;
  std::vector<bool> used;

  std::size_t size() const { return base.size(); }
  const std::string& at(std::size_t i) const { return base[i % base.size()]; }
  bool free_pair(std::size_t j) const { return !used[j % size()] && !used[(j + 1) % size()]; }
};

BaseState fresh_base(int n, const std::string& prefix) {
  BaseState s;
  for (int i = 1; i <= n; ++i) s.base.push_back(prefix + std::to_string(i));
  s.used.assign(static_cast<std::size_t>(n), false);
  return s;
}

// The order of a special pair's edges that admits a side labelling.
std::optional<GluingSite> try_resolve(const Triangulation& t, const ZOrientation& tau, const SpecialPair& p) {
  try {
    return resolve_site(t, tau, p);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

TreeBuild tree_build(const TreeSpec& spec) {
  if (const auto report = validate_tree(spec); !report.ok()) {
    throw DomainError("invalid tree: " + report.violations.front());
  }
  const auto adj = adjacency(spec);
  const int root = tree_root(spec);

  TreeBuild out;
  const int root_n = spec.labels.at(root);
  out.triangulation = bipyramid(root_n, node_prefix(root));
  out.orientation = bipyramid_canonical_zorientation(out.triangulation, root_n, node_prefix(root));

  std::map<int, BaseState> bases;
  bases[root] = fresh_base(root_n, node_prefix(root));

  std::deque<std::pair<int, int>> queue{{root, root}};  // node, parent
  while (!queue.empty()) {
    const auto [id, parent] = queue.front();
    queue.pop_front();
    for (int child : adj.at(id)) {
      if (child == parent) continue;
      const Triangulation& t = out.triangulation;
      const Classification c = classify(t, out.orientation);

      BaseState& hb = bases.at(id);
      std::optional<GluingSite> host_site;
      std::size_t host_j = 0;
      for (std::size_t j = 0; j < hb.size() && !host_site; ++j) {
        if (!hb.free_pair(j)) continue;
        const SpecialPair p = pair_from_names(t, hb.at(j), hb.at(j + 1), hb.at(j + 2));
        if (!is_special_pair(t, out.orientation, c, p.e1, p.e2)) continue;
        host_site = try_resolve(t, out.orientation, p);
        if (!host_site) host_site = try_resolve(t, out.orientation, swapped(p));
        host_j = j;
      }
      if (!host_site) {
        throw InvariantViolation("node " + std::to_string(id) + " has no special base pair left");
      }

      const int m = spec.labels.at(child);
      const std::string prefix = node_prefix(child);
      const Triangulation piece = bipyramid(m, prefix);
      const ZOrientation piece_tau = bipyramid_canonical_zorientation(piece, m, prefix);
      const SiteKind kind = m % 4 == 2 ? SiteKind::two_zigzag_piece : SiteKind::four_zigzag_piece;
      BaseState pb = fresh_base(m, prefix);

      std::optional<GluingSite> piece_site;
      std::size_t piece_j = 0;
      for (std::size_t j = 0; j < pb.size() && !piece_site; ++j) {
        const SpecialPair p = pair_from_names(piece, pb.at(j), pb.at(j + 1), pb.at(j + 2), kind);
        for (const SpecialPair& q : {p, swapped(p)}) {
          auto site = try_resolve(piece, piece_tau, q);
          if (site && check_compatibility(*host_site, *site)) {
            piece_site = site;
            piece_j = j;
            break;
          }
        }
      }
      if (!piece_site) {
        throw InvariantViolation("node " + std::to_string(child) + " has no base pair compatible with its parent");
      }

      GlueResult g = glue(t, out.orientation, *host_site, piece, piece_tau, *piece_site);

      GluingStep step;
      step.parent = id;
      step.child = child;
      step.kind = kind;
      step.host_pair = describe(t, host_site->pair);
      step.piece_pair = describe(piece, piece_site->pair);
      step.vertices = g.triangulation.vertex_count();
      step.edges = g.triangulation.edge_count();
      step.faces = g.triangulation.face_count();
      out.log.steps.push_back(step);

      hb.used[host_j] = hb.used[(host_j + 1) % hb.size()] = true;
      pb.used[piece_j] = pb.used[(piece_j + 1) % pb.size()] = true;
      for (auto& name : pb.base) {
        if (name == piece_site->v1) name = host_site->v1;
        else if (name == piece_site->v2) name = host_site->v2;
      }
      bases[child] = std::move(pb);

      out.triangulation = std::move(g.triangulation);
      out.orientation = std::move(g.orientation);
      queue.emplace_back(child, id);
    }
  }

  const Triangulation& t = out.triangulation;
  const Classification c = classify(t, out.orientation);
  if (euler_characteristic(t) != 2 || out.orientation.chosen.size() != 1 || !is_homogeneous(c, t, out.orientation) ||
      c.count_vertices(ZType::I) != 2 * spec.labels.size()) {
    throw InvariantViolation("tree build lost sphericity, z-knottedness or homogeneity");
  }
  return out;
}

std::string format_build_log(const BuildLog& log) {
  std::string out;
  for (std::size_t i = 0; i < log.steps.size(); ++i) {
    const GluingStep& s = log.steps[i];
    out += "step " + std::to_string(i + 1) + ": node " + std::to_string(s.child) + " into node " +
           std::to_string(s.parent) + " (" + std::string(to_string(s.kind)) + "), host pair " + s.host_pair +
           ", piece pair " + s.piece_pair + "; V=" + std::to_string(s.vertices) + " E=" + std::to_string(s.edges) +
           " F=" + std::to_string(s.faces) + "\n";
  }
  return out;
}

}  // namespace zigzag
