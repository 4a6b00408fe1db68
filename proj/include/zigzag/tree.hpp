#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zigzag/surgery.hpp"
#include "zigzag/triangulation.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

/// A labelled tree: node id -> label, plus undirected adjacencies. The root
/// is the unique node with an odd label.
struct TreeSpec {
  std::map<int, int> labels;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const TreeSpec&) const = default;
};

/// Every broken structural or labelling rule, one message each.
ValidationReport validate_tree(const TreeSpec& spec);

/// The odd-labelled node; throws DomainError unless there is exactly one.
int tree_root(const TreeSpec& spec);

/// `.tree` text: `n <id> <label>` and `a <id1> <id2>` records.
TreeSpec parse_tree(std::string_view text);
std::string serialize_tree(const TreeSpec& spec);

struct GluingStep {
  int parent = 0;
  int child = 0;
  SiteKind kind = SiteKind::two_zigzag_piece;
  std::string host_pair;   // in the names of the triangulation before the step
  std::string piece_pair;  // in the child's own bipyramid
  std::size_t vertices = 0, edges = 0, faces = 0;
};

struct BuildLog {
  std::vector<GluingStep> steps;
};

struct TreeBuild {
  Triangulation triangulation;
  ZOrientation orientation;
  BuildLog log;
};

/// Glues BP_label for every node into the root's BP_{2k+1}, root first and
/// children in id order. Vertices of node `i` are named `node<i>.<name>`.
/// Throws DomainError if the spec is invalid and InvariantViolation if a
/// step loses z-knottedness or homogeneity.
TreeBuild tree_build(const TreeSpec& spec);

std::string format_build_log(const BuildLog& log);

}  // namespace zigzag
