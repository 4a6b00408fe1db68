#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracle/orbit_walker.hpp"
#include "zigzag/surgery.hpp"
#include "zigzag/tree.hpp"

namespace testing_support {

std::vector<oracle::FaceTriple> triples(const zigzag::Triangulation& t);
oracle::VertexWalk walk_of(const zigzag::Triangulation& t, const zigzag::Zigzag& z);

struct GluedExample {
  zigzag::Triangulation host, piece;
  zigzag::ZOrientation host_tau, piece_tau;
  zigzag::GluingSite host_site, piece_site;
  zigzag::GlueResult result;
};

// G(BP_3, BP_m) with host pair 1,2,3 and piece pair 1,2,3, canonical
// orientations, names prefixed "L." and "R.".
GluedExample glue_bp3_with(int m);

// Random tree with at most `max_nodes` nodes and labels at most `max_label`
// that passes validate_tree; node 1 is the root.
zigzag::TreeSpec random_valid_tree(std::mt19937& rng, int max_nodes = 8, int max_label = 14);

// Every orientation for up to four zigzags, else `samples` random ones.
std::vector<zigzag::ZOrientation> tested_orientations(const zigzag::Triangulation& t, std::mt19937& rng,
                                                      std::size_t samples = 16);

}  // namespace testing_support
