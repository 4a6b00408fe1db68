#include "support.hpp"

#include "zigzag/generators.hpp"

namespace testing_support {

using namespace zigzag;

std::vector<oracle::FaceTriple> triples(const Triangulation& t) {
  std::vector<oracle::FaceTriple> out;
  for (const FaceNames& f : t.face_names()) out.push_back({f[0], f[1], f[2]});
  return out;
}

oracle::VertexWalk walk_of(const Triangulation& t, const Zigzag& z) {
  oracle::VertexWalk out;
  for (const Pass& p : z.passes) out.push_back(t.name(p.from));
  return out;
}

GluedExample glue_bp3_with(int m) {
  GluedExample g;
  g.host = bipyramid(3, "L.");
  g.host_tau = bipyramid_canonical_zorientation(g.host, 3, "L.");
  g.piece = bipyramid(m, "R.");
  g.piece_tau = bipyramid_canonical_zorientation(g.piece, m, "R.");
  const SiteKind kind = m % 4 == 2 ? SiteKind::two_zigzag_piece : SiteKind::four_zigzag_piece;
  g.host_site = resolve_site(g.host, g.host_tau, pair_from_names(g.host, "L.1", "L.2", "L.3"));
  g.piece_site = resolve_site(g.piece, g.piece_tau, pair_from_names(g.piece, "R.1", "R.2", "R.3", kind));
  g.result = glue(g.host, g.host_tau, g.host_site, g.piece, g.piece_tau, g.piece_site);
  return g;
}

TreeSpec random_valid_tree(std::mt19937& rng, int max_nodes, int max_label) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(1, max_nodes)(rng);
    TreeSpec spec;
    spec.labels[1] = 2 * std::uniform_int_distribution<int>(1, (max_label - 1) / 2)(rng) + 1;
    for (int i = 2; i <= n; ++i) {
      spec.labels[i] = 2 * std::uniform_int_distribution<int>(2, max_label / 2)(rng);
      spec.edges.emplace_back(std::uniform_int_distribution<int>(1, i - 1)(rng), i);
    }
    if (validate_tree(spec).ok()) return spec;
  }
}

std::vector<ZOrientation> tested_orientations(const Triangulation& t, std::mt19937& rng, std::size_t samples) {
  const auto zigzags = enumerate_zigzags(t);
  if (zigzags.size() <= 4) return all_z_orientations(t);
  std::vector<ZOrientation> out;
  std::bernoulli_distribution coin;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<bool> bits(zigzags.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = coin(rng);
    out.push_back(make_z_orientation(zigzags, bits));
  }
  return out;
}

}  // namespace testing_support
