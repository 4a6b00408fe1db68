#include "oracle/orbit_walker.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

namespace {

using State = std::tuple<std::string, std::string, std::string>;

bool has(const FaceTriple& f, const std::string& x) { return std::find(f.begin(), f.end(), x) != f.end(); }

State step(const std::vector<FaceTriple>& faces, const State& s) {
  const auto& [u, v, w] = s;
  for (const FaceTriple& f : faces) {
    if (has(f, v) && has(f, w) && !has(f, u)) {
      for (const std::string& z : f) {
        if (z != v && z != w) return {v, w, z};
      }
    }
  }
  throw std::runtime_error("edge " + v + " " + w + " lies in one face only");
}

}  // namespace

std::vector<VertexWalk> walk_all_zigzags(const std::vector<FaceTriple>& faces) {
  std::set<State> seen;
  std::vector<VertexWalk> out;
  for (const FaceTriple& f : faces) {
    std::array<int, 3> p{0, 1, 2};
    do {
      const State start{f[p[0]], f[p[1]], f[p[2]]};
      if (seen.contains(start)) continue;
      VertexWalk walk;
      State s = start;
      do {
        seen.insert(s);
        const auto& [u, v, w] = s;
        seen.insert({w, v, u});
        walk.push_back(u);
        s = step(faces, s);
      } while (s != start);
      out.push_back(walk);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

bool same_closed_walk(const VertexWalk& a, const VertexWalk& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  VertexWalk r(b.rbegin(), b.rend());
  for (const VertexWalk* c : {&b, static_cast<const VertexWalk*>(&r)}) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool equal = true;
      for (std::size_t i = 0; i < n && equal; ++i) equal = a[i] == (*c)[(i + shift) % n];
      if (equal) return true;
    }
  }
  return false;
}

}  // namespace oracle
