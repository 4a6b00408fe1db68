#include "zigzag/generators.hpp"

#include <algorithm>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

std::string base_name(std::string_view prefix, int i) { return std::string(prefix) + std::to_string(i); }

// Apex, base(2j+1), base(2j+2) for block j; apexes alternate a, b.
std::vector<std::string> bipyramid_walk(int n, char first_apex, int first_base, std::size_t length,
                                        std::string_view prefix) {
  std::vector<std::string> walk;
  walk.reserve(length);
  for (std::size_t j = 0; walk.size() < length; ++j) {
    const bool same = j % 2 == 0;
    const char apex = same ? first_apex : (first_apex == 'a' ? 'b' : 'a');
    walk.push_back(std::string(prefix) + apex);
    const int b1 = static_cast<int>((first_base - 1 + 2 * j) % static_cast<std::size_t>(n)) + 1;
    const int b2 = b1 % n + 1;
    walk.push_back(base_name(prefix, b1));
    walk.push_back(base_name(prefix, b2));
  }
  return walk;
}

}  // namespace

Triangulation bipyramid(int n, std::string_view prefix) {
  if (n < 3) throw DomainError("bipyramid needs n >= 3, got " + std::to_string(n));
  std::vector<FaceNames> faces;
  const std::string a = std::string(prefix) + "a";
  const std::string b = std::string(prefix) + "b";
  for (int i = 1; i <= n; ++i) faces.push_back({a, base_name(prefix, i), base_name(prefix, i % n + 1)});
  for (int i = 1; i <= n; ++i) faces.push_back({b, base_name(prefix, i), base_name(prefix, i % n + 1)});
  return Triangulation::from_faces(faces);
}

std::vector<Zigzag> bipyramid_listed_zigzags(const Triangulation& bp, int n, std::string_view prefix) {
  if (n < 3) throw DomainError("bipyramid needs n >= 3, got " + std::to_string(n));
  struct Start {
    char apex;
    int base;
  };
  std::vector<Start> starts;
  std::size_t length = 0;
  if (n % 2 == 1) {
    starts = {{'a', 1}};
    length = 6 * static_cast<std::size_t>(n);
  } else if (n % 4 == 2) {
    starts = {{'a', 1}, {'a', 2}};
    length = 3 * static_cast<std::size_t>(n);
  } else {
    starts = {{'a', 1}, {'b', 1}, {'a', 2}, {'b', 2}};
    length = 3 * static_cast<std::size_t>(n) / 2;
  }

  std::vector<Zigzag> out;
  for (const Start& s : starts) {
    const auto walk = bipyramid_walk(n, s.apex, s.base, length, prefix);
    Zigzag z;
    for (std::size_t i = 0; i < length; ++i) {
      z.passes.push_back({bp.vertex(walk[i]), bp.vertex(walk[(i + 1) % length])});
    }
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<Zigzag> bipyramid_oracle_zigzags(int n) {
  const Triangulation bp = bipyramid(n);
  std::vector<Zigzag> out;
  for (const Zigzag& z : bipyramid_listed_zigzags(bp, n)) out.push_back(canonical_form(z));
  std::sort(out.begin(), out.end());
  return out;
}

ZOrientation bipyramid_canonical_zorientation(const Triangulation& bp, int n, std::string_view prefix) {
  return z_orientation_from(bp, bipyramid_listed_zigzags(bp, n, prefix));
}

ZOrientation bipyramid_canonical_zorientation(int n) {
  return bipyramid_canonical_zorientation(bipyramid(n), n);
}

Triangulation platonic(std::string_view name) {
  if (name == "tetrahedron") {
    return Triangulation::from_faces({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  }
  if (name == "octahedron") return bipyramid(4);
  if (name == "icosahedron") {
    // Vertex 1 on top, 2..6 upper ring, 7..11 lower ring, 12 at the bottom.
    std::vector<FaceNames> faces;
    auto up = [](int i) { return std::to_string(2 + (i % 5)); };
    auto low = [](int i) { return std::to_string(7 + (i % 5)); };
    for (int i = 0; i < 5; ++i) {
      faces.push_back({"1", up(i), up(i + 1)});
      faces.push_back({up(i), up(i + 1), low(i)});
      faces.push_back({up(i + 1), low(i), low(i + 1)});
      faces.push_back({"12", low(i), low(i + 1)});
    }
    return Triangulation::from_faces(faces);
  }
  throw DomainError("unknown platonic triangulation '" + std::string(name) + "'");
}

}  // namespace zigzag
