#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zigzag/triangulation.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

/// BP_n: apexes `a`, `b` over the base cycle `1..n`. Throws DomainError for
/// n < 3.
Triangulation bipyramid(int n, std::string_view prefix = "");

/// The zigzags of BP_n written out from the closed-form walks (apex, two
/// consecutive base vertices, other apex, ...), in the directions listed for
/// the odd, 2 mod 4 and 0 mod 4 cases. Not canonicalized.
std::vector<Zigzag> bipyramid_listed_zigzags(const Triangulation& bp, int n, std::string_view prefix = "");

/// The same walks in canonical form, sorted; directly comparable with
/// enumerate_zigzags(bipyramid(n)).
std::vector<Zigzag> bipyramid_oracle_zigzags(int n);

/// Orientation choosing the listed directions: base edges become type II
/// running 1 -> 2 -> ... -> n -> 1, all faces type I, zigzags homogeneous.
ZOrientation bipyramid_canonical_zorientation(int n);
ZOrientation bipyramid_canonical_zorientation(const Triangulation& bp, int n, std::string_view prefix = "");

/// "tetrahedron", "octahedron" or "icosahedron".
Triangulation platonic(std::string_view name);

}  // namespace zigzag
