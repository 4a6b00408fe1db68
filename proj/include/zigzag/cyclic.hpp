#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace zigzag {

/// Start index of the lexicographically least rotation of `s` (two-pointer
/// scan, linear time). For periodic input the least such index is returned.
template <typename T, typename Less = std::less<T>>
std::size_t least_rotation(std::span<const T> s, Less less = {}) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T& a = s[(i + k) % n];
    const T& b = s[(j + k) % n];
    if (!less(a, b) && !less(b, a)) {
      ++k;
      continue;
    }
    if (less(b, a)) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

template <typename T>
std::vector<T> rotated(std::span<const T> s, std::size_t start) {
  std::vector<T> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s[(start + k) % s.size()]);
  return out;
}

/// True if `b` is a rotation of `a`.
template <typename T>
bool is_rotation_of(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t start = 0; start < a.size(); ++start) {
    bool match = true;
    for (std::size_t k = 0; k < a.size() && match; ++k) match = a[(start + k) % a.size()] == b[k];
    if (match) return true;
  }
  return false;
}

}  // namespace zigzag
