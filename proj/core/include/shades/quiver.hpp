#pragma once

#include <string>
#include <vector>

#include "shades/matrix.hpp"

namespace shades {

/// Arrow multiplicity matrix: arr[i][j] = number of arrows i -> j.
/// Minimal quivers carry no loops and no 2-cycles.
struct Quiver {
  int n = 0;
  std::vector<std::vector<int>> arr;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Smallest quiver with signed adjacency A: max(a_ij, 0) arrows i -> j.
Quiver quiver_of(const SkewIntMatrix& a);

/// arr - arr^T. Round-trips with quiver_of for multiplicities <= 2.
std::vector<std::vector<int>> signed_adjacency(const Quiver& q);

/// All arrows reversed (transpose of arr).
Quiver opposite_quiver(const Quiver& q);

/// DOT text, vertices 1..n, one edge line per arrow.
std::string to_dot(const Quiver& q);

}  // namespace shades
