#include "shades/quiver.hpp"

#include <sstream>

namespace shades {

Quiver quiver_of(const SkewIntMatrix& a) {
  int n = a.size();
  Quiver q{n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q.arr[i][j] = std::max(a.at(i, j), 0);
  return q;
}

std::vector<std::vector<int>> signed_adjacency(const Quiver& q) {
  std::vector<std::vector<int>> ad(q.n, std::vector<int>(q.n, 0));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) ad[i][j] = q.arr[i][j] - q.arr[j][i];
  return ad;
}

Quiver opposite_quiver(const Quiver& q) {
  Quiver r{q.n, std::vector<std::vector<int>>(q.n, std::vector<int>(q.n, 0))};
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) r.arr[i][j] = q.arr[j][i];
  return r;
}

std::string to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int i = 0; i < q.n; ++i) os << "  " << (i + 1) << ";\n";
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      for (int k = 0; k < q.arr[i][j]; ++k)
        os << "  " << (i + 1) << " -> " << (j + 1) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace shades
