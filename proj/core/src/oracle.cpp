#include "shades/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "shades/enumerate.hpp"

namespace shades {
namespace oracle {

namespace {

// Independent reimplementations: row-major comparison, permutation action and
// an exact determinant, so the generator and its oracle cannot drift together.

int compare_rows_major(const std::vector<std::vector<int>>& a,
                       const std::vector<std::vector<int>>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      if (a[i][j] < b[i][j]) return -1;
      if (a[i][j] > b[i][j]) return 1;
    }
  return 0;
}

std::vector<std::vector<int>> permuted(const std::vector<std::vector<int>>& a,
                                       const std::vector<int>& sigma) {
  size_t n = a.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = a[sigma[i]][sigma[j]];
  return out;
}

std::vector<std::vector<int>> negated(const std::vector<std::vector<int>>& a) {
  auto out = a;
  for (auto& row : out)
    for (auto& v : row) v = -v;
  return out;
}

// cofactor expansion along the first row; fine for n <= 4
long long det_cofactor(const std::vector<std::vector<int>>& a) {
  size_t n = a.size();
  if (n == 1) return a[0][0];
  long long det = 0;
  for (size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<int>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<int> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    long long term = a[0][c] * det_cofactor(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

bool orbit_minimal(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  auto neg = negated(m);
  do {
    if (compare_rows_major(permuted(m, sigma), m) < 0) return false;
    if (compare_rows_major(permuted(neg, sigma), m) < 0) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

}  // namespace

std::vector<SkewIntMatrix> brute_force_basic_shades(int n) {
  if (n < 1 || n > 4) throw std::domain_error("brute force is limited to n <= 4");
  int cells = n * (n - 1) / 2;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= 5;

  std::vector<std::vector<std::vector<int>>> kept;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int v = static_cast<int>(c % 5) - 2;
        c /= 5;
        m[i][j] = v;
        m[j][i] = -v;
      }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = is_admissible_row(m[i]);
    if (!ok) continue;
    if (det_cofactor(m) != 0) continue;
    if (!orbit_minimal(m)) continue;
    kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return compare_rows_major(a, b) < 0; });

  std::vector<SkewIntMatrix> out;
  out.reserve(kept.size());
  for (auto& m : kept) out.push_back(SkewIntMatrix::from_rows(m));
  return out;
}

std::optional<IntMatrix> brute_force_ps3(const SkewIntMatrix& a, int bound) {
  int n = a.size();
  if (n > 4) throw std::domain_error("brute force is limited to n <= 4");
  int cells = n * (n + 1) / 2;
  long base = bound + 1;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= base;

  for (long code = 0; code < total; ++code) {
    long c = code;
    long long w[4][4] = {};
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        long long v = c % base;
        c /= base;
        w[i][j] = v;
        w[j][i] = v;
      }
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      bool nonzero = false;
      for (int i = 0; i < n; ++i)
        if (w[i][j] != 0) nonzero = true;
      ok = nonzero;
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        long long acc = 0;
        for (int k = 0; k < n; ++k) acc += a.at(i, k) * w[k][j];
        ok = acc == 0;
      }
    if (ok) {
      IntMatrix out(n, std::vector<BigInt>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = w[i][j];
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace oracle
}  // namespace shades
