#include "shades/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shades {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxSize)
    throw std::invalid_argument("matrix size must be in [1, 8], got " + std::to_string(n));
}

}  // namespace

SkewIntMatrix SkewIntMatrix::zero(int n) {
  check_size(n);
  SkewIntMatrix m;
  m.n_ = n;
  return m;
}

SkewIntMatrix SkewIntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  check_size(n);
  SkewIntMatrix m;
  m.n_ = n;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < -kMaxEntry || v > kMaxEntry)
        throw std::invalid_argument("entry out of [-2, 2]");
      m.e_[i * n + j] = static_cast<int8_t>(v);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != -m.at(j, i))
        throw std::invalid_argument("matrix is not skew-symmetric");
  return m;
}

SkewIntMatrix SkewIntMatrix::from_upper(int n, std::span<const int> upper) {
  check_size(n);
  if (static_cast<int>(upper.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("wrong upper-triangle length");
  SkewIntMatrix m;
  m.n_ = n;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      int v = upper[k];
      if (v < -kMaxEntry || v > kMaxEntry)
        throw std::invalid_argument("entry out of [-2, 2]");
      m.e_[i * n + j] = static_cast<int8_t>(v);
      m.e_[j * n + i] = static_cast<int8_t>(-v);
    }
  }
  return m;
}

std::vector<std::vector<int>> SkewIntMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
  return out;
}

std::string SkewIntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << '[';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

MatrixBuilder::MatrixBuilder(int n) { m_ = SkewIntMatrix::zero(n); }

void MatrixBuilder::set(int i, int j, int v) {
  m_.e_[i * m_.n_ + j] = static_cast<int8_t>(v);
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  int n = static_cast<int>(map_.size());
  check_size(n);
  std::vector<bool> seen(n, false);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.map_[i], p.map_[j]);
  return p;
}

Permutation Permutation::then(const Permutation& inner) const {
  if (size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> m(map_.size());
  for (int i = 0; i < size(); ++i) m[i] = map_[inner.map_[i]];
  return Permutation(std::move(m));
}

LexOrdering compare_lex(const SkewIntMatrix& a, const SkewIntMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch in compare_lex");
  int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int x = a.at(i, j), y = b.at(i, j);
      if (x < y) return LexOrdering::Less;
      if (x > y) return LexOrdering::Greater;
    }
  return LexOrdering::Equal;
}

bool lex_less(const SkewIntMatrix& a, const SkewIntMatrix& b) {
  return compare_lex(a, b) == LexOrdering::Less;
}

bool lex_leq(const SkewIntMatrix& a, const SkewIntMatrix& b) {
  return compare_lex(a, b) != LexOrdering::Greater;
}

SkewIntMatrix apply_permutation(const SkewIntMatrix& a, const Permutation& sigma) {
  if (sigma.size() != a.size()) throw std::invalid_argument("permutation size mismatch");
  int n = a.size();
  MatrixBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set(i, j, a.at(sigma(i), sigma(j)));
  return b.matrix();
}

SkewIntMatrix opposite(const SkewIntMatrix& a) {
  int n = a.size();
  MatrixBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set(i, j, -a.at(i, j));
  return b.matrix();
}

namespace {

SkewIntMatrix orbit_extremum(const SkewIntMatrix& a, bool want_min) {
  int n = a.size();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  SkewIntMatrix best = a;
  MatrixBuilder b(n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.set(i, j, a.at(sigma[i], sigma[j]));
    auto cmp = compare_lex(b.matrix(), best);
    if ((want_min && cmp == LexOrdering::Less) ||
        (!want_min && cmp == LexOrdering::Greater))
      best = b.matrix();
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace

SkewIntMatrix canonical_min(const SkewIntMatrix& a) { return orbit_extremum(a, true); }

SkewIntMatrix canonical_max(const SkewIntMatrix& a) { return orbit_extremum(a, false); }

namespace {

// DFS over σ in index order. While assigning σ(k), the cells (0,1..k) of B_σ
// are the only determined cells that form a row-major prefix, so the branch
// can be cut as soon as one of them exceeds M. Once σ is complete the
// remaining rows are compared directly.
struct SmallerSearch {
  const SkewIntMatrix& b;
  const SkewIntMatrix& m;
  int n;
  std::array<int, kMaxSize> sigma{};
  std::array<bool, kMaxSize> used{};

  bool rest_smaller() const {
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int x = b.at(sigma[i], sigma[j]), y = m.at(i, j);
        if (x < y) return true;
        if (x > y) return false;
      }
    return false;  // equal
  }

  bool dfs(int k) {
    if (k == n) return rest_smaller();
    for (int p = 0; p < n; ++p) {
      if (used[p]) continue;
      bool prune = false;
      if (k > 0) {
        // new row-0 cell (0,k) = B[σ(0)][p] vs M[0][k]; earlier cells equal
        int x = b.at(sigma[0], p), y = m.at(0, k);
        if (x < y) return true;
        if (x > y) prune = true;
      }
      if (!prune) {
        sigma[k] = p;
        used[p] = true;
        if (dfs(k + 1)) return true;
        used[p] = false;
      }
    }
    return false;
  }
};

}  // namespace

bool orbit_has_smaller(const SkewIntMatrix& b, const SkewIntMatrix& m) {
  if (b.size() != m.size()) throw std::invalid_argument("size mismatch");
  SmallerSearch s{b, m, b.size()};
  return s.dfs(0);
}

}  // namespace shades
