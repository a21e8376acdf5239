#include "shades/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace shades {

bool is_admissible_row(std::span<const int> row) {
  int pos = 0, neg = 0, ones = 0, neg_ones = 0, twos = 0, neg_twos = 0;
  for (int v : row) {
    if (v < -kMaxEntry || v > kMaxEntry) throw std::domain_error("row entry out of [-2, 2]");
    if (v > 0) ++pos;
    if (v < 0) ++neg;
    if (v == 1) ++ones;
    if (v == -1) ++neg_ones;
    if (v == 2) ++twos;
    if (v == -2) ++neg_twos;
  }
  // PS2: nonzero rows must mix signs
  if ((pos + neg) > 0 && (pos == 0 || neg == 0)) return false;
  // T2: a 2 forbids any other entry >= 1; dually for -2
  if (twos > 0 && pos > 1) return false;
  if (neg_twos > 0 && neg > 1) return false;
  // T3
  if (ones > 4 || neg_ones > 4) return false;
  return true;
}

std::vector<int> compose_row(const RowPrefix& prefix, std::span<const int> free_entries) {
  int n = prefix.n;
  int r = static_cast<int>(prefix.rows.size());
  if (r >= n) throw std::invalid_argument("prefix already complete");
  if (static_cast<int>(free_entries.size()) != n - r - 1)
    throw std::invalid_argument("wrong number of free entries");
  std::vector<int> row(n);
  for (int j = 0; j < r; ++j) row[j] = -prefix.rows[j][r];
  row[r] = 0;
  for (int k = 0; k < n - r - 1; ++k) row[r + 1 + k] = free_entries[k];
  return row;
}

namespace {

// Fraction-free Bareiss elimination; entries are in [-2, 2] and n <= 8, so
// every intermediate value is a minor of the input and fits in int64.
bool det_is_zero(const SkewIntMatrix& a) {
  int n = a.size();
  int64_t b[kMaxSize][kMaxSize];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = a.at(i, j);
  int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return true;
      std::swap_ranges(b[k], b[k] + n, b[swap_row]);
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
    prev = b[k][k];
  }
  return b[n - 1][n - 1] == 0;
}

}  // namespace

bool is_singular(const SkewIntMatrix& a) {
  if (a.size() % 2 == 1) return true;  // odd skew-symmetric matrices have det 0
  return det_is_zero(a);
}

bool is_basic(const SkewIntMatrix& a) {
  if (!is_singular(a)) return false;
  if (orbit_has_smaller(a, a)) return false;
  return !orbit_has_smaller(opposite(a), a);
}

namespace {

struct SearchContext {
  int n = 0;
  bool prune = false;
  bool stop_at_zero = false;
  bool stopped = false;
  int8_t a[kMaxSize][kMaxSize] = {};
  std::vector<SkewIntMatrix> out;

  bool row_admissible(int r) const {
    int row[kMaxSize];
    for (int j = 0; j < n; ++j) row[j] = a[r][j];
    return is_admissible_row(std::span<const int>(row, static_cast<size_t>(n)));
  }

  SkewIntMatrix build() const {
    MatrixBuilder b(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.set(i, j, a[i][j]);
    return b.matrix();
  }

  // Rows 0..r are complete. If permuting indices {0..r} (or doing so on the
  // negated matrix) makes the completed block strictly smaller in row-major
  // order, no completion can survive the leaf minimality test.
  bool prefix_dominated(int r) const {
    int m = r + 1;
    int perm[kMaxSize];
    std::iota(perm, perm + m, 0);
    do {
      for (int sign = 1; sign >= -1; sign -= 2) {
        if (sign == 1 && std::is_sorted(perm, perm + m)) continue;  // identity
        int cmp = 0;  // -1 smaller, 1 greater, 0 equal so far
        for (int i = 0; i < m && cmp == 0; ++i)
          for (int j = 0; j < n; ++j) {
            int cj = j < m ? perm[j] : j;
            int x = sign * a[perm[i]][cj];
            int y = a[i][j];
            if (x != y) { cmp = x < y ? -1 : 1; break; }
          }
        if (cmp < 0) return true;
      }
    } while (std::next_permutation(perm, perm + m));
    return false;
  }

  void finish_leaf() {
    int r = n - 1;
    for (int j = 0; j < r; ++j) a[r][j] = static_cast<int8_t>(-a[j][r]);
    a[r][r] = 0;
    if (!row_admissible(r)) return;
    SkewIntMatrix m = build();
    if (!is_basic(m)) return;
    out.push_back(m);
    if (stop_at_zero && m == SkewIntMatrix::zero(n)) stopped = true;
  }

  void descend(int r);

  // Fill the free entries of row r left to right in ascending value order,
  // which makes the emission order coincide with the lex order on matrices.
  void fill_free(int r, int j) {
    if (stopped) return;
    if (j == n) {
      if (row_admissible(r)) descend(r + 1);
      return;
    }
    for (int v = -kMaxEntry; v <= kMaxEntry; ++v) {
      a[r][j] = static_cast<int8_t>(v);
      a[j][r] = static_cast<int8_t>(-v);
      fill_free(r, j + 1);
      if (stopped) return;
    }
  }
};

void SearchContext::descend(int r) {
  if (stopped) return;
  if (prune && r >= 2 && r <= n - 2 && prefix_dominated(r - 1)) return;
  if (r == n - 1) {
    finish_leaf();
    return;
  }
  for (int j = 0; j < r; ++j) a[r][j] = static_cast<int8_t>(-a[j][r]);
  a[r][r] = 0;
  fill_free(r, r + 1);
}

// All admissible first rows in ascending order; one search task each.
std::vector<std::vector<int>> first_row_tasks(int n) {
  std::vector<std::vector<int>> tasks;
  std::vector<int> row(n, 0);
  // odometer over positions 1..n-1, leftmost most significant
  std::vector<int> digits(n - 1, -kMaxEntry);
  while (true) {
    for (int k = 0; k < n - 1; ++k) row[k + 1] = digits[k];
    if (is_admissible_row(row)) tasks.push_back(row);
    int k = n - 2;
    while (k >= 0 && digits[k] == kMaxEntry) digits[k--] = -kMaxEntry;
    if (k < 0) break;
    ++digits[k];
  }
  return tasks;
}

}  // namespace

std::vector<SkewIntMatrix> enumerate_basic_shades(const EnumerationOptions& opts) {
  if (opts.n < 1 || opts.n > kMaxSize) throw std::domain_error("n must be in [1, 8]");
  if (opts.workers < 1) throw std::domain_error("workers must be >= 1");

  if (opts.n == 1) {
    SearchContext ctx;
    ctx.n = 1;
    ctx.finish_leaf();
    return std::move(ctx.out);
  }

  auto tasks = first_row_tasks(opts.n);

  auto run_task = [&](const std::vector<int>& row0, bool allow_stop) {
    SearchContext ctx;
    ctx.n = opts.n;
    ctx.prune = opts.pruning;
    ctx.stop_at_zero = allow_stop && opts.stop_at_zero;
    for (int j = 0; j < opts.n; ++j) {
      ctx.a[0][j] = static_cast<int8_t>(row0[j]);
      ctx.a[j][0] = static_cast<int8_t>(-row0[j]);
    }
    if (!(ctx.prune && opts.n >= 3 && ctx.prefix_dominated(0)))
      ctx.descend(1);
    return std::pair{std::move(ctx.out), ctx.stopped};
  };

  std::vector<SkewIntMatrix> merged;
  if (opts.workers == 1) {
    for (const auto& t : tasks) {
      auto [part, stopped] = run_task(t, true);
      merged.insert(merged.end(), part.begin(), part.end());
      if (stopped) return merged;
    }
    return merged;
  }

  std::vector<std::vector<SkewIntMatrix>> results(tasks.size());
  std::atomic<size_t> next{0};
  unsigned nthreads = std::min<size_t>(opts.workers, tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
        results[i] = run_task(tasks[i], false).first;
    });
  for (auto& th : pool) th.join();
  for (auto& part : results) merged.insert(merged.end(), part.begin(), part.end());

  if (opts.stop_at_zero) {
    auto zero = SkewIntMatrix::zero(opts.n);
    for (size_t i = 0; i < merged.size(); ++i)
      if (merged[i] == zero) {
        merged.erase(merged.begin() + static_cast<long>(i) + 1, merged.end());
        break;
      }
  }
  return merged;
}

}  // namespace shades
