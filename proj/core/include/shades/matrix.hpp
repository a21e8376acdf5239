#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shades {

inline constexpr int kMaxSize = 8;
inline constexpr int kMaxEntry = 2;

enum class LexOrdering { Less, Equal, Greater };

/// Skew-symmetric integer matrix with entries in [-2, 2], 1 <= n <= 8.
/// Immutable after construction; indices are 0-based in code.
class SkewIntMatrix {
 public:
  static SkewIntMatrix zero(int n);

  /// Builds from full row data; throws std::invalid_argument if the data is
  /// not skew-symmetric or an entry is out of range.
  static SkewIntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  /// Builds from the strict upper triangle in row-major order
  /// (0,1),(0,2),...,(0,n-1),(1,2),...
  static SkewIntMatrix from_upper(int n, std::span<const int> upper);

  int size() const { return n_; }
  int at(int i, int j) const { return e_[i * n_ + j]; }

  std::vector<std::vector<int>> rows() const;
  std::string to_string() const;

  friend bool operator==(const SkewIntMatrix& a, const SkewIntMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (int k = 0; k < a.n_ * a.n_; ++k)
      if (a.e_[k] != b.e_[k]) return false;
    return true;
  }

 private:
  friend class MatrixBuilder;
  SkewIntMatrix() = default;
  int n_ = 0;
  std::array<int8_t, kMaxSize * kMaxSize> e_{};
};

/// Escape hatch for internal code that fills entries directly. The caller is
/// responsible for keeping the skew invariant.
class MatrixBuilder {
 public:
  explicit MatrixBuilder(int n);
  void set(int i, int j, int v);
  int at(int i, int j) const { return m_.at(i, j); }
  const SkewIntMatrix& matrix() const { return m_; }

 private:
  SkewIntMatrix m_;
};

/// Bijection on {0,...,n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> map);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }

  /// (a.then(b))(i) = a(b(i)); matches (A_a)_b = A_{a∘b} for the matrix action.
  Permutation then(const Permutation& inner) const;

 private:
  std::vector<int> map_;
};

/// Row-major lexicographic comparison. Throws on size mismatch.
LexOrdering compare_lex(const SkewIntMatrix& a, const SkewIntMatrix& b);

/// A ≺ B strictly.
bool lex_less(const SkewIntMatrix& a, const SkewIntMatrix& b);
/// A ⪯ B.
bool lex_leq(const SkewIntMatrix& a, const SkewIntMatrix& b);

/// result[i][j] = A[σ(i)][σ(j)], i.e. PᵀAP.
SkewIntMatrix apply_permutation(const SkewIntMatrix& a, const Permutation& sigma);

/// -A (equivalently the transpose).
SkewIntMatrix opposite(const SkewIntMatrix& a);

/// Minimum of the orbit {PᵀAP} under row-major lex order. Exhaustive scan
/// over all n! permutations; the reference implementation against which the
/// pruned search below is tested.
SkewIntMatrix canonical_min(const SkewIntMatrix& a);

/// Maximum of the orbit. Satisfies canonical_min(-A) = -canonical_max(A).
SkewIntMatrix canonical_max(const SkewIntMatrix& a);

/// True iff some permutation σ gives B_σ ≺ M. Pruned backtracking search;
/// equivalent to lex_less(canonical_min(B), M) but much cheaper on average.
bool orbit_has_smaller(const SkewIntMatrix& b, const SkewIntMatrix& m);

}  // namespace shades
