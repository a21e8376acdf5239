#pragma once

#include <span>
#include <vector>

#include "shades/matrix.hpp"

namespace shades {

/// First r complete rows of a candidate matrix of size n.
struct RowPrefix {
  int n = 0;
  std::vector<std::vector<int>> rows;
};

struct EnumerationOptions {
  int n = 0;
  bool stop_at_zero = false;
  unsigned workers = 1;
  bool pruning = false;
};

/// Row admissibility: the row is all-zero, or it contains both a positive and
/// a negative entry; a 2 may not co-occur with another entry >= 1 (nor a -2
/// with another entry <= -1); at most four 1s and at most four -1s.
/// Throws std::domain_error if an entry is outside [-2, 2].
bool is_admissible_row(std::span<const int> row);

/// Next row forced by skew-symmetry: the first r entries mirror the stored
/// rows, then a diagonal zero, then the given free entries.
/// Throws std::invalid_argument if `free_entries` has the wrong length.
std::vector<int> compose_row(const RowPrefix& prefix, std::span<const int> free_entries);

/// Exact singularity test: odd sizes are always singular; even sizes use
/// fraction-free Bareiss elimination over int64.
bool is_singular(const SkewIntMatrix& a);

/// Singular, orbit-minimal, and not dominated by the canonical form of its
/// negation: the leaf acceptance test of the generator.
bool is_basic(const SkewIntMatrix& a);

/// All basic shades of size n in strictly increasing lex order. Deterministic
/// for any worker count. Throws std::domain_error for n outside [1, 8].
std::vector<SkewIntMatrix> enumerate_basic_shades(const EnumerationOptions& opts);

}  // namespace shades
