#pragma once

#include <optional>
#include <vector>

#include "shades/classify.hpp"
#include "shades/matrix.hpp"

namespace shades {
namespace oracle {

/// Brute-force reference for the generator: filters all 5^(n(n-1)/2) upper
/// triangles and keeps orbit-minimal representatives by full n! scans.
/// Deliberately shares no code with the recursive generator beyond the row
/// admissibility predicate. Throws std::domain_error for n > 4.
std::vector<SkewIntMatrix> brute_force_basic_shades(int n);

/// Exhaustive search over symmetric natural matrices with entries <= bound
/// for A * C = 0 with nonzero columns. Absence only means "not found within
/// bound". Throws std::domain_error for n > 4.
std::optional<IntMatrix> brute_force_ps3(const SkewIntMatrix& a, int bound);

}  // namespace oracle
}  // namespace shades
