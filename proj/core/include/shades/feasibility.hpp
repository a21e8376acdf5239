#pragma once

#include <optional>
#include <vector>

#include "shades/rational_linalg.hpp"

namespace shades {

/// a . x >= b
struct LinearConstraint {
  std::vector<Rational> a;
  Rational b;
};

/// Exact feasibility of a conjunction of >= constraints by Fourier-Motzkin
/// elimination. Returns a satisfying rational point, or nullopt when the
/// system is infeasible.
std::optional<std::vector<Rational>> feasible_point(int nvars,
                                                    std::vector<LinearConstraint> cons);

}  // namespace shades
