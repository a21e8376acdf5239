#pragma once

#include <optional>
#include <vector>

#include "shades/matrix.hpp"
#include "shades/rational_linalg.hpp"

namespace shades {

enum class FilterKind { Pass, ZeroEntry, OppositePair, VanishingNaturalCombination };

/// Non-Pass verdicts carry a checkable certificate.
struct FilterVerdict {
  FilterKind kind = FilterKind::Pass;
  std::vector<int> indices;          // ZeroEntry: {i}; OppositePair: {i, j}
  std::vector<BigInt> combination;   // nonzero naturals a with sum a_i * x_i = 0
};

const char* filter_kind_name(FilterKind k);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// The 3x3 shadow [[0,-2,2],[2,0,-2],[-2,2,0]] (doubled 3-cycle quiver).
SkewIntMatrix markov_shadow();

/// Cheap rejection rules on the generic nullspace vector, in order: an entry
/// identically zero; two mutually negative entries; a nonzero natural
/// combination of the entries vanishing identically. The last rule is decided
/// by duality: such a combination exists iff no assignment makes every entry
/// strictly positive.
FilterVerdict ps3_filter_verdict(const ParametricVector& x);

/// Decides by exact feasibility whether some assignment makes every entry of
/// the generic kernel matrix >= 0 with every column sum >= 1; on success
/// returns the integer witness with denominators cleared and entries divided
/// by their gcd.
std::optional<IntMatrix> ps3_feasible(const SkewIntMatrix& a,
                                      const ParametricSymmetricMatrix& c);

/// Markov shadow, or: no row holds both 2 and -2, and a[i][j]=2, a[j][k]=1
/// forces a[k][i] > 0 (dually with signs flipped).
bool is_essential(const SkewIntMatrix& a);

struct ClassificationRecord {
  SkewIntMatrix matrix = SkewIntMatrix::zero(1);
  bool is_shadow = false;
  bool is_essential = false;
  bool self_opposite = false;
  FilterVerdict filter;
  ParametricVector x;
  std::vector<std::vector<Rational>> nullspace_basis;
  ParametricSymmetricMatrix c_generic;
  std::optional<IntMatrix> witness;
};

ClassificationRecord classify(const SkewIntMatrix& a);

/// Witness sanity: symmetric, natural entries, no zero column, A * W = 0.
bool witness_valid(const SkewIntMatrix& a, const IntMatrix& w);

}  // namespace shades
