#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shades/matrix.hpp"

namespace shades {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Serialize as lowest-terms "p/q" (bare "p" when q = 1).
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& s);

/// Homogeneous linear form over parameters 1..d with rational coefficients.
/// Zero coefficients are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  static LinearForm parameter(int index) { return term(index, 1); }
  static LinearForm term(int index, Rational coeff);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int index) const;

  void add_term(int index, const Rational& c);
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm scaled(const Rational& c) const;

  Rational evaluate(std::span<const Rational> assignment) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  /// e.g. "v1", "2 v1", "-v3 + 2 v1", "3/2 c2"; zero renders as "0".
  std::string to_string(const std::string& symbol) const;

 private:
  std::map<int, Rational> coeffs_;
};

/// Generic nullspace vector: n entries, forms over parameters v1..vd.
struct ParametricVector {
  int param_count = 0;
  std::vector<LinearForm> entries;
};

/// Generic symmetric matrix with AC = 0, stored as its upper triangle in
/// raster order; forms over parameters c1..cm.
struct ParametricSymmetricMatrix {
  int n = 0;
  int param_count = 0;
  std::vector<LinearForm> upper;  // n(n+1)/2 forms

  const LinearForm& at(int i, int j) const;
};

/// Index of upper-triangle cell (i, j), i <= j, in raster order.
int upper_index(int n, int i, int j);

struct NullspaceResult {
  ParametricVector generic;
  std::vector<std::vector<Rational>> basis;  // one vector per parameter
};

/// Reduced row echelon form in place; returns the pivot column of each row
/// (deterministic: first nonzero column scan, no magnitude heuristics).
std::vector<int> rref(std::vector<std::vector<Rational>>& m);

/// Exact nullspace of A; free variables are the non-pivot columns in
/// increasing order, named v1, v2, ...
NullspaceResult nullspace_generic(const SkewIntMatrix& a);

/// Solves AC = 0, C = C^T over the n(n+1)/2 upper-triangle unknowns; free
/// unknowns become parameters c1, c2, ... in raster order.
ParametricSymmetricMatrix symmetric_kernel_generic(const SkewIntMatrix& a);

/// Exact substitution. Throws std::invalid_argument when the assignment does
/// not cover every parameter.
std::vector<Rational> evaluate_parametric(const ParametricVector& x,
                                          std::span<const Rational> assignment);
std::vector<std::vector<Rational>> evaluate_parametric(const ParametricSymmetricMatrix& c,
                                                       std::span<const Rational> assignment);

}  // namespace shades
