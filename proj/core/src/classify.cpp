#include "shades/classify.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "shades/feasibility.hpp"

namespace shades {

const char* filter_kind_name(FilterKind k) {
  switch (k) {
    case FilterKind::Pass: return "pass";
    case FilterKind::ZeroEntry: return "zero_entry";
    case FilterKind::OppositePair: return "opposite_pair";
    case FilterKind::VanishingNaturalCombination: return "vanishing_natural_combination";
  }
  return "?";
}

SkewIntMatrix markov_shadow() {
  return SkewIntMatrix::from_rows({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
}

namespace {

std::vector<Rational> form_coeff_vector(const LinearForm& f, int d) {
  std::vector<Rational> v(d, Rational(0));
  for (auto& [k, c] : f.coeffs()) v[k - 1] = c;
  return v;
}

// All entries simultaneously >= 1 under some assignment?
bool strictly_positivable(const ParametricVector& x) {
  std::vector<LinearConstraint> cons;
  for (auto& f : x.entries)
    cons.push_back({form_coeff_vector(f, x.param_count), Rational(1)});
  return feasible_point(x.param_count, std::move(cons)).has_value();
}

// Nonzero natural coefficients a with sum_i a_i * x_i = 0 identically.
// Exists whenever strictly_positivable fails; found by solving for a directly.
std::vector<BigInt> vanishing_combination(const ParametricVector& x) {
  int n = static_cast<int>(x.entries.size());
  std::vector<LinearConstraint> cons;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> unit(n, Rational(0));
    unit[i] = 1;
    cons.push_back({unit, Rational(0)});  // a_i >= 0
  }
  cons.push_back({std::vector<Rational>(n, Rational(1)), Rational(1)});  // sum >= 1
  for (int p = 1; p <= x.param_count; ++p) {
    std::vector<Rational> eq(n);
    for (int i = 0; i < n; ++i) eq[i] = x.entries[i].coeff(p);
    auto neg = eq;
    for (auto& v : neg) v = -v;
    cons.push_back({eq, Rational(0)});
    cons.push_back({neg, Rational(0)});
  }
  auto pt = feasible_point(n, std::move(cons));
  if (!pt) return {};  // cannot happen when the primal is infeasible
  BigInt lcm = 1;
  for (auto& v : *pt) lcm = boost::integer::lcm(lcm, BigInt(denominator(v)));
  std::vector<BigInt> a;
  a.reserve(n);
  for (auto& v : *pt) a.push_back(BigInt(numerator(v) * (lcm / denominator(v))));
  BigInt g = 0;
  for (auto& v : a) g = boost::integer::gcd(g, v);
  if (g > 1)
    for (auto& v : a) v /= g;
  return a;
}

}  // namespace

FilterVerdict ps3_filter_verdict(const ParametricVector& x) {
  int n = static_cast<int>(x.entries.size());
  for (int i = 0; i < n; ++i)
    if (x.entries[i].is_zero())
      return {FilterKind::ZeroEntry, {i}, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.entries[i] == -x.entries[j])
        return {FilterKind::OppositePair, {i, j}, {}};
  if (!strictly_positivable(x))
    return {FilterKind::VanishingNaturalCombination, {}, vanishing_combination(x)};
  return {FilterKind::Pass, {}, {}};
}

std::optional<IntMatrix> ps3_feasible(const SkewIntMatrix& a,
                                      const ParametricSymmetricMatrix& c) {
  int n = a.size();
  int d = c.param_count;
  if (d == 0) return std::nullopt;  // only the zero solution

  std::vector<LinearConstraint> cons;
  for (auto& f : c.upper)
    if (!f.is_zero())
      cons.push_back({form_coeff_vector(f, d), Rational(0)});  // entry >= 0
  for (int j = 0; j < n; ++j) {
    LinearForm col_sum;
    for (int i = 0; i < n; ++i) col_sum = col_sum + c.at(i, j);
    cons.push_back({form_coeff_vector(col_sum, d), Rational(1)});  // column nonzero
  }

  auto pt = feasible_point(d, std::move(cons));
  if (!pt) return std::nullopt;

  auto rat = evaluate_parametric(c, *pt);
  BigInt lcm = 1;
  for (auto& row : rat)
    for (auto& v : row) lcm = boost::integer::lcm(lcm, BigInt(denominator(v)));
  IntMatrix w(n, std::vector<BigInt>(n));
  BigInt g = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      w[i][j] = BigInt(numerator(rat[i][j]) * (lcm / denominator(rat[i][j])));
      g = boost::integer::gcd(g, w[i][j]);
    }
  if (g > 1)
    for (auto& row : w)
      for (auto& v : row) v /= g;
  return w;
}

bool is_essential(const SkewIntMatrix& a) {
  if (a == markov_shadow()) return true;
  int n = a.size();
  for (int i = 0; i < n; ++i) {
    bool two = false, minus_two = false;
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == 2) two = true;
      if (a.at(i, j) == -2) minus_two = true;
    }
    if (two && minus_two) return false;  // PS4
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (a.at(i, j) == 2 && a.at(j, k) == 1 && a.at(k, i) <= 0) return false;   // PS5
        if (a.at(i, j) == -2 && a.at(j, k) == -1 && a.at(k, i) >= 0) return false;
      }
  return true;
}

ClassificationRecord classify(const SkewIntMatrix& a) {
  ClassificationRecord rec;
  rec.matrix = a;
  auto ns = nullspace_generic(a);
  rec.x = ns.generic;
  rec.nullspace_basis = std::move(ns.basis);
  rec.filter = ps3_filter_verdict(rec.x);
  rec.c_generic = symmetric_kernel_generic(a);
  rec.witness = ps3_feasible(a, rec.c_generic);
  rec.is_shadow = rec.witness.has_value();
  rec.is_essential = rec.is_shadow && is_essential(a);
  rec.self_opposite = canonical_min(opposite(a)) == a;
  return rec;
}

bool witness_valid(const SkewIntMatrix& a, const IntMatrix& w) {
  int n = a.size();
  if (static_cast<int>(w.size()) != n) return false;
  for (auto& row : w)
    if (static_cast<int>(row.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w[i][j] < 0 || w[i][j] != w[j][i]) return false;
  for (int j = 0; j < n; ++j) {
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      if (w[i][j] != 0) nonzero = true;
    if (!nonzero) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * w[k][j];
      if (acc != 0) return false;
    }
  return true;
}

}  // namespace shades
