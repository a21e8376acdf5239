#include "shades/rational_linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace shades {

std::string to_fraction_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

LinearForm LinearForm::term(int index, Rational coeff) {
  LinearForm f;
  if (coeff != 0) f.coeffs_[index] = std::move(coeff);
  return f;
}

Rational LinearForm::coeff(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinearForm::add_term(int index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm f = *this;
  for (auto& [k, c] : o.coeffs_) f.add_term(k, c);
  return f;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator-() const {
  LinearForm f;
  for (auto& [k, c] : coeffs_) f.coeffs_[k] = -c;
  return f;
}

LinearForm LinearForm::scaled(const Rational& c) const {
  LinearForm f;
  if (c == 0) return f;
  for (auto& [k, v] : coeffs_) f.coeffs_[k] = v * c;
  return f;
}

Rational LinearForm::evaluate(std::span<const Rational> assignment) const {
  Rational acc = 0;
  for (auto& [k, c] : coeffs_) {
    if (k < 1 || k > static_cast<int>(assignment.size()))
      throw std::invalid_argument("incomplete parameter assignment");
    acc += c * assignment[k - 1];
  }
  return acc;
}

std::string LinearForm::to_string(const std::string& symbol) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : coeffs_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << '-'; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << to_fraction_string(a) << ' ';
    os << symbol << k;
    first = false;
  }
  return os.str();
}

int upper_index(int n, int i, int j) {
  return i * n - i * (i - 1) / 2 + (j - i);
}

const LinearForm& ParametricSymmetricMatrix::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  return upper[upper_index(n, i, j)];
}

std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rational inv = Rational(1) / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

NullspaceResult nullspace_generic(const SkewIntMatrix& a) {
  int n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  auto pivots = rref(m);

  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;

  NullspaceResult res;
  res.generic.entries.assign(n, LinearForm{});
  int param = 0;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    ++param;
    std::vector<Rational> basis(n, Rational(0));
    basis[col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) basis[pivots[r]] = -m[r][col];
    for (int i = 0; i < n; ++i) res.generic.entries[i].add_term(param, basis[i]);
    res.basis.push_back(std::move(basis));
  }
  res.generic.param_count = param;
  return res;
}

ParametricSymmetricMatrix symmetric_kernel_generic(const SkewIntMatrix& a) {
  int n = a.size();
  int unknowns = n * (n + 1) / 2;
  // equations: sum_k A[i][k] * C[k][j] = 0 for all (i, j)
  std::vector<std::vector<Rational>> m;
  m.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> eq(unknowns, Rational(0));
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        int c = a.at(i, k);
        if (c == 0) continue;
        int idx = k <= j ? upper_index(n, k, j) : upper_index(n, j, k);
        eq[idx] += c;
        nonzero = true;
      }
      if (nonzero) m.push_back(std::move(eq));
    }

  std::vector<int> pivots = m.empty() ? std::vector<int>{} : rref(m);
  std::vector<bool> is_pivot(unknowns, false);
  for (int c : pivots) is_pivot[c] = true;

  // solution per unknown, as a form in the free unknowns (raster order)
  std::vector<int> param_of(unknowns, 0);
  int param = 0;
  for (int u = 0; u < unknowns; ++u)
    if (!is_pivot[u]) param_of[u] = ++param;

  ParametricSymmetricMatrix res;
  res.n = n;
  res.param_count = param;
  res.upper.assign(unknowns, LinearForm{});
  for (int u = 0; u < unknowns; ++u)
    if (!is_pivot[u]) res.upper[u] = LinearForm::parameter(param_of[u]);
  for (size_t r = 0; r < pivots.size(); ++r) {
    LinearForm f;
    for (int u = 0; u < unknowns; ++u)
      if (!is_pivot[u] && m[r][u] != 0) f.add_term(param_of[u], -m[r][u]);
    res.upper[pivots[r]] = std::move(f);
  }
  return res;
}

std::vector<Rational> evaluate_parametric(const ParametricVector& x,
                                          std::span<const Rational> assignment) {
  if (static_cast<int>(assignment.size()) < x.param_count)
    throw std::invalid_argument("incomplete parameter assignment");
  std::vector<Rational> out;
  out.reserve(x.entries.size());
  for (auto& f : x.entries) out.push_back(f.evaluate(assignment));
  return out;
}

std::vector<std::vector<Rational>> evaluate_parametric(const ParametricSymmetricMatrix& c,
                                                       std::span<const Rational> assignment) {
  if (static_cast<int>(assignment.size()) < c.param_count)
    throw std::invalid_argument("incomplete parameter assignment");
  std::vector<std::vector<Rational>> out(c.n, std::vector<Rational>(c.n));
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) out[i][j] = c.at(i, j).evaluate(assignment);
  return out;
}

}  // namespace shades
