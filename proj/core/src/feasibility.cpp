#include "shades/feasibility.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace shades {

namespace {

using Row = std::pair<std::vector<Rational>, Rational>;  // (a, b) for a.x >= b

// Scale so the first nonzero coefficient has absolute value 1; merges
// positive multiples of the same half-space.
Row normalized(std::vector<Rational> a, Rational b) {
  for (auto& c : a)
    if (c != 0) {
      Rational s = c > 0 ? c : Rational(-c);
      for (auto& v : a) v /= s;
      b /= s;
      break;
    }
  return {std::move(a), std::move(b)};
}

}  // namespace

std::optional<std::vector<Rational>> feasible_point(int nvars,
                                                    std::vector<LinearConstraint> cons) {
  std::set<Row> cur;
  for (auto& c : cons) {
    c.a.resize(nvars, Rational(0));
    cur.insert(normalized(std::move(c.a), std::move(c.b)));
  }

  struct Level {
    int var;
    std::vector<Row> with_var;
  };
  std::vector<Level> levels;
  std::vector<bool> eliminated(nvars, false);

  for (int step = 0; step < nvars; ++step) {
    // constant rows decide infeasibility immediately
    for (auto& [a, b] : cur)
      if (std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; }) && b > 0)
        return std::nullopt;

    // pick the remaining variable with the fewest cross products
    int best = -1;
    long best_cost = 0;
    for (int v = 0; v < nvars; ++v) {
      if (eliminated[v]) continue;
      long pos = 0, neg = 0;
      for (auto& [a, b] : cur) {
        if (a[v] > 0) ++pos;
        if (a[v] < 0) ++neg;
      }
      long cost = pos * neg;
      if (best < 0 || cost < best_cost) { best = v; best_cost = cost; }
    }
    int v = best;
    eliminated[v] = true;

    std::vector<Row> pos, neg;
    std::set<Row> next;
    Level level{v, {}};
    for (auto& row : cur) {
      if (row.first[v] > 0) { pos.push_back(row); level.with_var.push_back(row); }
      else if (row.first[v] < 0) { neg.push_back(row); level.with_var.push_back(row); }
      else next.insert(row);
    }
    for (auto& p : pos)
      for (auto& q : neg) {
        // scale p by -q_v > 0 and q by p_v > 0; the sum drops v
        Rational sp = -q.first[v], sq = p.first[v];
        std::vector<Rational> a(nvars);
        for (int u = 0; u < nvars; ++u) a[u] = sp * p.first[u] + sq * q.first[u];
        Rational b = sp * p.second + sq * q.second;
        next.insert(normalized(std::move(a), std::move(b)));
      }
    levels.push_back(std::move(level));
    cur = std::move(next);
  }

  for (auto& [a, b] : cur)
    if (b > 0) return std::nullopt;

  // back-substitute in reverse elimination order
  std::vector<Rational> x(nvars, Rational(0));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    bool has_lo = false, has_hi = false;
    Rational lo = 0, hi = 0;
    for (auto& [a, b] : it->with_var) {
      Rational rest = b;
      for (int u = 0; u < nvars; ++u)
        if (u != it->var) rest -= a[u] * x[u];
      Rational bound = rest / a[it->var];
      if (a[it->var] > 0) {
        if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
      } else {
        if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      }
    }
    if (has_lo && has_hi) x[it->var] = (lo + hi) / 2;
    else if (has_lo) x[it->var] = lo;
    else if (has_hi) x[it->var] = hi;
  }
  return x;
}

}  // namespace shades
