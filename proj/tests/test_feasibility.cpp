#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shades/feasibility.hpp"

using namespace shades;

namespace {

bool satisfies(const std::vector<Rational>& x, const std::vector<LinearConstraint>& cons) {
  for (auto& c : cons) {
    Rational s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += c.a[i] * x[i];
    if (s < c.b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("one variable interval") {
  std::vector<LinearConstraint> cons{
      {{Rational(1)}, Rational(1)},
      {{Rational(-1)}, Rational(-3)},
  };
  auto p = feasible_point(1, cons);
  REQUIRE(p.has_value());
  CHECK(satisfies(*p, cons));

  cons.push_back({{Rational(-1)}, Rational(0)});  // x <= 0, contradicts x >= 1
  CHECK(!feasible_point(1, cons).has_value());
}

TEST_CASE("two variables") {
  std::vector<LinearConstraint> cons{
      {{Rational(1), Rational(1)}, Rational(1)},
      {{Rational(-1), Rational(0)}, Rational(0)},
      {{Rational(0), Rational(-1)}, Rational(0)},
  };
  // x + y >= 1 with x <= 0 and y <= 0
  CHECK(!feasible_point(2, cons).has_value());

  cons.pop_back();
  auto p = feasible_point(2, cons);
  REQUIRE(p.has_value());
  CHECK(satisfies(*p, cons));
}

TEST_CASE("equalities as opposite inequalities") {
  // x + 2y = 4, x - y = 1 has the unique solution (2, 1)
  std::vector<LinearConstraint> cons{
      {{Rational(1), Rational(2)}, Rational(4)},
      {{Rational(-1), Rational(-2)}, Rational(-4)},
      {{Rational(1), Rational(-1)}, Rational(1)},
      {{Rational(-1), Rational(1)}, Rational(-1)},
  };
  auto p = feasible_point(2, cons);
  REQUIRE(p.has_value());
  CHECK((*p)[0] == Rational(2));
  CHECK((*p)[1] == Rational(1));
}

TEST_CASE("unconstrained variables get some value") {
  auto p = feasible_point(3, {});
  REQUIRE(p.has_value());
  CHECK(p->size() == 3);
}

TEST_CASE("systems built around a known point are feasible") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int nvars = 1 + static_cast<int>(rng() % 4);
    std::vector<Rational> point(nvars);
    for (auto& v : point) v = Rational(coeff(rng), 1 + static_cast<int>(rng() % 3));
    std::vector<LinearConstraint> cons;
    int ncons = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < ncons; ++k) {
      LinearConstraint c;
      c.a.resize(nvars);
      Rational val = 0;
      for (int i = 0; i < nvars; ++i) {
        c.a[i] = coeff(rng);
        val += c.a[i] * point[i];
      }
      c.b = val - static_cast<int>(rng() % 3);  // slack keeps the point feasible
      cons.push_back(std::move(c));
    }
    auto p = feasible_point(nvars, cons);
    REQUIRE(p.has_value());
    CHECK(satisfies(*p, cons));
  }
}

TEST_CASE("returned points always satisfy the system") {
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> coeff(-2, 2);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int nvars = 1 + static_cast<int>(rng() % 3);
    std::vector<LinearConstraint> cons;
    int ncons = 1 + static_cast<int>(rng() % 7);
    for (int k = 0; k < ncons; ++k) {
      LinearConstraint c;
      c.a.resize(nvars);
      for (auto& v : c.a) v = coeff(rng);
      c.b = coeff(rng);
      cons.push_back(std::move(c));
    }
    auto p = feasible_point(nvars, cons);
    if (p) {
      ++feasible;
      CHECK(satisfies(*p, cons));
    } else {
      ++infeasible;
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}
