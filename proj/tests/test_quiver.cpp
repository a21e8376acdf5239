#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shades/enumerate.hpp"
#include "shades/quiver.hpp"

using namespace shades;

namespace {

const SkewIntMatrix kMarkov =
    SkewIntMatrix::from_rows({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});

}  // namespace

TEST_CASE("quiver of the Markov shadow is the doubled 3-cycle") {
  auto q = quiver_of(kMarkov);
  CHECK(q.n == 3);
  CHECK(q.arr == std::vector<std::vector<int>>{{0, 0, 2}, {2, 0, 0}, {0, 2, 0}});
}

TEST_CASE("signed adjacency round trip") {
  for (int n : {1, 2, 3, 4, 5}) {
    for (auto& m : enumerate_basic_shades({.n = n})) {
      auto q = quiver_of(m);
      CHECK(signed_adjacency(q) == m.rows());
      for (int i = 0; i < n; ++i) {
        CHECK(q.arr[i][i] == 0);
        for (int j = 0; j < n; ++j) {
          CHECK(q.arr[i][j] >= 0);
          // minimal quiver: no 2-cycles
          CHECK((q.arr[i][j] == 0 || q.arr[j][i] == 0));
        }
      }
    }
  }
}

TEST_CASE("opposite quiver") {
  auto q = quiver_of(kMarkov);
  auto op = opposite_quiver(q);
  CHECK(op.arr == std::vector<std::vector<int>>{{0, 2, 0}, {0, 0, 2}, {2, 0, 0}});
  CHECK(opposite_quiver(op) == q);
  CHECK(signed_adjacency(op) == opposite(kMarkov).rows());
}

TEST_CASE("dot output") {
  auto dot = to_dot(quiver_of(kMarkov));
  CHECK(dot.find("digraph") != std::string::npos);
  // six arrows total
  int edges = 0;
  for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 6);
}
