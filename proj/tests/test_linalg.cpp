#include <doctest.h>

#include "zzosp/linalg.hpp"

using namespace zzosp;

TEST_CASE("echelon rank and membership") {
  Echelon e;
  CHECK(e.insert({{0, Scalar(1)}, {1, Scalar(2)}}));
  CHECK(e.insert({{1, Scalar(1)}, {2, Scalar::sqrt2()}}));
  CHECK_FALSE(e.insert({{0, Scalar(2)}, {1, Scalar(5)}, {2, Scalar::sqrt2()}}));
  CHECK(e.rank() == 2);
  CHECK(e.contains({{0, Scalar(1)}, {1, Scalar(3)}, {2, Scalar::sqrt2()}}));
  CHECK_FALSE(e.contains({{2, Scalar(1)}}));
  CHECK(e.pivots() == std::vector<std::size_t>{0, 1});
  const auto rows = e.reduced_rows();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].count(1) == 0);
}

TEST_CASE("null space") {
  // x0 + x1 + x2 = 0 over three coordinates
  const auto ns = null_space({{{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    Scalar sum(0);
    for (const auto& [k, x] : v) sum += x;
    CHECK(sum.is_zero());
  }
  CHECK(null_space({}, 4).size() == 4);
  CHECK(null_space({{{0, Scalar(1)}}, {{1, Scalar(1)}}}, 2).empty());
}
