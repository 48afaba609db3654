#include <doctest.h>

#include <array>

#include "zzosp/graded_matrix.hpp"

using namespace zzosp;

namespace {

// Sign in front of each output block of the graded supertranspose, for the
// block layout (0,0) (1,1) (1,0) (0,1). Output block (r, c) holds the ordinary
// transpose of input block (c, r).
constexpr std::array<std::array<int, 4>, 4> kTransposeSigns = {{
    {+1, +1, -1, -1},
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
}};

std::size_t block_of(std::size_t index, const std::array<std::size_t, 4>& sizes) {
  std::size_t start = 1;
  for (std::size_t b = 0; b < 4; ++b) {
    if (index < start + sizes[b]) return b;
    start += sizes[b];
  }
  return 4;
}

}  // namespace

TEST_CASE("elementary matrices and degrees") {
  const Signature s = signature_gl(1, 0, 1, 1);
  const GradedMatrix e = elem(s, 2, 3);
  CHECK(e.get(2, 3) == Scalar(1));
  CHECK(e.nonzero_count() == 1);
  CHECK(degree_of(e) == kDeg11);
  CHECK(degree_of(GradedMatrix(s)) == kDeg00);
  CHECK_FALSE(degree_of(elem(s, 1, 2) + elem(s, 1, 3)).has_value());
  CHECK_THROWS_AS(elem(s, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(elem(s, 1, 4), std::out_of_range);
}

TEST_CASE("products respect the grading") {
  const Signature s = signature_gl(1, 1, 1, 1);
  const GradedMatrix a = elem(s, 1, 3);  // (1,0)
  const GradedMatrix b = elem(s, 3, 2);  // (0,1) ... times gives e_12 of degree (1,1)
  CHECK(degree_of(a) == kDeg10);
  CHECK(degree_of(b) == kDeg01);
  CHECK(degree_of(a * b) == kDeg11);
  CHECK(a * b == elem(s, 1, 2));
  CHECK(mat_mul(a, b) == a * b);
  CHECK(mat_add(a, b) == a + b);
  CHECK(scalar_scale(Scalar::sqrt2(), a).get(1, 3) == Scalar::sqrt2());
  CHECK_THROWS_AS(a + elem(signature_gl(1, 1, 1, 0), 1, 1), SignatureMismatch);
}

TEST_CASE("homogeneous parts sum back") {
  const Signature s = signature_gl(1, 1, 1, 1);
  GradedMatrix a(s);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) a.set(i, j, Scalar(long(i * 4 + j), long(i) - long(j)));
  }
  const HomogeneousParts parts = homogeneous_parts(a);
  CHECK(parts.sum() == a);
  for (Degree d : kAllDegrees) {
    CHECK(degree_of(parts[d]) == d);
    CHECK(parts[d].nonzero_count() == 4);
  }
}

TEST_CASE("graded bracket picks commutator or anticommutator") {
  const Signature s = signature_gl(1, 0, 1, 1);
  // degrees (1,0) and (0,1): dot = 0
  CHECK(graded_bracket(elem(s, 2, 1), elem(s, 1, 3)) == elem(s, 2, 3));
  // degrees (1,0) and (1,0): dot = 1
  CHECK(graded_bracket(elem(s, 1, 2), elem(s, 2, 1)) == elem(s, 1, 1) + elem(s, 2, 2));
  CHECK(commutator(elem(s, 1, 2), elem(s, 2, 1)) == elem(s, 1, 1) - elem(s, 2, 2));
  CHECK(anticommutator(elem(s, 1, 2), elem(s, 2, 1)) == elem(s, 1, 1) + elem(s, 2, 2));
}

TEST_CASE("graded bracket extends bilinearly") {
  const Signature s = signature_gl(1, 1, 1, 1);
  const GradedMatrix x = elem(s, 1, 3) + elem(s, 2, 4) + Scalar(2) * elem(s, 1, 1);
  const GradedMatrix y = elem(s, 3, 1) - elem(s, 4, 2);
  GradedMatrix expected(s);
  const auto px = homogeneous_parts(x);
  const auto py = homogeneous_parts(y);
  for (Degree a : kAllDegrees) {
    for (Degree b : kAllDegrees) expected += graded_bracket(px[a], py[b]);
  }
  CHECK(graded_bracket(x, y) == expected);
}

TEST_CASE("graded transpose on elementary matrices") {
  const Signature s = signature_gl(1, 0, 1, 0);
  CHECK(graded_transpose(elem(s, 1, 2)) == elem(s, 2, 1));
  CHECK(graded_transpose(elem(s, 2, 1)) == -elem(s, 1, 2));
}

TEST_CASE("graded transpose matches the block sign table") {
  const std::array<std::size_t, 4> sizes = {2, 1, 2, 1};
  const Signature s = signature_gl(sizes[0], sizes[1], sizes[2], sizes[3]);
  const std::size_t n = s.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const GradedMatrix t = graded_transpose(elem(s, i, j));
      const int sign = kTransposeSigns[block_of(j, sizes)][block_of(i, sizes)];
      CHECK(t == Scalar(sign) * elem(s, j, i));
    }
  }
}

TEST_CASE("graded transpose reduces to the supertranspose on one-parity grids") {
  // gl(m,0|n,0): [[a, b], [c, d]] -> [[a^t, -c^t], [b^t, d^t]]
  const Signature s = signature_gl(2, 0, 2, 0);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      const int sign = (i > 2 && j <= 2) ? -1 : 1;
      CHECK(graded_transpose(elem(s, i, j)) == Scalar(sign) * elem(s, j, i));
    }
  }
}

TEST_CASE("supertrace") {
  const Signature s = signature_gl(1, 0, 1, 0);
  CHECK(supertrace(elem(s, 2, 2)) == Scalar(-1));
  CHECK(supertrace(elem(s, 1, 1)) == Scalar(1));
  CHECK(supertrace(elem(s, 1, 2)) == Scalar(0));
  const Signature t = signature_gl(1, 1, 1, 1);
  CHECK(supertrace(GradedMatrix::identity(t)) == Scalar(0));
}
