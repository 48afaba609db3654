#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "zzosp/algebras.hpp"

using namespace zzosp;

namespace {

GradedMatrix dense(const Signature& sig, std::initializer_list<std::initializer_list<long>> rows) {
  GradedMatrix m(sig);
  std::size_t i = 1;
  for (const auto& row : rows) {
    std::size_t j = 1;
    for (long v : row) m.set(i, j++, Scalar(v));
    ++i;
  }
  return m;
}

std::set<Degree> occurring_degrees(const Basis& b) {
  std::set<Degree> out;
  for (const auto& e : b.elements) out.insert(*degree_of(e));
  return out;
}

}  // namespace

TEST_CASE("J matrix") {
  const AlgebraSpec zero{Family::ospB, 0, 0, 0, 0};
  CHECK(j_matrix(zero) == dense(zero.signature(), {{1}}));
  const AlgebraSpec so3{Family::ospB, 1, 0, 0, 0};
  CHECK(j_matrix(so3) == dense(so3.signature(), {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  const AlgebraSpec osp12{Family::ospB, 0, 0, 1, 0};
  CHECK(j_matrix(osp12) == dense(osp12.signature(), {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
  const AlgebraSpec so2{Family::ospD, 1, 0, 0, 0};
  CHECK(j_matrix(so2) == dense(so2.signature(), {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(j_matrix({Family::gl, 1, 0, 0, 0}), UnsupportedFamily);
}

TEST_CASE("membership") {
  const AlgebraSpec osp12{Family::ospB, 0, 0, 1, 0};
  const Signature s = osp12.signature();
  const GradedMatrix b_minus = Scalar::sqrt2() * (elem(s, 1, 2) - elem(s, 3, 1));
  CHECK(is_member(osp12, b_minus));
  CHECK_FALSE(is_member(osp12, elem(s, 1, 2)));
  CHECK(is_member(osp12, GradedMatrix(s)));

  const AlgebraSpec sl{Family::sl, 1, 1, 0, 0};
  CHECK_FALSE(is_member(sl, elem(sl.signature(), 1, 1)));
  CHECK(is_member(sl, elem(sl.signature(), 1, 1) - elem(sl.signature(), 2, 2)));
  CHECK(is_member({Family::gl, 1, 1, 0, 0}, elem(sl.signature(), 1, 1)));
  CHECK_THROWS_AS(is_member(osp12, elem(sl.signature(), 1, 1)), SignatureMismatch);
}

TEST_CASE("u matrix") {
  CHECK(u_matrix({Family::ospB, 0, 0, 0, 0}).get(1, 1) == Scalar(1));
  const AlgebraSpec osp12{Family::ospB, 0, 0, 1, 0};
  const GradedMatrix u = u_matrix(osp12);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) CHECK(u.get(i, j) == Scalar((i > 1 && j > 1) ? -1 : 1));
  }
  const AlgebraSpec big{Family::ospB, 1, 1, 1, 1};
  CHECK(plain_transpose(u_matrix(big)) == u_matrix(big));
}

TEST_CASE("s basis sizes") {
  CHECK(s_basis({Family::ospB, 0, 0, 0, 0}).empty());
  CHECK(s_basis({Family::ospB, 1, 0, 0, 0}).size() == 3);
  CHECK(s_basis({Family::ospB, 0, 0, 1, 0}).size() == 5);
  CHECK(s_generators({Family::ospB, 1, 0, 0, 0}).size() == 9);
  CHECK(rank_of(s_generators({Family::ospB, 1, 0, 0, 0}).elements) == 3);
}

TEST_CASE("rank_of") {
  const Signature s = signature_gl(1, 1, 0, 0);
  const std::vector<GradedMatrix> ms = {elem(s, 1, 2), Scalar(2) * elem(s, 1, 2), elem(s, 2, 1)};
  CHECK(rank_of(ms) == 2);
  CHECK(rank_of(std::span<const GradedMatrix>{}) == 0);
  // sqrt2 multiples are dependent over Q(sqrt2)
  const std::vector<GradedMatrix> ns = {elem(s, 1, 2) + elem(s, 2, 1),
                                        Scalar::sqrt2() * elem(s, 1, 2) + Scalar::sqrt2() * elem(s, 2, 1)};
  CHECK(rank_of(ns) == 1);
  CHECK(oracle::matrix_rank(ns) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis({Family::ospB, 1, 0, 1, 0}).size() == 12);
  CHECK(kernel_basis({Family::sl, 1, 0, 1, 0}).size() == 3);
  CHECK(kernel_basis({Family::ospB, 0, 0, 0, 0}).empty());
  CHECK(kernel_basis({Family::ospD, 1, 0, 0, 0}).size() == 1);
  CHECK_THROWS_AS(kernel_basis({Family::gl, 1, 0, 0, 0}), UnsupportedFamily);

  // canonical form: each element has a distinct pivot equal to 1 that no other element touches
  const Basis b = kernel_basis({Family::ospB, 1, 1, 1, 1});
  std::set<std::size_t> pivots;
  for (const auto& e : b.elements) {
    const auto& [key, value] = *e.entries().begin();
    CHECK(value == Scalar(1));
    pivots.insert(key);
    for (const auto& other : b.elements) {
      if (&other != &e) CHECK(other.entries().count(key) == 0);
    }
  }
  CHECK(pivots.size() == b.size());
}

TEST_CASE("expected_dim agrees with a dense brute-force count") {
  CHECK(expected_dim({Family::ospB, 1, 0, 1, 0}) == 12);
  CHECK(expected_dim({Family::ospB, 0, 0, 1, 0}) == 5);
  CHECK(expected_dim({Family::ospD, 1, 0, 0, 0}) == 1);
  for (Family f : {Family::ospB, Family::ospD}) {
    for (const AlgebraSpec& spec : oracle::grid(f)) {
      if (spec.matrix_size() == 0) continue;
      CAPTURE(spec.to_string());
      CHECK(oracle::osp_dimension(spec) == expected_dim(spec));
    }
  }
}

TEST_CASE("s_ij pairs are proportional") {
  // s_ji = -u_ij s_ij, checked rather than assumed
  for (const AlgebraSpec& spec : {AlgebraSpec{Family::ospB, 1, 1, 1, 1}, AlgebraSpec{Family::ospD, 1, 0, 1, 1}}) {
    const std::size_t n = spec.matrix_size();
    const GradedMatrix u = u_matrix(spec);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) CHECK(s_matrix(spec, j, i) == -u.get(i, j) * s_matrix(spec, i, j));
    }
  }
}

TEST_CASE("closure") {
  const Basis b = kernel_basis({Family::ospB, 1, 0, 1, 0});
  const CheckReport r = verify_closure(b);
  CHECK(r.total == 144);
  CHECK(r.passed());
  CHECK(verify_closure(b, 4).total == 144);

  const CheckReport so2 = verify_closure(kernel_basis({Family::ospD, 1, 0, 0, 0}));
  CHECK(so2.total == 1);
  CHECK(so2.passed());

  Basis bad = kernel_basis({Family::ospB, 1, 0, 0, 0});
  bad.elements.push_back(elem(bad.spec.signature(), 1, 1));
  bad.labels.push_back("e[1,1]");
  const CheckReport neg = verify_closure(bad);
  CHECK(neg.failed > 0);
  CHECK_FALSE(neg.passed());
  REQUIRE_FALSE(neg.counterexamples.empty());
  CHECK_FALSE(neg.counterexamples[0].residual.is_zero());
  CHECK(neg.counterexamples.size() == std::min<std::size_t>(neg.failed, kDefaultMaxCounterexamples));
  CHECK(verify_closure(bad, 1, 2).counterexamples.size() == 2);
}

TEST_CASE("span equivalence and dimension summary") {
  const AlgebraSpec spec{Family::ospB, 1, 1, 1, 1};
  CHECK(verify_span_equivalence(spec).passed());
  const DimensionSummary d = dimension_summary(spec);
  CHECK(d.kernel == 40);
  CHECK(d.s_rank == 40);
  CHECK(d.match());
}

TEST_CASE("block conditions on so(3)") {
  const AlgebraSpec so3{Family::ospB, 1, 0, 0, 0};
  const CheckReport r = verify_block_conditions(so3);
  CHECK(r.passed());
  const Basis b = kernel_basis(so3);
  for (const auto& rel : block_relations()) {
    if (block_relation_vacuous(so3, rel)) continue;
    CHECK(block_relation_residual(so3, rel, GradedMatrix(so3.signature())).is_zero());
  }
  CHECK_THROWS_AS(verify_block_conditions({Family::ospD, 1, 0, 0, 0}), UnsupportedFamily);
}

TEST_CASE("ospD embeds in ospB") {
  for (const AlgebraSpec& d : oracle::grid(Family::ospD)) {
    if (d.matrix_size() == 0) continue;
    const AlgebraSpec b{Family::ospB, d.m1, d.m2, d.n1, d.n2};
    const std::size_t mid = 2 * d.m() + 1;
    const Signature sig = b.signature();
    CAPTURE(d.to_string());
    for (const auto& e : kernel_basis(d).elements) {
      GradedMatrix lifted(sig);
      for (const auto& [key, v] : e.entries()) {
        std::size_t i = key / e.size() + 1;
        std::size_t j = key % e.size() + 1;
        lifted.set(i >= mid ? i + 1 : i, j >= mid ? j + 1 : j, v);
      }
      CHECK(is_member(b, lifted));
    }
  }
}

TEST_CASE("special-case reductions") {
  for (const AlgebraSpec& spec : oracle::grid(Family::ospB)) {
    CAPTURE(spec.to_string());
    const Basis b = kernel_basis(spec);
    const std::set<Degree> degs = occurring_degrees(b);
    if (spec.m2 == 0 && spec.n2 == 0) {
      for (Degree x : degs)
        for (Degree y : degs) CHECK(dot(x, y) == ((x.a1 * y.a1) & 1));
    }
    if (spec.n() == 0) {
      for (Degree x : degs) CHECK((x == kDeg00 || x == kDeg11));
      for (const auto& x : b.elements)
        for (const auto& y : b.elements) CHECK(graded_bracket(x, y) == commutator(x, y));
    }
    if (spec.m() == 0 && (spec.n1 == 0) != (spec.n2 == 0)) {
      const Degree odd = spec.n1 > 0 ? kDeg10 : kDeg01;
      for (Degree x : degs) {
        CHECK((x == kDeg00 || x == odd));
        for (Degree y : degs) CHECK(dot(x, y) == ((x == odd && y == odd) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("grading, symmetry and Jacobi on a small algebra") {
  const Basis b = kernel_basis({Family::ospB, 1, 0, 1, 1});
  CHECK(verify_grading(b).passed());
  CHECK(verify_symmetry(b).passed());
  const CheckReport j = verify_jacobi(b, 2);
  CHECK(j.total == b.size() * b.size() * b.size());
  CHECK(j.passed());
}

TEST_CASE("Jacobi on gl elementary basis") {
  const Basis b = elementary_basis({Family::gl, 1, 1, 0, 1});
  CHECK(b.size() == 9);
  const CheckReport r = verify_jacobi(b, 3);
  CHECK(r.total == 729);
  CHECK(r.passed());
}
