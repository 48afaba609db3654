#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zzosp/algebras_spec.hpp"
#include "zzosp/graded_matrix.hpp"
#include "zzosp/linalg.hpp"
#include "zzosp/report.hpp"

namespace zzosp {

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Labeled matrices spanning (part of) an algebra.
struct Basis {
  AlgebraSpec spec;
  std::vector<GradedMatrix> elements;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

/// Flattened row-major coordinates of a matrix, and back.
SparseVector to_coordinates(const GradedMatrix& a);
GradedMatrix from_coordinates(const Signature& signature, const SparseVector& v);

/// Bilinear form matrix: antidiagonal identity blocks on the orthogonal
/// indices, 1 at the middle index (ospB only), [[0, I], [-I, 0]] on the
/// symplectic indices.
GradedMatrix j_matrix(const AlgebraSpec& spec);

/// u_ij = (-1)^{d(i).d(j)} on the osp signature.
GradedMatrix u_matrix(const AlgebraSpec& spec);

/// Membership: always true for gl, Str A = 0 for sl, A^T J + J A = 0 for osp.
bool is_member(const AlgebraSpec& spec, const GradedMatrix& a);

/// The defect A^T J + J A (or the 1x1-free supertrace residual for sl, placed at (1,1)).
GradedMatrix membership_residual(const AlgebraSpec& spec, const GradedMatrix& a);

/// s_ij = sum_k J_ik e_kj - u_ij sum_k J_jk e_ki (1-based i, j).
GradedMatrix s_matrix(const AlgebraSpec& spec, std::size_t i, std::size_t j);

/// All M^2 matrices s_ij in lexicographic (i, j) order, labeled "s[i,j]".
Basis s_generators(const AlgebraSpec& spec);

/// The independent subset of s_generators (first occurrence wins).
Basis s_basis(const AlgebraSpec& spec);

/// Kernel of A -> A^T J + J A (osp) or A -> Str A (sl) in reduced row echelon
/// form over row-major coordinates. Labels name the pivot entry, "k[i,j]".
Basis kernel_basis(const AlgebraSpec& spec);

/// The e_ij basis of gl, labeled "e[i,j]".
Basis elementary_basis(const AlgebraSpec& spec);

/// Closed-form dimension of ospB / ospD with m = m1+m2, n = n1+n2.
std::size_t expected_dim(const AlgebraSpec& spec);

/// Exact rank over Q(sqrt2). All matrices must share one signature.
std::size_t rank_of(std::span<const GradedMatrix> matrices);

/// Keeps the inputs that are independent of their predecessors.
Basis reduce_span(const AlgebraSpec& spec, std::span<const GradedMatrix> matrices,
                  std::span<const std::string> labels);

/// Every element of the basis satisfies the defining condition.
CheckReport verify_membership(const Basis& basis, const std::string& check_name,
                              std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// For every ordered pair (x, y) of basis elements, [[x, y]] is a member.
CheckReport verify_closure(const Basis& basis, std::size_t jobs = 1,
                           std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// [[x, y]] is homogeneous of degree deg x + deg y, for every ordered pair.
CheckReport verify_grading(const Basis& basis, std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// [[x, y]] = -(-1)^{a.b} [[y, x]] for every ordered pair.
CheckReport verify_symmetry(const Basis& basis, std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// [[x,[[y,z]]]] = [[[[x,y]],z]] + (-1)^{a.b} [[y,[[x,z]]]] for every ordered triple.
CheckReport verify_jacobi(const Basis& basis, std::size_t jobs = 1,
                          std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// span(s_basis) = span(kernel_basis): equal ranks and mutual containment.
CheckReport verify_span_equivalence(const AlgebraSpec& spec);

/// rank(s_basis) = dim(kernel_basis) = expected_dim.
struct DimensionSummary {
  std::size_t kernel = 0;
  std::size_t s_rank = 0;
  std::size_t expected = 0;
  bool match() const { return kernel == expected && s_rank == expected; }
};
DimensionSummary dimension_summary(const AlgebraSpec& spec);

/// Block grid of the ospB layout and the block relations that spell out the
/// defining condition, each checked against the kernel basis.
struct BlockRelation {
  char lhs_letter;  // 'a', 'b', 'c' or 'd'
  int lhs_row;
  int lhs_col;
  enum class Kind { transpose, skew, symmetric, zero } kind;
  int sign;          // transpose relations: lhs = sign * rhs^t
  char rhs_letter;
  int rhs_row;
  int rhs_col;

  std::string text() const;
};

/// The block relations, in the order they are listed for ospB.
const std::vector<BlockRelation>& block_relations();

/// Alternative readings of the two relations whose printed source carries a
/// malformed subscript; checked and reported but not counted.
const std::vector<BlockRelation>& block_relation_alternatives();

/// Residual of one relation on one matrix (zero when it holds), laid out on
/// the left-hand block's positions. Empty blocks give a zero residual.
GradedMatrix block_relation_residual(const AlgebraSpec& spec, const BlockRelation& rel,
                                     const GradedMatrix& a);

/// True when both sides of the relation are empty blocks for this spec.
bool block_relation_vacuous(const AlgebraSpec& spec, const BlockRelation& rel);

CheckReport verify_block_conditions(const AlgebraSpec& spec,
                                    std::size_t max_counterexamples = kDefaultMaxCounterexamples);

}  // namespace zzosp
