#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "zzosp/grading.hpp"
#include "zzosp/scalar.hpp"

namespace zzosp {

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square Q(sqrt2) matrix whose row/column indices carry a Z2xZ2 degree.
///
/// Storage is sparse (only nonzero entries, keyed by row-major position) but
/// semantics are those of a dense M x M matrix. Public indices are 1-based.
class GradedMatrix {
 public:
  /// Row-major flat position (0-based) -> nonzero entry.
  using Entries = std::map<std::size_t, Scalar>;

  GradedMatrix() = default;
  explicit GradedMatrix(Signature signature) : signature_(std::move(signature)) {}

  static GradedMatrix identity(const Signature& signature);

  std::size_t size() const { return signature_.size(); }
  const Signature& signature() const { return signature_; }
  const Entries& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Scalar get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& value);
  void add_to(std::size_t i, std::size_t j, const Scalar& value);

  /// 1-based (row, column) of a flat key.
  std::size_t row_of(std::size_t key) const { return key / size() + 1; }
  std::size_t col_of(std::size_t key) const { return key % size() + 1; }

  /// deg_add(d(i), d(j)).
  Degree position_degree(std::size_t i, std::size_t j) const {
    return signature_.at(i) + signature_.at(j);
  }

  GradedMatrix& operator+=(const GradedMatrix& o);
  GradedMatrix& operator-=(const GradedMatrix& o);
  GradedMatrix& operator*=(const Scalar& s);

  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const Scalar& s, GradedMatrix a) { return a *= s; }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  GradedMatrix operator-() const;

  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

 private:
  std::size_t key(std::size_t i, std::size_t j) const;
  void require_same_signature(const GradedMatrix& o, const char* op) const;

  Signature signature_;
  Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const GradedMatrix& a);

/// e_{ij}: a single 1 at (i, j).
GradedMatrix elem(const Signature& signature, std::size_t i, std::size_t j);

/// The degree of a homogeneous matrix, or nullopt. The zero matrix reports (0,0).
std::optional<Degree> degree_of(const GradedMatrix& a);

/// The four homogeneous components of a matrix, indexed by degree.
struct HomogeneousParts {
  std::array<GradedMatrix, 4> parts;

  const GradedMatrix& operator[](Degree d) const { return parts[d.code()]; }
  GradedMatrix sum() const;
};

HomogeneousParts homogeneous_parts(const GradedMatrix& a);

GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix mat_add(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix scalar_scale(const Scalar& s, const GradedMatrix& a);

/// [[x_a, y_b]] = x y - (-1)^{a.b} y x, extended bilinearly over homogeneous parts.
GradedMatrix graded_bracket(const GradedMatrix& a, const GradedMatrix& b);

/// Plain AB - BA and AB + BA, ignoring the grading.
GradedMatrix commutator(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix anticommutator(const GradedMatrix& a, const GradedMatrix& b);

/// Graded supertranspose. Entry (i, j) moves to (j, i) with sign
/// (-1)^{(d(i)+d(j)).d(i)}.
GradedMatrix graded_transpose(const GradedMatrix& a);

/// Ordinary transpose (no signs).
GradedMatrix plain_transpose(const GradedMatrix& a);

/// Sum of diagonal entries, negated on indices of degree (1,0) or (0,1).
Scalar supertrace(const GradedMatrix& a);

}  // namespace zzosp
