#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "zzosp/scalar.hpp"

namespace zzosp {

/// Sparse coordinate vector over Q(sqrt2): coordinate -> nonzero value.
using SparseVector = std::map<std::size_t, Scalar>;

/// axpy: y += factor * x, dropping cancelled coordinates.
void add_scaled(SparseVector& y, const Scalar& factor, const SparseVector& x);

/// Incremental row echelon form over Q(sqrt2).
///
/// Rows are kept with distinct leading coordinates and leading entry 1.
/// Insertion reduces the candidate left to right against existing pivots
/// (leftmost pivot first), so the result depends only on input order.
class Echelon {
 public:
  /// Reduces v against the current rows. If a nonzero remainder is left it is
  /// normalized and stored, and the call returns true.
  bool insert(SparseVector v);

  /// True when v lies in the span of the stored rows.
  bool contains(SparseVector v) const;

  std::size_t rank() const { return rows_.size(); }

  /// Reduced row echelon form of the span, ordered by pivot coordinate.
  std::vector<SparseVector> reduced_rows() const;

  /// Pivot coordinates in increasing order.
  std::vector<std::size_t> pivots() const;

 private:
  void reduce(SparseVector& v) const;

  std::map<std::size_t, SparseVector> rows_;  // pivot -> row
};

/// Basis of the null space of the linear map whose matrix has the given rows
/// (each row is a functional on coordinates 0..dimension-1), returned in
/// reduced row echelon form.
std::vector<SparseVector> null_space(const std::vector<SparseVector>& rows, std::size_t dimension);

}  // namespace zzosp
