#pragma once

// Dense brute-force oracles used to cross-check the sparse engine.

#include <vector>

#include "zzosp/algebras.hpp"

namespace oracle {

using zzosp::Rational;

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Dimension of {A : A^T J + J A = 0} computed as M^2 - rank of the dense
/// constraint matrix. Every entry is rational because J and the transpose
/// signs are.
inline std::size_t osp_dimension(const zzosp::AlgebraSpec& spec) {
  const zzosp::Signature sig = spec.signature();
  const std::size_t n = sig.size();
  const zzosp::GradedMatrix j = zzosp::j_matrix(spec);
  // column per unknown e_ab, row per entry of the residual
  std::vector<std::vector<Rational>> rows(n * n, std::vector<Rational>(n * n));
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      const zzosp::GradedMatrix e = zzosp::elem(sig, a, b);
      const zzosp::GradedMatrix r = zzosp::graded_transpose(e) * j + j * e;
      for (std::size_t x = 1; x <= n; ++x) {
        for (std::size_t y = 1; y <= n; ++y) rows[(x - 1) * n + y - 1][(a - 1) * n + b - 1] = r.get(x, y).rational_part();
      }
    }
  }
  return n * n - dense_rank(std::move(rows));
}

/// Rank over Q(sqrt2) of a list of matrices. Each matrix v = r + sqrt2 s is
/// written over Q as (r, s) together with sqrt2 v = (2s, r); the Q-rank of
/// that doubled list is twice the Q(sqrt2)-rank.
inline std::size_t matrix_rank(const std::vector<zzosp::GradedMatrix>& ms) {
  if (ms.empty()) return 0;
  const std::size_t n = ms[0].size();
  const std::size_t nn = n * n;
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : ms) {
    std::vector<Rational> row(2 * nn);
    std::vector<Rational> scaled(2 * nn);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 1; k <= n; ++k) {
        const zzosp::Scalar v = m.get(i, k);
        const std::size_t at = (i - 1) * n + k - 1;
        row[at] = v.rational_part();
        row[nn + at] = v.sqrt2_part();
        scaled[at] = 2 * v.sqrt2_part();
        scaled[nn + at] = v.rational_part();
      }
    }
    rows.push_back(std::move(row));
    rows.push_back(std::move(scaled));
  }
  return dense_rank(std::move(rows)) / 2;
}

/// Specs with m1+m2 <= 2 and n1+n2 <= 2.
inline std::vector<zzosp::AlgebraSpec> grid(zzosp::Family family) {
  std::vector<zzosp::AlgebraSpec> out;
  for (std::size_t m1 = 0; m1 <= 2; ++m1)
    for (std::size_t m2 = 0; m1 + m2 <= 2; ++m2)
      for (std::size_t n1 = 0; n1 <= 2; ++n1)
        for (std::size_t n2 = 0; n1 + n2 <= 2; ++n2) out.push_back({family, m1, m2, n1, n2});
  return out;
}

}  // namespace oracle
