#include <algorithm>
#include <optional>
#include <array>
#include <sstream>

#include "zzosp/algebras.hpp"

namespace zzosp {

namespace {

using Kind = BlockRelation::Kind;

BlockRelation tr(char l, int lr, int lc, int sign, char r, int rr, int rc) {
  return {l, lr, lc, Kind::transpose, sign, r, rr, rc};
}
BlockRelation skew(char l, int lr, int lc) { return {l, lr, lc, Kind::skew, -1, l, lr, lc}; }
BlockRelation sym(char l, int lr, int lc) { return {l, lr, lc, Kind::symmetric, 1, l, lr, lc}; }
BlockRelation zero(char l, int lr, int lc) { return {l, lr, lc, Kind::zero, 0, l, lr, lc}; }

/// Row/column groups of the ospB layout: m1, m2, m1, m2, 1, n1, n2, n1, n2.
struct BlockGrid {
  std::array<std::size_t, 9> size{};
  std::array<std::size_t, 9> offset{};  // 1-based first index

  explicit BlockGrid(const AlgebraSpec& spec) {
    size = {spec.m1, spec.m2, spec.m1, spec.m2, 1, spec.n1, spec.n2, spec.n1, spec.n2};
    std::size_t at = 1;
    for (std::size_t g = 0; g < 9; ++g) {
      offset[g] = at;
      at += size[g];
    }
  }

  /// Group indices (0-based) of a lettered block [p,q].
  static std::pair<std::size_t, std::size_t> groups(char letter, int p, int q) {
    const std::size_t row = (letter == 'a' || letter == 'b') ? p - 1 : 4 + p;
    const std::size_t col = (letter == 'a' || letter == 'c') ? q - 1 : 4 + q;
    return {row, col};
  }
};

void require_ospB(const AlgebraSpec& spec) {
  if (spec.family != Family::ospB) {
    throw UnsupportedFamily("block conditions are defined for ospB only, got " + spec.to_string());
  }
}

}  // namespace

std::string BlockRelation::text() const {
  std::ostringstream os;
  os << lhs_letter << '[' << lhs_row << ',' << lhs_col << ']';
  switch (kind) {
    case Kind::transpose:
      os << " = " << (sign < 0 ? "-" : "") << rhs_letter << '[' << rhs_row << ',' << rhs_col << "]^t";
      break;
    case Kind::skew: os << " skew-symmetric"; break;
    case Kind::symmetric: os << " symmetric"; break;
    case Kind::zero: os << " = 0"; break;
  }
  return os.str();
}

const std::vector<BlockRelation>& block_relations() {
  static const std::vector<BlockRelation> rels = {
      tr('a', 3, 3, -1, 'a', 1, 1), tr('a', 3, 4, -1, 'a', 2, 1), tr('a', 4, 3, -1, 'a', 1, 2),
      tr('a', 4, 4, -1, 'a', 2, 2), tr('a', 2, 3, -1, 'a', 1, 4), tr('a', 4, 1, -1, 'a', 3, 2),
      skew('a', 1, 3), skew('a', 2, 4), skew('a', 3, 1), skew('a', 4, 2),
      tr('a', 5, 1, -1, 'a', 3, 5), tr('a', 5, 2, -1, 'a', 4, 5), tr('a', 5, 3, -1, 'a', 1, 5),
      tr('a', 5, 4, -1, 'a', 2, 5), zero('a', 5, 5),
      tr('d', 3, 3, -1, 'd', 1, 1), tr('d', 3, 4, 1, 'd', 2, 1), tr('d', 4, 3, 1, 'd', 1, 2),
      tr('d', 4, 4, -1, 'd', 2, 2), tr('d', 2, 3, -1, 'd', 1, 4), tr('d', 4, 1, -1, 'd', 3, 2),
      sym('d', 1, 3), sym('d', 2, 4), sym('d', 3, 1), sym('d', 4, 2),
      tr('c', 1, 1, 1, 'b', 3, 3), tr('c', 1, 2, -1, 'b', 4, 3), tr('c', 1, 3, 1, 'b', 1, 3),
      tr('c', 1, 4, -1, 'b', 2, 3), tr('c', 1, 5, 1, 'b', 5, 3),
      tr('c', 2, 1, 1, 'b', 3, 4), tr('c', 2, 2, -1, 'b', 4, 4), tr('c', 2, 3, 1, 'b', 1, 4),
      tr('c', 2, 4, -1, 'b', 2, 4), tr('c', 2, 5, 1, 'b', 5, 4),
      tr('c', 3, 1, -1, 'b', 3, 1), tr('c', 3, 2, 1, 'b', 4, 1), tr('c', 3, 3, -1, 'b', 1, 1),
      tr('c', 3, 4, 1, 'b', 2, 1), tr('c', 3, 5, -1, 'b', 5, 1),
      tr('c', 4, 1, -1, 'b', 3, 2), tr('c', 4, 2, 1, 'b', 4, 2), tr('c', 4, 3, -1, 'b', 1, 2),
      tr('c', 4, 4, 1, 'b', 2, 2), tr('c', 4, 5, -1, 'b', 5, 2),
  };
  return rels;
}

const std::vector<BlockRelation>& block_relation_alternatives() {
  // The a[2,3] and d[2,3] relations are printed with a malformed degree
  // subscript. The primary table reads them with the subscript restored to
  // (1,1) and the printed sign; these are the sign-flipped readings.
  static const std::vector<BlockRelation> alts = {
      tr('a', 2, 3, 1, 'a', 1, 4),
      tr('d', 2, 3, 1, 'd', 1, 4),
  };
  return alts;
}

bool block_relation_vacuous(const AlgebraSpec& spec, const BlockRelation& rel) {
  require_ospB(spec);
  const BlockGrid grid(spec);
  const auto [r, c] = BlockGrid::groups(rel.lhs_letter, rel.lhs_row, rel.lhs_col);
  return grid.size[r] == 0 || grid.size[c] == 0;
}

namespace {

/// Calls emit(lhs_i, lhs_j, coeff, rhs_i, rhs_j) for every scalar equation
/// lhs - coeff * rhs = 0 of the relation; coeff is 0 for "= 0" relations.
template <class Emit>
void for_each_equation(const BlockGrid& grid, const BlockRelation& rel, Emit&& emit) {
  const auto [lr, lc] = BlockGrid::groups(rel.lhs_letter, rel.lhs_row, rel.lhs_col);
  const auto [rr, rc] = BlockGrid::groups(rel.rhs_letter, rel.rhs_row, rel.rhs_col);
  if (rel.kind == Kind::transpose && (grid.size[lr] != grid.size[rc] || grid.size[lc] != grid.size[rr])) {
    throw std::logic_error("block relation " + rel.text() + " pairs blocks of incompatible shape");
  }
  for (std::size_t x = 0; x < grid.size[lr]; ++x) {
    for (std::size_t y = 0; y < grid.size[lc]; ++y) {
      const std::size_t li = grid.offset[lr] + x;
      const std::size_t lj = grid.offset[lc] + y;
      // Transposed partner of (x, y) inside the right-hand block.
      const std::size_t ri = grid.offset[rr] + y;
      const std::size_t rj = grid.offset[rc] + x;
      emit(li, lj, rel.kind == Kind::zero ? 0 : rel.sign, ri, rj);
    }
  }
}

}  // namespace

GradedMatrix block_relation_residual(const AlgebraSpec& spec, const BlockRelation& rel, const GradedMatrix& a) {
  require_ospB(spec);
  const BlockGrid grid(spec);
  GradedMatrix out(a.signature());
  for_each_equation(grid, rel, [&](std::size_t li, std::size_t lj, int coeff, std::size_t ri, std::size_t rj) {
    Scalar v = a.get(li, lj);
    if (coeff != 0) v -= Scalar(coeff) * a.get(ri, rj);
    out.set(li, lj, v);
  });
  return out;
}

CheckReport verify_block_conditions(const AlgebraSpec& spec, std::size_t max_counterexamples) {
  require_ospB(spec);
  const BlockGrid grid(spec);
  const Basis kernel = kernel_basis(spec);
  const auto& rels = block_relations();

  CheckReport r;
  r.check = "block_conditions";
  r.spec = spec;
  for (const auto& rel : rels) {
    if (!block_relation_vacuous(spec, rel)) ++r.declared_total;
  }
  ++r.declared_total;  // the relations cut out exactly the kernel

  auto check_relation = [&](const BlockRelation& rel, bool counted) -> std::string {
    if (block_relation_vacuous(spec, rel)) return "vacuous";
    bool ok = true;
    std::optional<Counterexample> first;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      GradedMatrix residual = block_relation_residual(spec, rel, kernel.elements[i]);
      if (!residual.is_zero()) {
        ok = false;
        first = Counterexample{rel.text(), {long(i + 1)}, {}, std::move(residual)};
        break;
      }
    }
    if (counted) {
      r.record(ok, max_counterexamples,
               first ? std::move(*first) : Counterexample{rel.text(), {}, {}, GradedMatrix(spec.signature())});
    }
    return ok ? "consistent" : "inconsistent";
  };

  for (const auto& rel : rels) {
    const bool malformed = std::any_of(block_relation_alternatives().begin(), block_relation_alternatives().end(),
                                       [&](const BlockRelation& alt) {
                                         return alt.lhs_letter == rel.lhs_letter && alt.lhs_row == rel.lhs_row &&
                                                alt.lhs_col == rel.lhs_col;
                                       });
    r.details.push_back({rel.text(), check_relation(rel, true),
                         malformed ? "printed degree label is malformed; read as (1,1) with the printed sign" : ""});
  }
  for (const auto& rel : block_relation_alternatives()) {
    r.details.push_back({rel.text(), check_relation(rel, false),
                         "alternative reading of a relation printed with a malformed subscript; not counted"});
  }

  // Completeness: the solution space of all relations equals the kernel.
  const std::size_t size = spec.matrix_size();
  std::vector<SparseVector> equations;
  for (const auto& rel : rels) {
    for_each_equation(grid, rel, [&](std::size_t li, std::size_t lj, int coeff, std::size_t ri, std::size_t rj) {
      SparseVector eq;
      eq[(li - 1) * size + (lj - 1)] += Scalar(1);
      if (coeff != 0) eq[(ri - 1) * size + (rj - 1)] -= Scalar(coeff);
      std::erase_if(eq, [](const auto& kv) { return kv.second.is_zero(); });
      if (!eq.empty()) equations.push_back(std::move(eq));
    });
  }
  const std::size_t solution_dim = null_space(equations, size * size).size();
  const bool complete = solution_dim == kernel.size();
  r.record(complete, max_counterexamples,
           {"solution dimension", {long(solution_dim), long(kernel.size())}, {}, GradedMatrix(spec.signature())});
  r.details.push_back({"relations determine the algebra", complete ? "consistent" : "inconsistent",
                       "solution dimension " + std::to_string(solution_dim) + ", kernel dimension " +
                           std::to_string(kernel.size())});
  return r;
}

}  // namespace zzosp
