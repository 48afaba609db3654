#include "zzosp/linalg.hpp"

#include <set>

namespace zzosp {

void add_scaled(SparseVector& y, const Scalar& factor, const SparseVector& x) {
  if (factor.is_zero()) return;
  for (const auto& [k, v] : x) {
    Scalar term = factor * v;
    auto [it, inserted] = y.try_emplace(k, std::move(term));
    if (!inserted) {
      it->second += term;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void Echelon::reduce(SparseVector& v) const {
  // Every stored row is zero left of its pivot, so eliminating the smallest
  // remaining pivot coordinate never reintroduces an earlier one.
  auto cursor = v.begin();
  while (cursor != v.end()) {
    const std::size_t coord = cursor->first;
    auto row = rows_.find(coord);
    if (row == rows_.end()) {
      ++cursor;
      continue;
    }
    const Scalar factor = -cursor->second;
    add_scaled(v, factor, row->second);
    cursor = v.upper_bound(coord);
  }
}

bool Echelon::insert(SparseVector v) {
  reduce(v);
  if (v.empty()) return false;
  const Scalar inv = v.begin()->second.inverse();
  for (auto& [k, x] : v) x *= inv;
  const std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool Echelon::contains(SparseVector v) const {
  reduce(v);
  return v.empty();
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& kv : rows_) out.push_back(kv.first);
  return out;
}

std::vector<SparseVector> Echelon::reduced_rows() const {
  // Back-substitute from the last pivot up.
  std::map<std::size_t, SparseVector> rows = rows_;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    const std::size_t pivot = it->first;
    for (auto& [other_pivot, other] : rows) {
      if (other_pivot >= pivot) break;
      auto hit = other.find(pivot);
      if (hit == other.end()) continue;
      const Scalar factor = -hit->second;
      add_scaled(other, factor, it->second);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rows.size());
  for (auto& kv : rows) out.push_back(std::move(kv.second));
  return out;
}

std::vector<SparseVector> null_space(const std::vector<SparseVector>& rows, std::size_t dimension) {
  Echelon constraints;
  for (const auto& r : rows) constraints.insert(r);
  const std::vector<SparseVector> reduced = constraints.reduced_rows();
  const std::vector<std::size_t> pivot_list = constraints.pivots();
  const std::set<std::size_t> pivot_set(pivot_list.begin(), pivot_list.end());

  // One kernel vector per free coordinate f: x_f = 1, x_p = -R[p][f].
  Echelon kernel;
  for (std::size_t f = 0; f < dimension; ++f) {
    if (pivot_set.count(f)) continue;
    SparseVector v;
    v.emplace(f, Scalar(1));
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      auto hit = reduced[r].find(f);
      if (hit != reduced[r].end()) v.emplace(pivot_list[r], -hit->second);
    }
    kernel.insert(std::move(v));
  }
  return kernel.reduced_rows();
}

}  // namespace zzosp
