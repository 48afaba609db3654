#include "zzosp/graded_matrix.hpp"

#include <string>

namespace zzosp {

GradedMatrix GradedMatrix::identity(const Signature& signature) {
  GradedMatrix out(signature);
  for (std::size_t i = 1; i <= signature.size(); ++i) out.set(i, i, 1);
  return out;
}

std::size_t GradedMatrix::key(std::size_t i, std::size_t j) const {
  const std::size_t m = size();
  if (i < 1 || i > m || j < 1 || j > m) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1.." + std::to_string(m));
  }
  return (i - 1) * m + (j - 1);
}

void GradedMatrix::require_same_signature(const GradedMatrix& o, const char* op) const {
  if (signature_ != o.signature_) {
    throw SignatureMismatch(std::string(op) + ": operands carry different signatures");
  }
}

Scalar GradedMatrix::get(std::size_t i, std::size_t j) const {
  auto it = entries_.find(key(i, j));
  return it == entries_.end() ? Scalar() : it->second;
}

void GradedMatrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  const std::size_t k = key(i, j);
  if (value.is_zero()) {
    entries_.erase(k);
  } else {
    entries_[k] = value;
  }
}

void GradedMatrix::add_to(std::size_t i, std::size_t j, const Scalar& value) {
  if (value.is_zero()) return;
  const std::size_t k = key(i, j);
  auto [it, inserted] = entries_.try_emplace(k, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
  require_same_signature(o, "add");
  for (const auto& [k, v] : o.entries_) {
    auto [it, inserted] = entries_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o) {
  require_same_signature(o, "subtract");
  for (const auto& [k, v] : o.entries_) {
    auto [it, inserted] = entries_.try_emplace(k, -v);
    if (!inserted) {
      it->second -= v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  return *this;
}

GradedMatrix& GradedMatrix::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= s;
  return *this;
}

GradedMatrix GradedMatrix::operator-() const {
  GradedMatrix out = *this;
  for (auto& [k, v] : out.entries_) v = -v;
  return out;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  a.require_same_signature(b, "multiply");
  const std::size_t m = a.size();
  GradedMatrix out(a.signature_);
  for (const auto& [ka, va] : a.entries_) {
    const std::size_t i = ka / m;
    const std::size_t k = ka % m;
    // Row k of b occupies keys [k*m, (k+1)*m).
    for (auto it = b.entries_.lower_bound(k * m); it != b.entries_.end() && it->first < (k + 1) * m;
         ++it) {
      const std::size_t j = it->first % m;
      Scalar prod = va * it->second;
      auto [slot, inserted] = out.entries_.try_emplace(i * m + j, std::move(prod));
      if (!inserted) slot->second += prod;
    }
  }
  std::erase_if(out.entries_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::ostream& operator<<(std::ostream& os, const GradedMatrix& a) {
  os << "GradedMatrix(" << a.size() << ") {";
  bool first = true;
  for (const auto& [k, v] : a.entries()) {
    os << (first ? " " : ", ") << '(' << a.row_of(k) << ',' << a.col_of(k) << ")=" << v;
    first = false;
  }
  return os << " }";
}

GradedMatrix elem(const Signature& signature, std::size_t i, std::size_t j) {
  GradedMatrix out(signature);
  out.set(i, j, 1);
  return out;
}

std::optional<Degree> degree_of(const GradedMatrix& a) {
  std::optional<Degree> found;
  for (const auto& kv : a.entries()) {
    const Degree d = a.position_degree(a.row_of(kv.first), a.col_of(kv.first));
    if (found && *found != d) return std::nullopt;
    found = d;
  }
  return found.value_or(kDeg00);
}

GradedMatrix HomogeneousParts::sum() const {
  GradedMatrix out = parts[0];
  for (std::size_t c = 1; c < parts.size(); ++c) out += parts[c];
  return out;
}

HomogeneousParts homogeneous_parts(const GradedMatrix& a) {
  HomogeneousParts hp;
  for (auto& p : hp.parts) p = GradedMatrix(a.signature());
  for (const auto& [k, v] : a.entries()) {
    const std::size_t i = a.row_of(k);
    const std::size_t j = a.col_of(k);
    hp.parts[a.position_degree(i, j).code()].set(i, j, v);
  }
  return hp;
}

GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) { return a * b; }
GradedMatrix mat_add(const GradedMatrix& a, const GradedMatrix& b) { return a + b; }
GradedMatrix scalar_scale(const Scalar& s, const GradedMatrix& a) { return s * a; }

namespace {

GradedMatrix homogeneous_bracket(const GradedMatrix& x, Degree a, const GradedMatrix& y, Degree b) {
  GradedMatrix xy = x * y;
  GradedMatrix yx = y * x;
  return dot(a, b) ? xy + yx : xy - yx;
}

}  // namespace

GradedMatrix graded_bracket(const GradedMatrix& a, const GradedMatrix& b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da && db) {
    if (a.signature() != b.signature()) throw SignatureMismatch("bracket: operands carry different signatures");
    return homogeneous_bracket(a, *da, b, *db);
  }
  const HomogeneousParts pa = homogeneous_parts(a);
  const HomogeneousParts pb = homogeneous_parts(b);
  GradedMatrix out(a.signature());
  for (Degree x : kAllDegrees) {
    if (pa[x].is_zero()) continue;
    for (Degree y : kAllDegrees) {
      if (pb[y].is_zero()) continue;
      out += homogeneous_bracket(pa[x], x, pb[y], y);
    }
  }
  return out;
}

GradedMatrix commutator(const GradedMatrix& a, const GradedMatrix& b) { return a * b - b * a; }

GradedMatrix anticommutator(const GradedMatrix& a, const GradedMatrix& b) { return a * b + b * a; }

GradedMatrix graded_transpose(const GradedMatrix& a) {
  GradedMatrix out(a.signature());
  for (const auto& [k, v] : a.entries()) {
    const std::size_t i = a.row_of(k);
    const std::size_t j = a.col_of(k);
    const Degree di = a.signature().at(i);
    const int exponent = dot(di + a.signature().at(j), di);
    out.set(j, i, exponent ? -v : v);
  }
  return out;
}

GradedMatrix plain_transpose(const GradedMatrix& a) {
  GradedMatrix out(a.signature());
  for (const auto& [k, v] : a.entries()) out.set(a.col_of(k), a.row_of(k), v);
  return out;
}

Scalar supertrace(const GradedMatrix& a) {
  Scalar total;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const Scalar v = a.get(i, i);
    if (v.is_zero()) continue;
    if (is_even_class(a.signature().at(i))) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total;
}

}  // namespace zzosp
