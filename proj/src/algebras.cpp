#include "zzosp/algebras.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "zzosp/parallel.hpp"

namespace zzosp {

// ---------------------------------------------------------------------------
// AlgebraSpec

std::string to_string(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::ospB: return "ospB";
    case Family::ospD: return "ospD";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "gl") return Family::gl;
  if (name == "sl") return Family::sl;
  if (name == "ospB") return Family::ospB;
  if (name == "ospD") return Family::ospD;
  throw SpecError("unknown algebra family '" + name + "' (expected gl, sl, ospB or ospD)");
}

std::size_t AlgebraSpec::matrix_size() const {
  switch (family) {
    case Family::gl:
    case Family::sl: return m1 + m2 + n1 + n2;
    case Family::ospB: return 2 * (m1 + m2 + n1 + n2) + 1;
    case Family::ospD: return 2 * (m1 + m2 + n1 + n2);
  }
  return 0;
}

void AlgebraSpec::validate() const {
  if (matrix_size() < 1) throw SpecError(to_string() + " has matrix size 0");
}

Signature AlgebraSpec::signature() const {
  validate();
  switch (family) {
    case Family::gl:
    case Family::sl: return signature_gl(m1, m2, n1, n2);
    case Family::ospB: return signature_osp(m1, m2, n1, n2);
    case Family::ospD: return signature_osp(m1, m2, n1, n2).without(2 * m() + 1);
  }
  return {};
}

std::string AlgebraSpec::to_string() const {
  std::ostringstream os;
  os << zzosp::to_string(family) << '(' << m1 << ',' << m2 << '|' << n1 << ',' << n2 << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Coordinates

SparseVector to_coordinates(const GradedMatrix& a) {
  return SparseVector(a.entries().begin(), a.entries().end());
}

GradedMatrix from_coordinates(const Signature& signature, const SparseVector& v) {
  GradedMatrix out(signature);
  const std::size_t m = signature.size();
  for (const auto& [k, x] : v) out.set(k / m + 1, k % m + 1, x);
  return out;
}

namespace {

void require_osp(const AlgebraSpec& spec, const char* what) {
  if (!spec.is_osp()) {
    throw UnsupportedFamily(std::string(what) + " is defined for ospB/ospD only, got " + spec.to_string());
  }
}

void require_signature(const AlgebraSpec& spec, const GradedMatrix& a) {
  if (a.signature() != spec.signature()) {
    throw SignatureMismatch("matrix signature does not match " + spec.to_string());
  }
}

std::string pair_label(char prefix, std::size_t i, std::size_t j) {
  return std::string(1, prefix) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// Defining data

GradedMatrix j_matrix(const AlgebraSpec& spec) {
  require_osp(spec, "J");
  const std::size_t m = spec.m();
  const std::size_t n = spec.n();
  const AlgebraSpec b{Family::ospB, spec.m1, spec.m2, spec.n1, spec.n2};
  GradedMatrix j(b.signature());
  for (std::size_t i = 1; i <= m; ++i) {
    j.set(i, m + i, 1);
    j.set(m + i, i, 1);
  }
  const std::size_t mid = 2 * m + 1;
  j.set(mid, mid, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    j.set(mid + i, mid + n + i, 1);
    j.set(mid + n + i, mid + i, -1);
  }
  if (spec.family == Family::ospB) return j;

  // ospD: drop the middle row and column.
  GradedMatrix out(spec.signature());
  for (const auto& [k, v] : j.entries()) {
    std::size_t r = j.row_of(k);
    std::size_t c = j.col_of(k);
    if (r == mid || c == mid) continue;
    out.set(r > mid ? r - 1 : r, c > mid ? c - 1 : c, v);
  }
  return out;
}

GradedMatrix u_matrix(const AlgebraSpec& spec) {
  require_osp(spec, "u");
  const Signature sig = spec.signature();
  GradedMatrix u(sig);
  for (std::size_t i = 1; i <= sig.size(); ++i) {
    for (std::size_t j = 1; j <= sig.size(); ++j) u.set(i, j, sign_of(dot(sig.at(i), sig.at(j))));
  }
  return u;
}

GradedMatrix membership_residual(const AlgebraSpec& spec, const GradedMatrix& a) {
  require_signature(spec, a);
  switch (spec.family) {
    case Family::gl: return GradedMatrix(a.signature());
    case Family::sl: {
      GradedMatrix out(a.signature());
      out.set(1, 1, supertrace(a));
      return out;
    }
    case Family::ospB:
    case Family::ospD: {
      const GradedMatrix j = j_matrix(spec);
      return graded_transpose(a) * j + j * a;
    }
  }
  return GradedMatrix(a.signature());
}

bool is_member(const AlgebraSpec& spec, const GradedMatrix& a) {
  return membership_residual(spec, a).is_zero();
}

GradedMatrix s_matrix(const AlgebraSpec& spec, std::size_t i, std::size_t j) {
  require_osp(spec, "s_ij");
  const GradedMatrix jm = j_matrix(spec);
  const Signature& sig = jm.signature();
  const std::size_t size = sig.size();
  GradedMatrix s(sig);
  const int u = sign_of(dot(sig.at(i), sig.at(j)));
  for (std::size_t k = 1; k <= size; ++k) {
    s.add_to(k, j, jm.get(i, k));
    s.add_to(k, i, Scalar(-u) * jm.get(j, k));
  }
  return s;
}

Basis s_generators(const AlgebraSpec& spec) {
  require_osp(spec, "s_ij");
  Basis out{spec, {}, {}};
  const std::size_t size = spec.matrix_size();
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j = 1; j <= size; ++j) {
      out.elements.push_back(s_matrix(spec, i, j));
      out.labels.push_back(pair_label('s', i, j));
    }
  }
  return out;
}

Basis s_basis(const AlgebraSpec& spec) {
  const Basis all = s_generators(spec);
  return reduce_span(spec, all.elements, all.labels);
}

Basis kernel_basis(const AlgebraSpec& spec) {
  if (spec.family == Family::gl) throw UnsupportedFamily("kernel_basis: gl has no defining condition");
  const Signature sig = spec.signature();
  const std::size_t size = sig.size();
  const std::size_t dim = size * size;

  std::vector<SparseVector> rows;
  if (spec.family == Family::sl) {
    SparseVector str;
    for (std::size_t i = 0; i < size; ++i) str.emplace(i * size + i, Scalar(is_even_class(sig[i]) ? 1 : -1));
    rows.push_back(std::move(str));
  } else {
    // Column (i,j) of the constraint matrix is the image of e_ij.
    std::map<std::size_t, SparseVector> by_output;
    for (std::size_t i = 1; i <= size; ++i) {
      for (std::size_t j = 1; j <= size; ++j) {
        const GradedMatrix image = membership_residual(spec, elem(sig, i, j));
        const std::size_t column = (i - 1) * size + (j - 1);
        for (const auto& [k, v] : image.entries()) by_output[k].emplace(column, v);
      }
    }
    for (auto& kv : by_output) rows.push_back(std::move(kv.second));
  }

  Basis out{spec, {}, {}};
  for (const SparseVector& v : null_space(rows, dim)) {
    const std::size_t pivot = v.begin()->first;
    out.elements.push_back(from_coordinates(sig, v));
    out.labels.push_back(pair_label('k', pivot / size + 1, pivot % size + 1));
  }
  return out;
}

Basis elementary_basis(const AlgebraSpec& spec) {
  const Signature sig = spec.signature();
  Basis out{spec, {}, {}};
  for (std::size_t i = 1; i <= sig.size(); ++i) {
    for (std::size_t j = 1; j <= sig.size(); ++j) {
      out.elements.push_back(elem(sig, i, j));
      out.labels.push_back(pair_label('e', i, j));
    }
  }
  return out;
}

std::size_t expected_dim(const AlgebraSpec& spec) {
  require_osp(spec, "expected_dim");
  const std::size_t m = spec.m();
  const std::size_t n = spec.n();
  if (spec.family == Family::ospB) return m * (2 * m + 1) + n * (2 * n + 1) + 2 * n * (2 * m + 1);
  // m(2m-1) written without unsigned underflow at m = 0.
  return (2 * m * m - m) + n * (2 * n + 1) + 4 * m * n;
}

// ---------------------------------------------------------------------------
// Echelon-based span utilities

namespace {

void require_common_signature(std::span<const GradedMatrix> matrices) {
  for (const auto& a : matrices) {
    if (a.signature() != matrices.front().signature()) {
      throw SignatureMismatch("rank: matrices carry different signatures");
    }
  }
}

}  // namespace

std::size_t rank_of(std::span<const GradedMatrix> matrices) {
  if (matrices.empty()) return 0;
  require_common_signature(matrices);
  Echelon e;
  for (const auto& a : matrices) e.insert(to_coordinates(a));
  return e.rank();
}

Basis reduce_span(const AlgebraSpec& spec, std::span<const GradedMatrix> matrices,
                  std::span<const std::string> labels) {
  Basis out{spec, {}, {}};
  if (matrices.empty()) return out;
  require_common_signature(matrices);
  Echelon e;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (e.insert(to_coordinates(matrices[i]))) {
      out.elements.push_back(matrices[i]);
      out.labels.push_back(i < labels.size() ? labels[i] : std::to_string(i + 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

/// Merges per-chunk reports in chunk order.
void absorb(CheckReport& into, CheckReport&& part, std::size_t max_counterexamples) {
  into.total += part.total;
  into.failed += part.failed;
  for (auto& cx : part.counterexamples) {
    if (into.counterexamples.size() >= max_counterexamples) break;
    into.counterexamples.push_back(std::move(cx));
  }
}

std::vector<Degree> basis_degrees(const Basis& basis) {
  std::vector<Degree> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto d = degree_of(basis.elements[i]);
    if (!d) throw std::invalid_argument("basis element " + basis.labels[i] + " is not homogeneous");
    out.push_back(*d);
  }
  return out;
}

CheckReport make_report(const std::string& name, const AlgebraSpec& spec, std::size_t declared) {
  CheckReport r;
  r.check = name;
  r.spec = spec;
  r.declared_total = declared;
  return r;
}

}  // namespace

CheckReport verify_membership(const Basis& basis, const std::string& check_name,
                              std::size_t max_counterexamples) {
  CheckReport r = make_report(check_name, basis.spec, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    GradedMatrix residual = membership_residual(basis.spec, basis.elements[i]);
    const bool ok = residual.is_zero();
    r.record(ok, max_counterexamples, {basis.labels[i], {long(i + 1)}, {}, std::move(residual)});
  }
  return r;
}

CheckReport verify_closure(const Basis& basis, std::size_t jobs, std::size_t max_counterexamples) {
  const std::size_t n = basis.size();
  CheckReport r = make_report("closure", basis.spec, n * n);
  auto rows = parallel_map<CheckReport>(n, jobs, [&](std::size_t x) {
    CheckReport part;
    for (std::size_t y = 0; y < n; ++y) {
      GradedMatrix residual =
          membership_residual(basis.spec, graded_bracket(basis.elements[x], basis.elements[y]));
      const bool ok = residual.is_zero();
      part.record(ok, max_counterexamples, {"", {long(x + 1), long(y + 1)}, {}, std::move(residual)});
    }
    return part;
  });
  for (auto& part : rows) absorb(r, std::move(part), max_counterexamples);
  return r;
}

CheckReport verify_grading(const Basis& basis, std::size_t max_counterexamples) {
  const std::size_t n = basis.size();
  const std::vector<Degree> deg = basis_degrees(basis);
  CheckReport r = make_report("grading", basis.spec, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      GradedMatrix b = graded_bracket(basis.elements[x], basis.elements[y]);
      const auto d = degree_of(b);
      const bool ok = b.is_zero() || (d && *d == deg[x] + deg[y]);
      r.record(ok, max_counterexamples, {"", {long(x + 1), long(y + 1)}, {}, std::move(b)});
    }
  }
  return r;
}

CheckReport verify_symmetry(const Basis& basis, std::size_t max_counterexamples) {
  const std::size_t n = basis.size();
  const std::vector<Degree> deg = basis_degrees(basis);
  CheckReport r = make_report("symmetry", basis.spec, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const GradedMatrix xy = graded_bracket(basis.elements[x], basis.elements[y]);
      const GradedMatrix yx = graded_bracket(basis.elements[y], basis.elements[x]);
      // [[x,y]] + (-1)^{a.b} [[y,x]] must vanish.
      GradedMatrix residual = dot(deg[x], deg[y]) ? xy - yx : xy + yx;
      const bool ok = residual.is_zero();
      r.record(ok, max_counterexamples, {"", {long(x + 1), long(y + 1)}, {}, std::move(residual)});
    }
  }
  return r;
}

CheckReport verify_jacobi(const Basis& basis, std::size_t jobs, std::size_t max_counterexamples) {
  const std::size_t n = basis.size();
  const std::vector<Degree> deg = basis_degrees(basis);
  CheckReport r = make_report("jacobi", basis.spec, n * n * n);

  // All pairwise brackets, computed once.
  auto pair_rows = parallel_map<std::vector<GradedMatrix>>(n, jobs, [&](std::size_t x) {
    std::vector<GradedMatrix> row;
    row.reserve(n);
    for (std::size_t y = 0; y < n; ++y) row.push_back(graded_bracket(basis.elements[x], basis.elements[y]));
    return row;
  });

  auto parts = parallel_map<CheckReport>(n, jobs, [&](std::size_t x) {
    CheckReport part;
    const GradedMatrix& a = basis.elements[x];
    for (std::size_t y = 0; y < n; ++y) {
      const GradedMatrix& b = basis.elements[y];
      for (std::size_t z = 0; z < n; ++z) {
        const GradedMatrix& c = basis.elements[z];
        GradedMatrix lhs = graded_bracket(a, pair_rows[y][z]);
        GradedMatrix first = graded_bracket(pair_rows[x][y], c);
        GradedMatrix second = graded_bracket(b, pair_rows[x][z]);
        GradedMatrix residual = dot(deg[x], deg[y]) ? lhs - first + second : lhs - first - second;
        const bool ok = residual.is_zero();
        part.record(ok, max_counterexamples,
                    {"", {long(x + 1), long(y + 1), long(z + 1)}, {}, std::move(residual)});
      }
    }
    return part;
  });
  for (auto& part : parts) absorb(r, std::move(part), max_counterexamples);
  return r;
}

CheckReport verify_span_equivalence(const AlgebraSpec& spec) {
  const Basis kernel = kernel_basis(spec);
  const Basis spanning = s_basis(spec);
  CheckReport r = make_report("span_equivalence", spec, kernel.size() + spanning.size() + 1);

  Echelon kernel_span;
  for (const auto& k : kernel.elements) kernel_span.insert(to_coordinates(k));
  Echelon s_span;
  for (const auto& s : spanning.elements) s_span.insert(to_coordinates(s));

  for (std::size_t i = 0; i < spanning.size(); ++i) {
    const bool ok = kernel_span.contains(to_coordinates(spanning.elements[i]));
    r.record(ok, kDefaultMaxCounterexamples, {"s in span(kernel) " + spanning.labels[i], {long(i + 1)}, {}, spanning.elements[i]});
  }
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const bool ok = s_span.contains(to_coordinates(kernel.elements[i]));
    r.record(ok, kDefaultMaxCounterexamples, {"kernel in span(s) " + kernel.labels[i], {long(i + 1)}, {}, kernel.elements[i]});
  }
  const bool ranks_equal = kernel.size() == spanning.size();
  r.record(ranks_equal, kDefaultMaxCounterexamples,
           {"rank", {long(kernel.size()), long(spanning.size())}, {}, GradedMatrix(spec.signature())});
  return r;
}

DimensionSummary dimension_summary(const AlgebraSpec& spec) {
  DimensionSummary d;
  d.kernel = kernel_basis(spec).size();
  d.s_rank = s_basis(spec).size();
  d.expected = expected_dim(spec);
  return d;
}

}  // namespace zzosp
