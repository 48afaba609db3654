#pragma once

#include <cstddef>
#include <string>

#include "zzosp/grading.hpp"

namespace zzosp {

enum class Family { gl, sl, ospB, ospD };

std::string to_string(Family f);
/// Parses "gl", "sl", "ospB", "ospD". Throws SpecError.
Family parse_family(const std::string& name);

/// Which algebra: gl/sl(m1,m2|n1,n2), osp(2m1+1,2m2|2n1,2n2) (ospB) or
/// osp(2m1,2m2|2n1,2n2) (ospD).
struct AlgebraSpec {
  Family family = Family::gl;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  std::size_t m() const { return m1 + m2; }
  std::size_t n() const { return n1 + n2; }

  bool is_osp() const { return family == Family::ospB || family == Family::ospD; }

  /// Matrix size M.
  std::size_t matrix_size() const;

  /// Throws SpecError when M < 1.
  void validate() const;

  Signature signature() const;

  std::string to_string() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

}  // namespace zzosp
