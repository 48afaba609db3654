#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zzosp {

/// Element (a1, a2) of Z2 x Z2.
struct Degree {
  std::uint8_t a1 = 0;
  std::uint8_t a2 = 0;

  constexpr Degree() = default;
  constexpr Degree(int first, int second)
      : a1(static_cast<std::uint8_t>(first & 1)), a2(static_cast<std::uint8_t>(second & 1)) {}

  /// Dense code 0..3, used to index per-degree tables: 2*a1 + a2.
  constexpr std::size_t code() const { return 2u * a1 + a2; }
  static constexpr Degree from_code(std::size_t c) {
    return Degree(static_cast<int>(c >> 1), static_cast<int>(c & 1));
  }

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr Degree operator+(Degree a, Degree b) { return Degree(a.a1 ^ b.a1, a.a2 ^ b.a2); }

  std::string to_string() const;
};

inline constexpr Degree kDeg00{0, 0};
inline constexpr Degree kDeg11{1, 1};
inline constexpr Degree kDeg10{1, 0};
inline constexpr Degree kDeg01{0, 1};
inline constexpr std::array<Degree, 4> kAllDegrees{kDeg00, kDeg01, kDeg10, kDeg11};

constexpr Degree deg_add(Degree a, Degree b) { return a + b; }

/// Symmetric sign form a1*b1 + a2*b2 mod 2: the exponent in (-1)^{a.b}.
constexpr int dot(Degree a, Degree b) { return (a.a1 * b.a1 + a.a2 * b.a2) & 1; }

/// Alternating form a1*b2 - a2*b1 mod 2. Exposed as a sign function only.
constexpr int dot_alt(Degree a, Degree b) { return (a.a1 * b.a2 + a.a2 * b.a1) & 1; }

/// (-1)^e as an int.
constexpr int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

/// (0,0) and (1,1) count as the even class; (1,0) and (0,1) as the odd class.
constexpr bool is_even_class(Degree d) { return d.a1 == d.a2; }

std::ostream& operator<<(std::ostream& os, Degree d);

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One degree per row/column index of a square matrix.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {}

  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }

  /// 1-based index access, matching e_{ij} notation.
  Degree at(std::size_t index) const;
  Degree operator[](std::size_t zero_based) const { return degrees_[zero_based]; }

  const std::vector<Degree>& degrees() const { return degrees_; }

  /// Removes the given 1-based index.
  Signature without(std::size_t index) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Degree> degrees_;
};

/// Block order m1 x (0,0), m2 x (1,1), n1 x (1,0), n2 x (0,1).
Signature signature_gl(std::size_t m1, std::size_t m2, std::size_t n1, std::size_t n2);

/// Orthosymplectic index layout: blocks m1, m2, m1, m2, 1, n1, n2, n1, n2 with
/// degrees (0,0), (1,1), (0,0), (1,1), (0,0), (1,0), (0,1), (1,0), (0,1).
Signature signature_osp(std::size_t m1, std::size_t m2, std::size_t n1, std::size_t n2);

}  // namespace zzosp
