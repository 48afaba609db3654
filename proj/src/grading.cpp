#include "zzosp/grading.hpp"

#include <sstream>

namespace zzosp {

std::string Degree::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  return os << '(' << int(d.a1) << ',' << int(d.a2) << ')';
}

Degree Signature::at(std::size_t index) const {
  if (index < 1 || index > degrees_.size()) {
    throw std::out_of_range("signature index " + std::to_string(index) + " outside 1.." +
                            std::to_string(degrees_.size()));
  }
  return degrees_[index - 1];
}

Signature Signature::without(std::size_t index) const {
  at(index);
  std::vector<Degree> out = degrees_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index - 1));
  return Signature(std::move(out));
}

namespace {

void append(std::vector<Degree>& out, std::size_t count, Degree d) { out.insert(out.end(), count, d); }

}  // namespace

Signature signature_gl(std::size_t m1, std::size_t m2, std::size_t n1, std::size_t n2) {
  if (m1 + m2 + n1 + n2 == 0) throw SpecError("gl signature needs m1+m2+n1+n2 >= 1");
  std::vector<Degree> d;
  append(d, m1, kDeg00);
  append(d, m2, kDeg11);
  append(d, n1, kDeg10);
  append(d, n2, kDeg01);
  return Signature(std::move(d));
}

Signature signature_osp(std::size_t m1, std::size_t m2, std::size_t n1, std::size_t n2) {
  std::vector<Degree> d;
  for (int half = 0; half < 2; ++half) {
    append(d, m1, kDeg00);
    append(d, m2, kDeg11);
  }
  d.push_back(kDeg00);
  for (int half = 0; half < 2; ++half) {
    append(d, n1, kDeg10);
    append(d, n2, kDeg01);
  }
  return Signature(std::move(d));
}

}  // namespace zzosp
