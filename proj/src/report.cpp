#include "zzosp/report.hpp"

namespace zzosp {

void CheckReport::record(bool ok, std::size_t max_counterexamples, Counterexample&& cx) {
  ++total;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < max_counterexamples) counterexamples.push_back(std::move(cx));
}

}  // namespace zzosp
