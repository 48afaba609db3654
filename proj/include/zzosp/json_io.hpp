#pragma once

#include <json.hpp>

#include "zzosp/algebras.hpp"
#include "zzosp/graded_matrix.hpp"
#include "zzosp/report.hpp"
#include "zzosp/scalar.hpp"

namespace zzosp {

using Json = nlohmann::ordered_json;

/// [p, q, r, s] meaning p/q + (r/s) sqrt2, lowest terms, q, s > 0. Integers
/// outside the 64-bit range are written as decimal strings.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json degree_to_json(Degree d);
Degree degree_from_json(const Json& j);

Json signature_to_json(const Signature& s);
Signature signature_from_json(const Json& j);

/// {"size", "signature", "entries": [[i, j, p, q, r, s], ...]}, 1-based and
/// sorted by (i, j), nonzero entries only.
Json matrix_to_json(const GradedMatrix& a);
GradedMatrix matrix_from_json(const Json& j);

Json spec_to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const Json& j);

Json basis_to_json(const Basis& basis);

Json report_to_json(const CheckReport& report);

}  // namespace zzosp
