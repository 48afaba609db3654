#include "zzosp/json_io.hpp"

#include <stdexcept>

namespace zzosp {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  const Rational& a = s.rational_part();
  const Rational& b = s.sqrt2_part();
  return Json::array({integer_to_json(a.get_num()), integer_to_json(a.get_den()), integer_to_json(b.get_num()),
                      integer_to_json(b.get_den())});
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("scalar must be [p, q, r, s]");
  const mpz_class q = integer_from_json(j[1]);
  const mpz_class s = integer_from_json(j[3]);
  if (sgn(q) <= 0 || sgn(s) <= 0) throw std::invalid_argument("scalar denominators must be positive");
  return Scalar(make_rational(integer_from_json(j[0]), q), make_rational(integer_from_json(j[2]), s));
}

Json degree_to_json(Degree d) { return Json::array({int(d.a1), int(d.a2)}); }

Degree degree_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("degree must be [a1, a2]");
  const int a1 = j[0].get<int>();
  const int a2 = j[1].get<int>();
  if ((a1 != 0 && a1 != 1) || (a2 != 0 && a2 != 1)) throw std::invalid_argument("degree bits must be 0 or 1");
  return Degree(a1, a2);
}

Json signature_to_json(const Signature& s) {
  Json out = Json::array();
  for (Degree d : s.degrees()) out.push_back(degree_to_json(d));
  return out;
}

Signature signature_from_json(const Json& j) {
  std::vector<Degree> d;
  for (const auto& item : j) d.push_back(degree_from_json(item));
  return Signature(std::move(d));
}

Json matrix_to_json(const GradedMatrix& a) {
  Json entries = Json::array();
  for (const auto& [k, v] : a.entries()) {
    Json row = Json::array({a.row_of(k), a.col_of(k)});
    for (auto& part : scalar_to_json(v)) row.push_back(part);
    entries.push_back(std::move(row));
  }
  Json out;
  out["size"] = a.size();
  out["signature"] = signature_to_json(a.signature());
  out["entries"] = std::move(entries);
  return out;
}

GradedMatrix matrix_from_json(const Json& j) {
  Signature sig = signature_from_json(j.at("signature"));
  if (j.at("size").get<std::size_t>() != sig.size()) throw std::invalid_argument("matrix size/signature mismatch");
  GradedMatrix out(std::move(sig));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 6) throw std::invalid_argument("matrix entry must be [i, j, p, q, r, s]");
    out.set(e[0].get<std::size_t>(), e[1].get<std::size_t>(), scalar_from_json(Json::array({e[2], e[3], e[4], e[5]})));
  }
  return out;
}

Json spec_to_json(const AlgebraSpec& spec) {
  Json out;
  out["family"] = to_string(spec.family);
  out["m1"] = spec.m1;
  out["m2"] = spec.m2;
  out["n1"] = spec.n1;
  out["n2"] = spec.n2;
  return out;
}

AlgebraSpec spec_from_json(const Json& j) {
  return AlgebraSpec{parse_family(j.at("family").get<std::string>()), j.at("m1").get<std::size_t>(),
                     j.at("m2").get<std::size_t>(), j.at("n1").get<std::size_t>(), j.at("n2").get<std::size_t>()};
}

Json basis_to_json(const Basis& basis) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Json e;
    e["label"] = basis.labels[i];
    e["matrix"] = matrix_to_json(basis.elements[i]);
    elements.push_back(std::move(e));
  }
  Json out;
  out["spec"] = spec_to_json(basis.spec);
  out["dimension"] = basis.size();
  out["elements"] = std::move(elements);
  return out;
}

Json report_to_json(const CheckReport& report) {
  Json out;
  out["check"] = report.check;
  out["spec"] = spec_to_json(report.spec);
  out["total"] = report.total;
  out["declared_total"] = report.declared_total;
  out["failed"] = report.failed;
  Json cxs = Json::array();
  for (const auto& cx : report.counterexamples) {
    Json c;
    if (!cx.clause.empty()) c["clause"] = cx.clause;
    c["indices"] = cx.indices;
    if (!cx.signs.empty()) c["signs"] = cx.signs;
    c["residual"] = matrix_to_json(cx.residual);
    cxs.push_back(std::move(c));
  }
  out["counterexamples"] = std::move(cxs);
  if (!report.details.empty()) {
    Json details = Json::array();
    for (const auto& d : report.details) {
      Json item;
      item["item"] = d.item;
      item["status"] = d.status;
      if (!d.note.empty()) item["note"] = d.note;
      details.push_back(std::move(item));
    }
    out["details"] = std::move(details);
  }
  return out;
}

}  // namespace zzosp
