#include "ks/json_io.hpp"

#include "ks/error.hpp"
#include "ks/parse.hpp"

namespace ks {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const PowerSeries& s) {
  Json a = Json::array();
  for (const Complex c : s.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const ClassMember& m) {
  Json j;
  j["phi"] = to_spec(m.phi);
  j["g"] = to_spec(m.g);
  j["w"] = to_spec(m.w);
  j["order"] = m.f.order();
  j["a2"] = to_json(m.a(2));
  j["a3"] = to_json(m.a(3));
  j["residuals"] = {{"a2", m.residuals.a2},
                    {"a3", m.residuals.a3},
                    {"defining", m.residuals.defining}};
  j["coefficients"] = to_json(m.f);
  return j;
}

Json to_json(const SubordinationVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["margin"] = v.margin;
  j["grid"] = {{"radii", v.radii}, {"angles", v.angles}};
  j["tail_estimate"] = v.tail_estimate;
  if (v.witness_z) {
    j["witness"] = {{"z", to_json(*v.witness_z)}, {"value", to_json(*v.witness_value)}};
  }
  return j;
}

Json to_json(const StankiewiczResult& r) {
  Json crit = Json::array();
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    Json c = to_json(r.criterion[k]);
    c["t"] = r.t[k];
    crit.push_back(std::move(c));
  }
  Json j;
  j["criterion"] = std::move(crit);
  j["conclusion"] = to_json(r.conclusion);
  j["consistent"] = r.consistent;
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError("expected a complex number as [re, im], a number, or a string");
}

}  // namespace ks
