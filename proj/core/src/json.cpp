#include "qcov/json.hpp"

#include "qcov/format.hpp"

namespace qcov {

Json to_json(const Word& w) { return Json{{"apow", w.apow}, {"g", w.g}, {"gs", w.gs}}; }

Json to_json(const Scalar& c) {
  Json out = Json::array();
  for (const auto& [m, r] : c.terms()) {
    out.push_back({{"zexp", m.zexp},
                   {"texp", m.texp},
                   {"num", r.get_num().get_str()},
                   {"den", r.get_den().get_str()}});
  }
  return out;
}

Json to_json(const Element& x) {
  Json out{{"n", x.n()}};
  if (x.order() != x.n()) out["order"] = x.order();
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json t = to_json(w);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const TensorElement& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) {
    terms.push_back({{"words", {to_json(k[0]), to_json(k[1])}}, {"coeff", to_json(c)}});
  }
  return Json{{"legs", {x.legs()[0], x.legs()[1]}}, {"order", x.order()}, {"terms", std::move(terms)}};
}

Json to_json(const ModuleVector& v) {
  Json slots = Json::array();
  for (const auto& s : v.slots) slots.push_back(to_json(s));
  return Json{{"n", v.n}, {"slots", std::move(slots)}};
}

Json to_json(const CheckReport& r) {
  Json out{{"check", r.check}, {"status", r.status()}, {"residual_terms", r.residual_terms}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

Json to_json(const ObstructionReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back({{"name", s.name}, {"fired", s.fired}, {"detail", s.detail}});
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"grade", {m.grade.first, m.grade.second}},
                          {"expected", to_string(m.expected)},
                          {"actual", to_string(m.actual)}});
  }
  Json out{{"n", r.n},
           {"verdict", r.verdict_name()},
           {"steps", std::move(steps)},
           {"witness_grade", {r.witness_grade.first, r.witness_grade.second}},
           {"cross_term", to_string(r.cross_term_value)}};
  out["witness_coefficient"] =
      r.witness_coefficient ? Json(to_string(*r.witness_coefficient, {})) : Json(nullptr);
  out["mismatches"] = std::move(mismatches);
  return out;
}

Json to_json(const std::vector<NumericResidual>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"relation", r.relation},
                   {"max_residual", r.max_residual},
                   {"margin", r.margin},
                   {"pass", r.pass}});
  }
  return out;
}

Json to_json(const LemmaReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"f", c.f_index}, {"h", c.h}, {"one_leg", c.one_leg}, {"two_leg", c.two_leg}});
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"m", r.m},
              {"n", r.n},
              {"one_leg_equivariance", r.one_leg_all},
              {"two_leg_equivariance", r.two_leg_all},
              {"checks", std::move(checks)},
              {"cases", std::move(cases)}};
}

Scalar scalar_from_json(const Json& j, int order) {
  Scalar out(order);
  for (const auto& t : j) {
    Rational r(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    r.canonicalize();
    out += Scalar::monomial(order, r, t.at("zexp").get<int>(), t.at("texp").get<int>());
  }
  return out;
}

Element element_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int order = j.contains("order") ? j.at("order").get<int>() : n;
  Element out(n, order);
  for (const auto& t : j.at("terms")) {
    const Word w{t.at("apow").get<int>(), t.at("g").get<int>(), t.at("gs").get<int>()};
    out.add(w, scalar_from_json(t.at("coeff"), order));
  }
  return out;
}

}  // namespace qcov
