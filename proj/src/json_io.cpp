#include "nsring/json_io.hpp"

namespace nsring {

json to_json(const NumericalSemigroup& h) { return json(h.generators()); }

json to_json(const AperyTable& t) {
  json elements = json::array();
  for (auto [w, o] : t.sorted()) elements.push_back(json{{"element", w}, {"order", o}});
  return json{{"modulus", t.modulus}, {"elements", std::move(elements)}};
}

json to_json(const IndexReport& r) {
  json nv = json::object();
  for (const auto& [g, n] : r.n_values) nv[std::to_string(g)] = n;
  return json{{"generators", r.generators},
              {"n_values", std::move(nv)},
              {"index", r.index},
              {"mult", r.mult},
              {"edim", r.edim},
              {"codim", r.codim},
              {"ding_gap", r.ding_gap},
              {"gorenstein", r.gorenstein},
              {"method", r.method}};
}

json to_json(const CiEdim3Structure& s) {
  return json{{"roles", json{{"a", s.a}, {"b", s.b}, {"c", s.c}}},
              {"p", s.p},
              {"x", s.x},
              {"y", s.y},
              {"a_prime", s.a_prime},
              {"a_dprime", s.a_dprime}};
}

json to_json(const GluingStep& s) {
  return json{{"base", s.base_generators}, {"a", s.a}, {"p", s.p}};
}

json to_json(const FamilySpec& s) {
  json j{{"kind", s.kind == FamilyKind::watanabe_hna ? "watanabe-hna"
                                                     : "ding-gap-3gen"},
         {"n", s.n}};
  if (s.kind == FamilyKind::watanabe_hna) j["a"] = s.a;
  return j;
}

GluingStep gluing_step_from_json(const json& j) {
  GluingStep s;
  try {
    s.base_generators = j.at("base").get<std::vector<int64_t>>();
    s.a = j.at("a").get<int64_t>();
    s.p = j.at("p").get<int64_t>();
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, std::string("bad gluing step: ") + e.what());
  }
  return s;
}

FamilySpec family_spec_from_json(const json& j) {
  FamilySpec s;
  try {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "watanabe-hna") {
      s.kind = FamilyKind::watanabe_hna;
      s.a = j.at("a").get<int64_t>();
    } else if (kind == "ding-gap-3gen") {
      s.kind = FamilyKind::ding_gap_3gen;
    } else {
      fail(errc::invalid_argument, "unknown family kind '" + kind + "'");
    }
    s.n = j.at("n").get<int64_t>();
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, std::string("bad family spec: ") + e.what());
  }
  return s;
}

} // namespace nsring
