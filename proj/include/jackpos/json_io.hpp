#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "jackpos/errors.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/ratfunc.hpp"

namespace jackpos {

using json = nlohmann::ordered_json;

inline json to_json(const MPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", c.get_str()}});
  return {{"vars", f.vars()}, {"terms", std::move(terms)}};
}

inline json to_json(const RatFunc& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline MPoly mpoly_from_json(const json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::pair<Exponent, Rational>> terms;
    for (const auto& t : j.at("terms"))
      terms.emplace_back(t.at("exp").get<Exponent>(),
                         rational_from_string(t.at("coef").get<std::string>()));
    return MPoly(std::move(vars), terms);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial json: ") + e.what());
  }
}

inline RatFunc ratfunc_from_json(const json& j) {
  if (!j.contains("num")) return RatFunc(mpoly_from_json(j));
  return RatFunc(mpoly_from_json(j.at("num")), mpoly_from_json(j.at("den")));
}

}  // namespace jackpos
