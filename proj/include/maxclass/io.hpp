#pragma once

// JSON forms of the library's result types.  Big integers are written as
// decimal strings so no precision is lost in transit.

#include <nlohmann/json.hpp>

#include "maxclass/counting.hpp"
#include "maxclass/standard_form.hpp"
#include "maxclass/zeta.hpp"

namespace maxclass {

inline nlohmann::json to_json(const StandardFormRep& rep) {
  const PrimePower& pp = rep.spec().prime_power();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= rep.n(); ++i) {
    const auto row = rep.row(i);
    rows.push_back(std::vector<Residue>(row.begin(), row.end()));
  }
  const auto e = rep.spec().exponents();
  return {{"n", rep.n()},
          {"p", pp.p()},
          {"N", pp.N()},
          {"dim", pp.dim()},
          {"lambda", std::vector<Residue>(e.begin(), e.end())},
          {"y_scalar", rep.y_scalar()},
          {"rows", rows}};
}

inline nlohmann::json to_json(const CountReport& report) {
  auto opt = [](const std::optional<BigInt>& v) -> nlohmann::json {
    return v ? nlohmann::json(v->str()) : nlohmann::json(nullptr);
  };
  nlohmann::json census = nlohmann::json::object();
  for (const auto& [size, count] : report.orbit_census) census[std::to_string(size)] = count.str();
  const auto agreed = report.agreed_value();
  return {{"n", report.n},
          {"p", report.p},
          {"N", report.N},
          {"r_enumerated", opt(report.r_enumerated)},
          {"r_closed_form", opt(report.r_closed_form)},
          {"r_series", opt(report.r_series)},
          {"orbit_census", census},
          {"census_matches_cases", report.census_matches_cases},
          {"agree", agreed.has_value()},
          {"r", opt(agreed)}};
}

}  // namespace maxclass
