#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace bosonorder {

using Json = nlohmann::ordered_json;

/// Outcome of one numerical or exact check. Field checks carry the
/// one-particle dimension and cutoff and serialize the observed value as
/// `max_residual`.
struct CheckReport {
  std::string check;
  Json params = Json::object();
  double observed = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::optional<int> d;
  std::optional<int> cutoff;
};

inline Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  if (r.d) {
    j["d"] = *r.d;
    j["cutoff"] = r.cutoff.value_or(0);
    j["params"] = r.params;
    j["max_residual"] = r.observed;
  } else {
    j["params"] = r.params;
    j["observed"] = r.observed;
  }
  j["bound"] = r.bound;
  j["pass"] = r.pass;
  return j;
}

/// Passes when observed ≤ bound.
inline CheckReport upper_bound_report(std::string check, double observed, double bound,
                                      Json params = Json::object()) {
  return {std::move(check), std::move(params), observed, bound, observed <= bound, std::nullopt, std::nullopt};
}

/// Passes when observed ≥ bound (smallest eigenvalues).
inline CheckReport lower_bound_report(std::string check, double observed, double bound,
                                      Json params = Json::object()) {
  return {std::move(check), std::move(params), observed, bound, observed >= bound, std::nullopt, std::nullopt};
}

}  // namespace bosonorder
