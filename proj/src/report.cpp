#include "qlf/report.hpp"

#include <cmath>

namespace qlf {

std::string version() { return QLF_VERSION; }

nlohmann::json RunReport::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  j["command"] = command;
  j["parameters"] = parameters;
  j["backend"] = backend;
  j["precision_bits"] = precision_bits;
  j["wall_time_ms"] = wall_time_ms;
  j["results"] = results;
  j["residuals"] = residuals;
  j["truncation"] = truncation;
  j["version"] = version();
  j["status"] = status;
  return j;
}

std::string RunReport::dump() const { return to_json().dump(2) + "\n"; }

int decimal_digits(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)); }

nlohmann::json to_json(const Real& x, int digits) { return x.to_string(digits); }

nlohmann::json to_json(const HPComplex& z, int digits) {
  return {{"re", z.real().to_string(digits)}, {"im", z.imag().to_string(digits)}};
}

nlohmann::json residual_json(const Real& x) {
  nlohmann::json j = {{"value", x.to_string(12)}};
  const double l = x.log2_abs();
  if (std::isfinite(l)) {
    j["log2"] = std::round(l * 100.0) / 100.0;
  } else {
    j["log2"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const BigRational& q) { return q.get_str(); }

}  // namespace qlf
