#pragma once

#include <string>

#include <json.hpp>

#include "qlf/complex.hpp"
#include "qlf/real.hpp"

namespace qlf {

std::string version();

/// One CLI invocation. Object keys serialize sorted, so equal inputs give
/// equal bytes apart from wall_time_ms.
struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::string backend = "complex";
  long precision_bits = 256;
  double wall_time_ms = 0;
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json residuals = nlohmann::json::object();
  nlohmann::json truncation = nlohmann::json::object();
  std::string status = "ok";  // "ok" or "failed"

  [[nodiscard]] nlohmann::json to_json() const;
  [[nodiscard]] std::string dump() const;
};

/// Decimal digits carried by `bits` binary digits.
int decimal_digits(long bits);

nlohmann::json to_json(const Real& x, int digits);
nlohmann::json to_json(const HPComplex& z, int digits);
/// {"value": decimal string, "log2": log2|x| or null for zero}.
nlohmann::json residual_json(const Real& x);
nlohmann::json to_json(const BigRational& q);

}  // namespace qlf
