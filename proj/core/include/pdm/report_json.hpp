#pragma once

#include <nlohmann/json.hpp>

#include "pdm/eigensolver.hpp"
#include "pdm/verify.hpp"

namespace pdm {

// Non-finite doubles are written as the strings "inf", "-inf" and "nan".
nlohmann::json number_to_json(double v);
double number_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// values, bound flags and residuals; eigenvectors are written separately.
nlohmann::json to_json(const Spectrum& spectrum);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace pdm
