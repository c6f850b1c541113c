#pragma once

#include <string>

#include "mlradii/params.hpp"
#include "mlradii/radii.hpp"
#include "mlradii/region.hpp"
#include "mlradii/verify.hpp"
#include "mlradii/zeros.hpp"

namespace mlradii {

// JSON wire formats. Doubles are emitted shortest-round-trip, so parsing an
// emitted document reproduces the in-memory values exactly.

/// {"omega":..,"beta":..,"gamma":..,"target":..,"zeros":[..],"tol":..}
std::string to_json(const ZeroTable& table);
ZeroTable zero_table_from_json(const std::string& text);

/// {"problem":{..},"norm":..,"params":{..},"radius":..,"bracket":[lo,hi],
///  "residual":..,"iterations":..,"zeros_used":..,"verified":..}
std::string to_json(const RadiusResult& result);
RadiusResult radius_result_from_json(const std::string& text);

std::string to_json(const VerificationReport& report);
VerificationReport verification_report_from_json(const std::string& text);

/// {"status":..,"witness":{"wa_point":{..},"maps":[..]}}
std::string to_json(const WiVerdict& verdict);
WiVerdict wi_verdict_from_json(const std::string& text);

std::string to_json(const EvalResult& result);
EvalResult eval_result_from_json(const std::string& text);

// enum <-> string names used in the wire formats and the CLI
ProblemKind problem_kind_from_string(const std::string& s);
Normalization normalization_from_string(const std::string& s);
ZeroTarget zero_target_from_string(const std::string& s);

}  // namespace mlradii
