#pragma once

#include <json.hpp>

#include "strata/chains.hpp"
#include "strata/dims.hpp"
#include "strata/simpson3.hpp"
#include "strata/types.hpp"
#include "strata/vhs.hpp"

// JSON schemas shared by the library, the CLI and the test suites.
// Types serialize as {"ranks":[...],"degrees":[...]}, genus as integer "g",
// rationals as strings "p/q" ("p" when integral), graded types as [[r,d],...].

namespace strata {

void to_json(nlohmann::json& j, const ChainType& ct);
void from_json(const nlohmann::json& j, ChainType& ct);

void to_json(nlohmann::json& j, const VHSType& v);
void from_json(const nlohmann::json& j, VHSType& v);

void to_json(nlohmann::json& j, const Rational& q);

}  // namespace strata

namespace strata::chains {

void to_json(nlohmann::json& j, const ChainViolation& v);
void to_json(nlohmann::json& j, const ChainCheckReport& r);

}  // namespace strata::chains

namespace strata::vhs {

void to_json(nlohmann::json& j, const AdmissibilityViolation& v);
void to_json(nlohmann::json& j, const AdmissibilityReport& r);

}  // namespace strata::vhs

namespace strata::dims {

void to_json(nlohmann::json& j, const DimReport& r);
void to_json(nlohmann::json& j, const ModuliDims& m);
void to_json(nlohmann::json& j, const ExtremalReport& r);

}  // namespace strata::dims

namespace strata::simpson3 {

void to_json(nlohmann::json& j, const SimpsonOutcome& o);
void to_json(nlohmann::json& j, const GradedType& g);
void from_json(const nlohmann::json& j, GradedType& g);

}  // namespace strata::simpson3
