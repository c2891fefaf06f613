// JSON and human renderings of the pipeline reports. Both carry the same
// fields; JSON is the machine contract (fields are only ever added).
#pragma once

#include <string>

#include "irrep/pipeline.hpp"

namespace irrep {

std::string decision_json(const DecisionReport& r);
std::string decision_text(const DecisionReport& r);

std::string construct_json(const ConstructResult& r);
std::string construct_text(const ConstructResult& r);

std::string verification_json(const VerificationReport& r);
std::string verification_text(const VerificationReport& r);

}  // namespace irrep
