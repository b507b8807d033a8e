#pragma once

#include <string>

#include <json.hpp>

#include "semigor/harness.hpp"

namespace semigor {

using Json = nlohmann::ordered_json;

// Ring-spec documents: either the full form
//   {"dim":2,"generators":[[1,0],...],"grading":[1,0],"label":...,
//    "canonical_generators":[[...]]}
// or the numerical shorthand {"numerical":[3,4,5],"label":...}.
// Unknown fields are rejected; parse errors carry line:column.
RingSpecData parse_ring_spec(const std::string& text);
RingSpecData ring_spec_from_json(const Json& j);
Json ring_spec_to_json(const RingSpecData& spec);

Json classification_to_json(const RingSpecData& spec, const ClassificationReport& report);
Json h_vector_to_json(const HVectorReport& report);

Json instance_to_json(const TheoremInstance& instance);
TheoremInstance instance_from_json(const Json& j);
TheoremInstance parse_instance(const std::string& text);

Json result_to_json(const TheoremInstanceResult& result);
Json campaign_config_to_json(const CampaignConfig& config);
Json campaign_report_to_json(const CampaignReport& report);

}  // namespace semigor
