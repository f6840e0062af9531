#pragma once

// JSON instance and schedule files.
//
//   {"type":"min-age","t0":15,"pairs":[{"b0":3,"births":[6,7,8]}, ...],
//    "special":[1]}
//   {"type":"min-wcs","chains":[[6,2,15],[4,19]],"indicators":[1,1],
//    "constant":0}
//   {"times":[[16,19,20],[17,18]]}      age schedule
//   {"slots":[[1,4,5],[2,3]]}           job schedule
//
// "special", "indicators" and "constant" are optional and omitted from the
// canonical form when they hold their defaults. Indices are 0-based.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "aoi/model.hpp"

namespace aoi {

using Json = nlohmann::ordered_json;
using AnyInstance = std::variant<MinAgeInstance, WcsInstance>;

// Errors are Error{validation} naming the offending line or field.
AnyInstance parse_instance(std::string_view text);
AnyInstance instance_from_json(const Json& doc);

Json to_json(const MinAgeInstance& inst);
Json to_json(const WcsInstance& inst);
Json to_json(const AgeSchedule& s);
Json to_json(const JobSchedule& s);

// Compact canonical text followed by a newline.
std::string serialize_instance(const AnyInstance& inst);

AgeSchedule parse_age_schedule(std::string_view text);
JobSchedule parse_job_schedule(std::string_view text);

// Integers that fit in 64 bits become JSON numbers, larger ones decimal
// strings.
Json wide_to_json(Wide value);

Json parse_json(std::string_view text);

}  // namespace aoi
