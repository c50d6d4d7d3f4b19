#pragma once

#include <string>

#include <json.hpp>

#include "cbi/model.hpp"
#include "cbi/semantics.hpp"

namespace cbi {

using json = nlohmann::json;

// Throws MalformedModel for anything that does not describe a carrier-bounded model.
ResourceModel model_from_json(const json& j);
BbiModel bbi_model_from_json(const json& j);
json to_json(const ResourceModel& m);
json to_json(const BbiModel& m);
json to_json(const ValidationReport& r);

// {"P": ["a","b"], ...}
Environment env_from_json(const BbiModel& m, const json& j);
json to_json(const BbiModel& m, const Environment& env);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace cbi
