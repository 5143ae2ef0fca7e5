#ifndef PARWB_JSON_IO_HPP_
#define PARWB_JSON_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "parwb/criteria.hpp"
#include "parwb/falgebra.hpp"
#include "parwb/partial_action.hpp"

namespace parwb {

using nlohmann::json;

// Parse errors and missing/mistyped fields raise InputError naming the JSON
// path at fault, e.g. "$.maps.g.(0,2)".

json load_json_file(const std::filesystem::path& path);

json semigroup_to_json(const FiniteSemigroup& s);
json monoid_to_json(const FiniteMonoid& m);
json group_to_json(const FiniteGroup& g);

FiniteSemigroup semigroup_from_json(const json& j, const std::string& path = "$");
FiniteMonoid monoid_from_json(const json& j, const std::string& path = "$");
FiniteGroup group_from_json(const json& j, const std::string& path = "$");

json action_to_json(const PartialAction& a);
// A "monoid" or "carrier" value may be a JSON object or a string, read as a
// path to another JSON file relative to base_dir.
PartialAction action_from_json(const json& j,
                               const std::filesystem::path& base_dir = ".",
                               const std::string& path = "$");
PartialAction load_action_file(const std::filesystem::path& file);

json linear_pa01_to_json(const LinearPA01& pa);
LinearPA01 linear_pa01_from_json(const json& j, const std::string& path = "$");
LinearPA01 load_algebra_action_file(const std::filesystem::path& file);

json criteria_report_to_json(const CriteriaReport& report);
CriteriaReport criteria_report_from_json(const json& j);

}  // namespace parwb

#endif  // PARWB_JSON_IO_HPP_
