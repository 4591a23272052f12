#pragma once

#include <json.hpp>
#include <string>

#include "largeness/config.hpp"
#include "largeness/field.hpp"
#include "largeness/floortype.hpp"
#include "largeness/search.hpp"
#include "largeness/units.hpp"

namespace largeness {

using json = nlohmann::json;

json element_to_json(const FieldElement& x);
FieldElement element_from_json(const json& j, int d);

/// Parses "1,-1,0" or a JSON array literal into an element of degree d.
FieldElement element_from_string(const std::string& s, int d);

/// Field file: { "poly": [c0..cd], "cm": bool, "precision_bits": int }.
json field_to_json(const NumberField& K);
NumberField field_from_json(const json& j, long default_precision_bits = 192,
                            long precision_override = 0);
NumberField load_field(const std::string& path, long default_precision_bits = 192,
                       long precision_override = 0);

/// Units file: { "torsion": {"gen": el, "order": n}, "free": [el, ...] }.
json units_to_json(const UnitGroup& U);
UnitGroup units_from_json(const json& j, const NumberField& K, const RunConfig& cfg = {});
UnitGroup load_units(const std::string& path, const NumberField& K, const RunConfig& cfg = {});

/// Type file: { "pi": el, "digits": [el...], "p": int, "g": int }.
SpecialType type_from_json(const json& j, const NumberField& K, const RunConfig& cfg = {});
SpecialType load_type(const std::string& path, const NumberField& K, const RunConfig& cfg = {});

json report_to_json(const LargenessReport& r);
LargenessReport report_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace largeness
