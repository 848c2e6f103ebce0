#pragma once

#include <string>

#include "json.hpp"

#include "pencilaid/aid.hpp"
#include "pencilaid/canonical.hpp"

namespace pencilaid {

using nlohmann::json;

Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

json pencil_to_json(const Pencil& p);
/// Accepts Pencil JSON {"n", "A", "B"}, {"pencil": Pencil JSON}, or
/// {"dim_x", "brackets"}; throws Error(Parse) or Error(InvalidInput).
Pencil pencil_from_json(const json& j);

json invariants_to_json(const PencilInvariants& inv);
PencilInvariants invariants_from_json(const json& j);

json spec_to_json(const CanonicalSpec& spec);
CanonicalSpec spec_from_json(const json& j);

json aid_result_to_json(const AidResult& r);
json formula_to_json(const FormulaDims& dims, FieldMode mode);

FieldMode field_mode_from_string(const std::string& s);

/// Parses text as JSON, mapping syntax errors to Error(Parse).
json parse_json(const std::string& text);

/// Stable rendering used for every output file: two-space indent, sorted keys.
std::string dump(const json& j);

}  // namespace pencilaid
