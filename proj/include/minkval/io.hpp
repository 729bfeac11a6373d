#pragma once

#include <string>

#include <json.hpp>

#include "minkval/polytope.hpp"

namespace minkval {

// {"n": 3, "vertices": [["1/2", "0", "1"], ...]}; numbers are accepted in
// place of strings when "mode" is "float" (converted exactly from the double).
// Other keys are ignored, so files written by write_polytope parse back.
// Throws ParseError, plus the hull errors (OriginNotContained, ...).
Polytope polytope_from_json(const nlohmann::json& j);
// Sorted vertices as rational strings.
nlohmann::json polytope_to_json(const Polytope& p);

// Throws ParseError for unreadable files or malformed JSON.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// "1,-2,1/3" -> Vector. Throws ParseError.
Vector parse_vector(const std::string& text);
nlohmann::json vector_to_json(const Vector& v);

}  // namespace minkval
