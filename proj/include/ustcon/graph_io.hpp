#pragma once

#include <string>

#include "ustcon/multigraph.hpp"
#include "ustcon/rotation_map.hpp"

namespace ustcon {

// Edge-list text: first line "N M", then M lines "u v" with 0-based endpoints.
// Errors name the offending line.
MultiGraph parse_edge_list(const std::string& text);
std::string write_edge_list(const MultiGraph& g);

// Rotation-map text: first line "N D", then N*D lines "v i w j" in
// lexicographic (v, i) order. write(read(text)) == text for valid input.
// Reading validates the table and throws ParseError on any violation.
RotationMap parse_rotation_map(const std::string& text);
std::string write_rotation_map(const RotationMap& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ustcon
