#pragma once

// Triangulation file format: a UTF-8 JSON document
//
//   {"name": "...", "triangles": [[side, side, side], ...]}
//   side = {"label": "...", "kind": "arc" | "boundary", "from": "...", "to": "..."}
//
// with the sides of each triangle listed counter-clockwise. Other top-level
// keys are ignored on input.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "surfhh/surface.hpp"

namespace surfhh {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TriangulationInput parse_triangulation(const nlohmann::json& doc);
TriangulationInput parse_triangulation(const std::string& text);
TriangulationInput load_triangulation(const std::filesystem::path& file);

nlohmann::json to_json(const TriangulationInput& input);

}  // namespace surfhh
