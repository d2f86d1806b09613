#include "surfhh/io.hpp"

#include <fstream>
#include <sstream>

namespace surfhh {

namespace {

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) throw ParseError(ctx + ": missing string field '" + key + "'");
  return it->get<std::string>();
}

}  // namespace

TriangulationInput parse_triangulation(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("triangulation document must be a JSON object");
  TriangulationInput input;
  input.name = string_field(doc, "name", "document");
  auto tris = doc.find("triangles");
  if (tris == doc.end() || !tris->is_array()) throw ParseError("document: missing array 'triangles'");
  for (std::size_t t = 0; t < tris->size(); ++t) {
    const auto& tri = (*tris)[t];
    const std::string ctx = "triangle " + std::to_string(t);
    if (!tri.is_array() || tri.size() != 3) throw ParseError(ctx + ": expected exactly three sides");
    TriangleSides sides;
    for (int i = 0; i < 3; ++i) {
      const auto& side = tri[i];
      const std::string sctx = ctx + ", side " + std::to_string(i);
      if (!side.is_object()) throw ParseError(sctx + ": expected an object");
      sides[i].label = string_field(side, "label", sctx);
      sides[i].from = string_field(side, "from", sctx);
      sides[i].to = string_field(side, "to", sctx);
      const auto kind = string_field(side, "kind", sctx);
      if (kind == "arc")
        sides[i].kind = SideKind::Arc;
      else if (kind == "boundary")
        sides[i].kind = SideKind::Boundary;
      else
        throw ParseError(sctx + ": kind must be \"arc\" or \"boundary\", got \"" + kind + "\"");
    }
    input.triangles.push_back(std::move(sides));
  }
  return input;
}

TriangulationInput parse_triangulation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_triangulation(doc);
}

TriangulationInput load_triangulation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

nlohmann::json to_json(const TriangulationInput& input) {
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& tri : input.triangles) {
    nlohmann::json sides = nlohmann::json::array();
    for (const auto& s : tri)
      sides.push_back({{"label", s.label},
                       {"kind", s.kind == SideKind::Arc ? "arc" : "boundary"},
                       {"from", s.from},
                       {"to", s.to}});
    tris.push_back(std::move(sides));
  }
  return {{"name", input.name}, {"triangles", std::move(tris)}};
}

}  // namespace surfhh
