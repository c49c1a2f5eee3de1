#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tightpoly/classify.hpp"
#include "tightpoly/errors.hpp"
#include "tightpoly/polyhedron.hpp"
#include "tightpoly/presentation.hpp"

namespace tightpoly {

using Json = nlohmann::ordered_json;

enum class ExportFormat { json, dot };

inline ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::json;
  if (name == "dot") return ExportFormat::dot;
  throw UnsupportedFormat("unknown export format '" + std::string(name) + "' (expected json or dot)");
}

/// Identity of a group as it appears in reports.
struct RecordHeader {
  std::string family;
  SchlafliType type;
  Json parameters = Json::object();
  std::size_t order = 0;
  bool dual_form = false;
};

inline Json tag_parameters_json(const FamilyTag& tag) {
  return std::visit(
      [](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        Json j = Json::object();
        if constexpr (std::is_same_v<T, CoxeterTag>) {
          j["p"] = t.p;
          j["q"] = t.q;
        } else if constexpr (std::is_same_v<T, LambdaTag>) {
          j["i"] = t.i;
          j["j"] = t.j;
          j["k"] = residue(1 - t.i, t.p);
        } else if constexpr (std::is_same_v<T, DeltaTag>) {
          j["i"] = t.i;
          j["j"] = t.j;
          j["a"] = t.a;
          j["b"] = t.b;
        }
        return j;
      },
      tag);
}

inline RecordHeader header_of(const ClassRecord& r) {
  RecordHeader h;
  h.type = r.type;
  h.order = r.report.order;
  if (r.orientable_params) {
    h.family = "lambda";
    h.parameters = tag_parameters_json(r.orientable_params->tag());
  } else {
    const NonOrientableParams& n = *r.nonorientable_params;
    h.family = "delta";
    h.parameters = tag_parameters_json(n.delta);
    if (n.is_dual_form) h.parameters["delta_type"] = {n.delta.p, n.delta.q};
    h.dual_form = n.is_dual_form;
  }
  return h;
}

inline RecordHeader header_of(const Presentation& pres, const SggiReport& report) {
  RecordHeader h;
  h.family = pres.family();
  h.type = report.type;
  h.parameters = tag_parameters_json(pres.tag());
  h.order = report.order;
  return h;
}

/// The fixed-order summary object shared by every JSON and table output.
inline Json summary_json(const RecordHeader& h, const MapInvariants& inv) {
  Json j;
  j["family"] = h.family;
  j["type"] = {h.type.p, h.type.q};
  j["parameters"] = h.parameters;
  j["order"] = h.order;
  j["flags"] = h.order;
  j["orientable"] = inv.orientable;
  j["euler"] = inv.euler_characteristic;
  j["vertices"] = inv.vertex_count;
  j["edges"] = inv.edge_count;
  j["faces"] = inv.face_count;
  j["edge_multiplicity"] = inv.edge_multiplicity;
  j["dual_form"] = h.dual_form;
  return j;
}

inline std::string export_map(const MapStructure& map, const MapInvariants& inv, const RecordHeader& h,
                              ExportFormat format) {
  if (format == ExportFormat::json) {
    Json j = summary_json(h, inv);
    Json adjacency = Json::array();
    for (Element x = 0; x < map.flag_count(); ++x) {
      adjacency.push_back({map.adjacency[0][x], map.adjacency[1][x], map.adjacency[2][x]});
    }
    j["adjacency"] = std::move(adjacency);
    j["cells"] = {{"vertices", map.vertices}, {"edges", map.edges}, {"faces", map.faces}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "graph flags {\n";
  for (Element x = 0; x < map.flag_count(); ++x) out << "  " << x << ";\n";
  for (int r = 0; r < 3; ++r) {
    for (Element x = 0; x < map.flag_count(); ++x) {
      const Element y = map.adjacency[r][x];
      if (x < y) out << "  " << x << " -- " << y << " [rank=" << r << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tightpoly
