#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "hfq/covering.hpp"
#include "hfq/diagram.hpp"
#include "hfq/grading.hpp"
#include "hfq/validate.hpp"

namespace hfq {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "hfq-1";

namespace detail {

inline std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void parse_fail(const std::string& what) {
  throw Error(Errc::parse_error, what);
}

inline int get_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    parse_fail(where + ": missing integer field '" + key + "'");
  return j[key].get<int>();
}

}  // namespace detail

// Diagram file schema:
// {"genus": int, "basepoints": [region_id,...],
//  "curves": {"alpha": [[{"id":int,"from":int,"to":int},...],...], "beta": [...]},
//  "vertices": [{"alpha": curve_idx, "beta": curve_idx},...],
//  "regions": [{"euler_char": int, "boundary": [[[arc_id,"+"|"-"],...],...]},...]}
inline Diagram diagram_from_json(const json& j) {
  using detail::parse_fail;
  if (!j.is_object()) parse_fail("diagram: top level must be an object");
  for (const char* key : {"genus", "basepoints", "curves", "vertices", "regions"})
    if (!j.contains(key)) parse_fail(std::string("diagram: missing field '") + key + "'");
  if (!j["genus"].is_number_integer()) parse_fail("diagram: 'genus' must be an integer");
  int genus = j["genus"].get<int>();

  if (!j["vertices"].is_array()) parse_fail("diagram: 'vertices' must be an array");
  std::vector<Vertex> vertices;
  for (size_t i = 0; i < j["vertices"].size(); ++i) {
    const json& v = j["vertices"][i];
    const std::string where = "vertex " + std::to_string(i);
    if (!v.is_object()) parse_fail(where + ": must be an object");
    vertices.push_back({detail::get_int(v, "alpha", where), detail::get_int(v, "beta", where)});
  }

  if (!j["curves"].is_object()) parse_fail("diagram: 'curves' must be an object");
  // First pass counts arcs so ids can be required dense.
  size_t arc_total = 0;
  for (const char* fam : {"alpha", "beta"}) {
    if (!j["curves"].contains(fam) || !j["curves"][fam].is_array())
      parse_fail(std::string("curves: missing array '") + fam + "'");
    for (const json& curve : j["curves"][fam]) {
      if (!curve.is_array()) parse_fail("curves: each curve must be an array of arcs");
      arc_total += curve.size();
    }
  }
  std::vector<Arc> arcs(arc_total);
  std::vector<bool> arc_seen(arc_total, false);
  std::vector<std::vector<int>> alpha_curves, beta_curves;
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta}) {
    const json& fam = j["curves"][family_name(f)];
    auto& out = f == CurveFamily::alpha ? alpha_curves : beta_curves;
    for (size_t c = 0; c < fam.size(); ++c) {
      std::vector<int> seq;
      for (const json& a : fam[c]) {
        const std::string where =
            std::string(family_name(f)) + " curve " + std::to_string(c) + " arc";
        if (!a.is_object()) parse_fail(where + ": must be an object");
        int id = detail::get_int(a, "id", where);
        if (id < 0 || id >= static_cast<int>(arc_total))
          parse_fail(where + ": id " + std::to_string(id) + " not in [0," +
                     std::to_string(arc_total) + ")");
        if (arc_seen[id]) parse_fail(where + ": id " + std::to_string(id) + " repeated");
        arc_seen[id] = true;
        arcs[id] = {detail::get_int(a, "from", where), detail::get_int(a, "to", where), f,
                    static_cast<int>(c)};
        seq.push_back(id);
      }
      out.push_back(std::move(seq));
    }
  }

  if (!j["regions"].is_array()) parse_fail("diagram: 'regions' must be an array");
  std::vector<Region> regions;
  for (size_t r = 0; r < j["regions"].size(); ++r) {
    const json& jr = j["regions"][r];
    const std::string where = "region " + std::to_string(r);
    if (!jr.is_object()) parse_fail(where + ": must be an object");
    Region reg;
    reg.euler_char = detail::get_int(jr, "euler_char", where);
    if (!jr.contains("boundary") || !jr["boundary"].is_array())
      parse_fail(where + ": missing array 'boundary'");
    for (const json& jw : jr["boundary"]) {
      if (!jw.is_array()) parse_fail(where + ": each boundary word must be an array");
      BoundaryWord word;
      for (const json& js : jw) {
        if (!js.is_array() || js.size() != 2 || !js[0].is_number_integer() ||
            !js[1].is_string())
          parse_fail(where + ": boundary steps must be [arc_id, \"+\"|\"-\"]");
        std::string dir = js[1].get<std::string>();
        if (dir != "+" && dir != "-")
          parse_fail(where + ": direction must be \"+\" or \"-\", got \"" + dir + "\"");
        word.push_back({js[0].get<int>(), dir == "+"});
      }
      reg.boundary.push_back(std::move(word));
    }
    regions.push_back(std::move(reg));
  }

  if (!j["basepoints"].is_array()) parse_fail("diagram: 'basepoints' must be an array");
  std::vector<int> basepoints;
  for (const json& b : j["basepoints"]) {
    if (!b.is_number_integer()) parse_fail("basepoints: entries must be region ids");
    basepoints.push_back(b.get<int>());
  }

  return Diagram(genus, std::move(vertices), std::move(arcs), std::move(alpha_curves),
                 std::move(beta_curves), std::move(regions), std::move(basepoints));
}

inline Diagram diagram_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(Errc::parse_error, "invalid JSON at line " + std::to_string(line) + " column " +
                                       std::to_string(col));
  }
  return diagram_from_json(j);
}

inline json diagram_to_json(const Diagram& d) {
  json j;
  j["genus"] = d.genus();
  j["basepoints"] = d.basepoint_regions();
  json curves;
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta}) {
    json fam = json::array();
    for (const std::vector<int>& seq : d.curves(f)) {
      json curve = json::array();
      for (int e : seq)
        curve.push_back({{"id", e}, {"from", d.arcs()[e].from}, {"to", d.arcs()[e].to}});
      fam.push_back(std::move(curve));
    }
    curves[family_name(f)] = std::move(fam);
  }
  j["curves"] = std::move(curves);
  json verts = json::array();
  for (const Vertex& v : d.vertices())
    verts.push_back({{"alpha", v.alpha_curve}, {"beta", v.beta_curve}});
  j["vertices"] = std::move(verts);
  json regions = json::array();
  for (const Region& r : d.regions()) {
    json words = json::array();
    for (const BoundaryWord& w : r.boundary) {
      json word = json::array();
      for (const BoundaryStep& s : w) word.push_back({s.arc, s.forward ? "+" : "-"});
      words.push_back(std::move(word));
    }
    regions.push_back({{"euler_char", r.euler_char}, {"boundary", std::move(words)}});
  }
  j["regions"] = std::move(regions);
  return j;
}

// Covering spec schema: {"n": int, "cocycle": {"<arc_id>": value, ...}};
// omitted arcs default to 0, values are reduced mod n.
inline CoveringSpec covering_spec_from_json(const json& j, const Diagram& d) {
  using detail::parse_fail;
  if (!j.is_object()) parse_fail("cover spec: top level must be an object");
  CoveringSpec spec;
  spec.n = detail::get_int(j, "n", "cover spec");
  if (spec.n < 1) parse_fail("cover spec: 'n' must be >= 1");
  spec.cocycle.assign(d.num_arcs(), 0);
  if (!j.contains("cocycle")) return spec;
  if (!j["cocycle"].is_object()) parse_fail("cover spec: 'cocycle' must be an object");
  for (const auto& [key, value] : j["cocycle"].items()) {
    int arc = -1;
    try {
      size_t used = 0;
      arc = std::stoi(key, &used);
      if (used != key.size()) arc = -1;
    } catch (...) {
      arc = -1;
    }
    if (arc < 0 || arc >= d.num_arcs())
      parse_fail("cover spec: cocycle key '" + key + "' is not an arc id");
    if (!value.is_number_integer())
      parse_fail("cover spec: cocycle values must be integers");
    long long v = value.get<long long>();
    spec.cocycle[arc] = static_cast<int>(((v % spec.n) + spec.n) % spec.n);
  }
  return spec;
}

inline CoveringSpec covering_spec_from_text(const std::string& text, const Diagram& d) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(Errc::parse_error, "invalid JSON at line " + std::to_string(line) + " column " +
                                       std::to_string(col));
  }
  return covering_spec_from_json(j, d);
}

inline json covering_spec_to_json(const CoveringSpec& spec) {
  json j;
  j["n"] = spec.n;
  json cocycle = json::object();
  for (size_t e = 0; e < spec.cocycle.size(); ++e)
    if (spec.cocycle[e] != 0) cocycle[std::to_string(e)] = spec.cocycle[e];
  j["cocycle"] = std::move(cocycle);
  return j;
}

inline json validation_report_to_json(const ValidationReport& rep) {
  json j;
  j["schema"] = kSchemaTag;
  j["valid"] = rep.ok();
  json violations = json::array();
  for (const Violation& v : rep.violations)
    violations.push_back({{"code", v.code}, {"location", v.location}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  return j;
}

inline json grading_table_to_json(const GradingTable& t) {
  json j;
  j["schema"] = kSchemaTag;
  const auto& part = t.partition;
  j["generators"] = part.generators;
  json classes = json::array();
  for (size_t c = 0; c < part.classes.size(); ++c)
    classes.push_back({{"members", part.classes[c]}, {"torsion", bool(part.class_torsion[c])}});
  j["classes"] = std::move(classes);
  json orders = json::array();
  for (const auto& row : part.class_pair_order) {
    json jrow = json::array();
    for (const auto& n : row) jrow.push_back(n ? json(to_string(*n)) : json(nullptr));
    orders.push_back(std::move(jrow));
  }
  j["class_torsion_orders"] = std::move(orders);
  json gr = json::array();
  for (const auto& z : t.z_grading) gr.push_back(z ? json(to_string(*z)) : json(nullptr));
  j["gr"] = std::move(gr);
  json table = json::array();
  for (int a = 0; a < t.num_generators(); ++a) {
    json row = json::array();
    for (int b = 0; b < t.num_generators(); ++b) {
      auto v = t.q_grading(a, b);
      row.push_back(v ? json(to_string(*v)) : json(nullptr));
    }
    table.push_back(std::move(row));
  }
  j["Gr"] = std::move(table);
  return j;
}

}  // namespace hfq
