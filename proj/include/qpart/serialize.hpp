#pragma once

// JSON forms of elements, grids and search reports. Integers are JSON numbers
// when they fit in 64 bits and decimal strings otherwise; both are accepted on
// input. Elements carry their (1, ω) coordinates plus a rendered form.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpart/partition.hpp"
#include "qpart/render.hpp"
#include "qpart/search.hpp"

namespace qpart {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return make_int(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

inline json element_to_json(const QElement& e, const FieldId& f) {
  return json{{"a", integer_to_json(e.a)}, {"b", integer_to_json(e.b)}, {"text", render(e, f)}};
}

inline QElement element_from_json(const json& j) { return {integer_from_json(j.at("a")), integer_from_json(j.at("b"))}; }

inline json grid_to_json(const PartitionGrid& g) {
  json cols = json::array();
  for (std::int64_t x = 0; x <= g.max_x(); ++x) {
    json values = json::array();
    for (const Integer& v : g.column(x)) values.push_back(integer_to_json(v));
    cols.push_back(json{{"x", x}, {"y_lo", g.window(x).lo}, {"values", std::move(values)}});
  }
  return json{{"kind", "grid"}, {"D", g.field().D()}, {"max_x", g.max_x()}, {"columns", std::move(cols)}};
}

inline PartitionGrid grid_from_json(const json& j) {
  const FieldId f(j.at("D").get<std::int64_t>());
  std::vector<std::vector<Integer>> columns;
  for (const json& c : j.at("columns")) {
    if (c.at("x").get<std::int64_t>() != static_cast<std::int64_t>(columns.size()))
      throw InvalidArgument("grid columns must be consecutive from x = 0");
    std::vector<Integer> values;
    for (const json& v : c.at("values")) values.push_back(integer_from_json(v));
    columns.push_back(std::move(values));
  }
  PartitionGrid g = PartitionGrid::from_columns(build_context(f), std::move(columns));
  for (const json& c : j.at("columns")) {
    const std::int64_t x = c.at("x").get<std::int64_t>();
    if (x > 0 && c.at("y_lo").get<std::int64_t>() != g.window(x).lo)
      throw InvalidArgument("grid column " + std::to_string(x) + " has the wrong y offset");
  }
  return g;
}

inline json report_to_json(const SearchReport& r) {
  json slice = json::array();
  for (const auto& row : r.slice) {
    json jr = json::array();
    for (const Integer& v : row) jr.push_back(integer_to_json(v));
    slice.push_back(std::move(jr));
  }
  json reps = json::object();
  for (const auto& [m, list] : r.representatives) {
    json jl = json::array();
    for (const QElement& e : list) jl.push_back(element_to_json(e, r.field));
    reps[std::to_string(m)] = std::move(jl);
  }
  return json{{"kind", "search"},   {"D", r.field.D()},       {"m_max", r.m_max}, {"k_max", r.k_max},
              {"y_max", r.y_max},   {"slice", std::move(slice)}, {"representatives", std::move(reps)}};
}

inline SearchReport report_from_json(const json& j) {
  SearchReport r{FieldId(j.at("D").get<std::int64_t>()), j.at("m_max").get<std::int64_t>(),
                 j.at("k_max").get<std::int64_t>(), j.at("y_max").get<std::int64_t>(), {}, {}};
  for (const json& row : j.at("slice")) {
    std::vector<Integer> vals;
    for (const json& v : row) vals.push_back(integer_from_json(v));
    r.slice.push_back(std::move(vals));
  }
  for (const auto& [m, list] : j.at("representatives").items()) {
    auto& out = r.representatives[std::stoll(m)];
    for (const json& e : list) out.push_back(element_from_json(e));
  }
  return r;
}

}  // namespace qpart
