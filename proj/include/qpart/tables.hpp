#pragma once

// Tabular views of the grid and the regression check of stored tables
// against freshly computed values.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qpart/contfrac.hpp"
#include "qpart/partition.hpp"
#include "qpart/render.hpp"
#include "qpart/search.hpp"
#include "qpart/serialize.hpp"

namespace qpart {

using Matrix = std::vector<std::vector<Integer>>;

/// rows[y][x] = p_K(x + y·ω) for 0 ≤ y ≤ max_y, 0 ≤ x ≤ max_x; 0 where the
/// element is not totally positive.
inline Matrix xy_matrix(PartitionGrid& grid, std::int64_t max_x, std::int64_t max_y, std::int64_t min_y = 0) {
  grid.extend(max_x);
  Matrix rows;
  for (std::int64_t y = min_y; y <= max_y; ++y) {
    std::vector<Integer> row;
    for (std::int64_t x = 0; x <= max_x; ++x) {
      const Integer* p = grid.find(x, y);
      row.push_back(p ? *p : Integer(0));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// rows[y][k] = p_K((⌈yξ⌉ + k) + y·ω).
inline Matrix ky_matrix(PartitionGrid& grid, std::int64_t k_max, std::int64_t y_max) {
  const FieldId& f = grid.field();
  grid.extend(to_i64(ceil_xi_mult(make_int(y_max), f)) + k_max);
  Matrix rows;
  for (std::int64_t y = 0; y <= y_max; ++y) {
    std::vector<Integer> row;
    for (std::int64_t k = 0; k <= k_max; ++k) row.push_back(grid.at(ky_element(make_int(k), make_int(y), f)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct VerifyResult {
  std::size_t fixtures = 0;
  std::size_t cells = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline std::string cell_diff(std::int64_t D, const char* a, std::int64_t av, const char* b, std::int64_t bv,
                             const std::string& expected, const std::string& got) {
  return "(D=" + std::to_string(D) + ", " + a + "=" + std::to_string(av) + ", " + b + "=" + std::to_string(bv) +
         ", expected=" + expected + ", got=" + got + ")";
}

inline void verify_xy(const json& fx, VerifyResult& res) {
  const std::int64_t D = fx.at("D").get<std::int64_t>();
  PartitionGrid grid(build_context(FieldId(D)));
  const json& rows = fx.at("rows");
  const Matrix m = xy_matrix(grid, fx.at("max_x").get<std::int64_t>(), fx.at("max_y").get<std::int64_t>());
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      ++res.cells;
      const Integer want = integer_from_json(rows[y][x]);
      if (m.at(y).at(x) != want)
        res.mismatches.push_back(cell_diff(D, "y", std::int64_t(y), "x", std::int64_t(x), want.get_str(), m[y][x].get_str()));
    }
  }
}

inline void verify_ky(const json& fx, VerifyResult& res) {
  const std::int64_t D = fx.at("D").get<std::int64_t>();
  PartitionGrid grid(build_context(FieldId(D)));
  const json& rows = fx.at("rows");
  const Matrix m = ky_matrix(grid, fx.at("k_max").get<std::int64_t>(), fx.at("y_max").get<std::int64_t>());
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (std::size_t k = 0; k < rows[y].size(); ++k) {
      ++res.cells;
      const Integer want = integer_from_json(rows[y][k]);
      if (m.at(y).at(k) != want)
        res.mismatches.push_back(cell_diff(D, "y", std::int64_t(y), "k", std::int64_t(k), want.get_str(), m[y][k].get_str()));
    }
  }
}

inline void verify_units(const json& fx, VerifyResult& res) {
  for (const json& row : fx.at("rows")) {
    const std::int64_t D = row.at("D").get<std::int64_t>();
    const FieldId f(D);
    PartitionGrid grid(build_context(f));
    const FieldContext& ctx = grid.context();
    const std::int64_t y_max = row.at("y_max").get<std::int64_t>();
    auto check = [&](const char* what, const std::string& want, const std::string& got) {
      ++res.cells;
      if (want != got) res.mismatches.push_back("(D=" + std::to_string(D) + ", " + what + ", expected=" + want + ", got=" + got + ")");
    };
    const QElement eps = element_from_json(row.at("eps_plus"));
    check("eps_plus", render(eps, f), render(ctx.eps_plus, f));
    if (row.at("eps_plus").contains("tex")) check("eps_plus tex", row.at("eps_plus").at("tex").get<std::string>(), render(ctx.eps_plus, f, SurdStyle::tex));
    check("floor_ratio", integer_from_json(row.at("floor_ratio")).get_str(), floor_ratio_eps(ctx).get_str());
    check("corner", integer_from_json(row.at("corner")).get_str(), grid.value(ky_element(0, make_int(y_max), f)).get_str());
  }
}

inline void verify_reps(const json& fx, VerifyResult& res) {
  const std::int64_t m_max = fx.at("m_max").get<std::int64_t>();
  for (const json& field : fx.at("fields")) {
    const std::int64_t D = field.at("D").get<std::int64_t>();
    const FieldId f(D);
    const SearchReport rep = search_m(f, m_max);
    for (const auto& [mkey, list] : field.at("rows").items()) {
      const std::int64_t m = std::stoll(mkey);
      std::set<std::string> want, got;
      for (const json& e : list) {
        const QElement q = element_from_json(e);
        want.insert(render(q, f));
        if (e.contains("tex") && e.at("tex").get<std::string>() != render(q, f, SurdStyle::tex))
          res.mismatches.push_back("(D=" + std::to_string(D) + ", m=" + mkey + ", fixture rendering " +
                                   e.at("tex").get<std::string>() + " != " + render(q, f, SurdStyle::tex) + ")");
      }
      for (const QElement& q : rep.representatives.at(m)) got.insert(render(q, f));
      ++res.cells;
      if (want != got) {
        auto join = [](const std::set<std::string>& s) {
          std::string out = "{";
          for (const auto& t : s) out += (out.size() > 1 ? ", " : "") + t;
          return out + "}";
        };
        res.mismatches.push_back("(D=" + std::to_string(D) + ", m=" + mkey + ", expected=" + join(want) + ", got=" + join(got) + ")");
      }
    }
  }
}

}  // namespace detail

/// Recomputes every fixture in the document and collects differences.
inline VerifyResult verify_fixtures(const json& doc) {
  VerifyResult res;
  for (const json& fx : doc.at("fixtures")) {
    const std::string kind = fx.at("kind").get<std::string>();
    if (kind == "xy_grid") {
      detail::verify_xy(fx, res);
    } else if (kind == "ky_grid") {
      detail::verify_ky(fx, res);
    } else if (kind == "unit_table") {
      detail::verify_units(fx, res);
    } else if (kind == "representatives") {
      detail::verify_reps(fx, res);
    } else {
      throw InvalidArgument("unknown fixture kind: " + kind);
    }
    ++res.fixtures;
  }
  return res;
}

}  // namespace qpart
