#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "poset.hpp"
#include "rep.hpp"
#include "subgrid.hpp"

namespace spreadhom {
namespace io {

// ordered_json keeps insertion order, so every emitter below is byte-stable.
using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

inline json point_json(const Pt& c) {
  json a = json::array();
  for (int v : c) a.push_back(v);
  return a;
}

inline Pt parse_point(const json& j, std::size_t arity) {
  if (!j.is_array() || j.size() != arity)
    throw std::invalid_argument("point must be an array of " + std::to_string(arity) +
                                " coordinates");
  Pt c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("point coordinates must be integers");
    c.push_back(v.get<int>());
  }
  return c;
}

inline json poset_json(const Poset& p) {
  if (!p.is_grid()) throw std::invalid_argument("only grid posets serialize");
  json j;
  j["sizes"] = p.sizes();
  return j;
}

inline std::shared_ptr<const Poset> parse_poset(const json& j) {
  if (!j.is_object() || !j.contains("sizes"))
    throw std::invalid_argument("poset needs a \"sizes\" array");
  std::vector<int> sizes;
  for (const auto& v : j["sizes"]) {
    if (!v.is_number_integer() || v.get<int>() <= 0)
      throw std::invalid_argument("grid axis sizes must be positive integers");
    sizes.push_back(v.get<int>());
  }
  return std::make_shared<Poset>(Poset::grid(sizes));
}

// checks the coordinates against the grid before converting
inline int point_id(const Poset& p, const Pt& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0 || c[i] >= p.sizes()[i])
      throw std::invalid_argument("point leaves the grid");
  return p.id(c);
}

inline json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).value());
    rows.push_back(row);
  }
  return rows;
}

inline Mat parse_matrix(const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw std::invalid_argument("matrix has wrong row count");
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument("matrix has wrong column count");
    for (Index c = 0; c < cols; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number_integer()) throw std::invalid_argument("matrix entries must be integers");
      m(r, c) = Fp(v.get<long long>());
    }
  }
  return m;
}

// {"poset": {...}, "dims": [...id order...], "maps": [{"from", "to", "mat"}...]};
// zero edge matrices are omitted and restored on parse.
inline json module_json(const PersModule& m) {
  const Poset& p = m.poset();
  json j;
  j["poset"] = poset_json(p);
  j["dims"] = json::array();
  for (Index d : m.dims()) j["dims"].push_back(d);
  json maps = json::array();
  for (auto [x, y] : p.hasse()) {
    const Mat& mat = m.edge_map(x, y);
    if (mat.size() == 0 || is_zero_mat(mat)) continue;
    json e;
    e["from"] = point_json(p.coords(x));
    e["to"] = point_json(p.coords(y));
    e["mat"] = matrix_json(mat);
    maps.push_back(e);
  }
  j["maps"] = maps;
  return j;
}

inline PersModule parse_module(const json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("dims"))
    throw std::invalid_argument("module needs \"poset\" and \"dims\"");
  auto p = parse_poset(j["poset"]);
  const auto& dj = j["dims"];
  if (!dj.is_array() || static_cast<int>(dj.size()) != p->size())
    throw std::invalid_argument("dims must list one entry per grid point in row-major order");
  std::vector<Index> dims;
  for (const auto& v : dj) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw std::invalid_argument("dims entries must be nonnegative integers");
    dims.push_back(v.get<Index>());
  }
  std::map<std::pair<int, int>, Mat> maps;
  if (j.contains("maps")) {
    for (const auto& e : j["maps"]) {
      if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("mat"))
        throw std::invalid_argument("map entries need \"from\", \"to\", \"mat\"");
      int x = point_id(*p, parse_point(e["from"], p->sizes().size()));
      int y = point_id(*p, parse_point(e["to"], p->sizes().size()));
      if (!std::binary_search(p->hasse().begin(), p->hasse().end(), std::pair{x, y}))
        throw std::invalid_argument("map endpoints are not a covering edge of the grid");
      maps[{x, y}] = parse_matrix(e["mat"], dims[static_cast<std::size_t>(y)],
                                  dims[static_cast<std::size_t>(x)]);
    }
  }
  try {
    return PersModule(p, std::move(dims), std::move(maps));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("module rejected: ") + e.what());
  }
}

// {"min": [[...]...], "max": [[...]...] | "inf"} in canonical form
inline json spread_json(const Poset& p, const std::vector<int>& support) {
  SpreadForm f = spread_form(p, support);
  json j;
  j["min"] = json::array();
  for (int a : f.lower) j["min"].push_back(point_json(p.coords(a)));
  if (f.upper.empty()) {
    j["max"] = "inf";
  } else {
    j["max"] = json::array();
    for (int b : f.upper) j["max"].push_back(point_json(p.coords(b)));
  }
  return j;
}

inline std::vector<int> parse_spread_support(const Poset& p, const json& j) {
  if (!j.is_object() || !j.contains("min"))
    throw std::invalid_argument("spread needs a \"min\" point list");
  std::vector<int> lower, upper;
  for (const auto& v : j["min"]) lower.push_back(point_id(p, parse_point(v, p.sizes().size())));
  if (j.contains("max") && !(j["max"].is_string() && j["max"] == "inf"))
    for (const auto& v : j["max"]) upper.push_back(point_id(p, parse_point(v, p.sizes().size())));
  std::vector<int> s = set_minus(up_set(p, lower), up_set(p, upper));
  if (!is_spread(p, s)) throw std::invalid_argument("min/max pair does not cut out a spread");
  return s;
}

inline json subgrid_json(const AlignedSubgrid& q) {
  json j;
  j["axes"] = q.axes();
  return j;
}

inline AlignedSubgrid parse_subgrid(const json& j) {
  if (!j.is_object() || !j.contains("axes"))
    throw std::invalid_argument("subgrid needs an \"axes\" array of arrays");
  std::vector<std::vector<int>> axes;
  for (const auto& ax : j["axes"]) {
    std::vector<int> vals;
    for (const auto& v : ax) {
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw std::invalid_argument("subgrid axis values must be nonnegative integers");
      vals.push_back(v.get<int>());
    }
    axes.push_back(std::move(vals));
  }
  try {
    return AlignedSubgrid(std::move(axes));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("subgrid rejected: ") + e.what());
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace io
}  // namespace spreadhom
