#ifndef RECTIHULL_IO_HPP
#define RECTIHULL_IO_HPP

#include <charconv>
#include <cstdlib>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "hull.hpp"
#include "interval.hpp"
#include "region.hpp"
#include "rotate.hpp"

namespace rectihull {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_double(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + std::string(tok) + "'");
  return v;
}

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// `x y z` per line, '#' starts a comment line, ids follow line order.
inline PointSet read_points_text(std::istream& in) {
  std::vector<Point3> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string_view> tok;
    std::string_view rest(line);
    while (!rest.empty()) {
      const auto b = rest.find_first_not_of(" \t");
      if (b == std::string_view::npos) break;
      rest.remove_prefix(b);
      const auto e = rest.find_first_of(" \t");
      tok.push_back(rest.substr(0, e));
      rest.remove_prefix(e == std::string_view::npos ? rest.size() : e);
    }
    if (tok.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 3 coordinates, got " + std::to_string(tok.size()));
    pts.push_back({detail::parse_double(tok[0], lineno), detail::parse_double(tok[1], lineno),
                   detail::parse_double(tok[2], lineno), static_cast<PointId>(pts.size())});
  }
  try {
    return PointSet(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline PointSet read_points_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("JSON point file must be an array");
  std::vector<Point3> pts;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("x") || !item.contains("y") || !item.contains("z"))
      throw ParseError("JSON point " + std::to_string(pts.size()) + " needs numeric x, y, z");
    for (const char* key : {"x", "y", "z"})
      if (!item[key].is_number()) throw ParseError("JSON point " + std::to_string(pts.size()) + ": " + key + " is not a number");
    pts.push_back({item["x"].get<double>(), item["y"].get<double>(), item["z"].get<double>(),
                   static_cast<PointId>(pts.size())});
  }
  try {
    return PointSet(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// Sniffs the first non-blank character: '[' means JSON.
inline PointSet read_points(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream src(text);
  if (first != std::string::npos && text[first] == '[') return read_points_json(src);
  return read_points_text(src);
}

inline void write_points_text(std::ostream& os, const PointSet& P) {
  for (const auto& p : P)
    os << detail::format_double(p.x) << ' ' << detail::format_double(p.y) << ' ' << detail::format_double(p.z) << '\n';
}

inline nlohmann::json points_json(const PointSet& P) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : P) arr.push_back({{"x", p.x}, {"y", p.y}, {"z", p.z}});
  return arr;
}

inline nlohmann::json region_json(const StaircaseRegion& r) {
  nlohmann::json cycle = nlohmann::json::array();
  for (const auto& v : r.boundary()) cycle.push_back({v.x, v.y});
  return {{"x_min", r.x_min()}, {"x_max", r.x_max()}, {"area", r.area()}, {"vertices", cycle}};
}

inline nlohmann::json regions_json(const RegionSet& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(region_json(r));
  return arr;
}

inline nlohmann::json mesh_json(const SlabMesh& m) {
  nlohmann::json events = nlohmann::json::array();
  for (std::size_t i = 0; i < m.events.size(); ++i)
    events.push_back({{"id", m.events[i].id}, {"z", m.events[i].v}, {"section", regions_json(m.sections[i])}});
  nlohmann::json slabs = nlohmann::json::array();
  for (const auto& s : m.slabs)
    slabs.push_back({{"z_top", s.top.v}, {"z_bottom", s.bottom.v}, {"regions", regions_json(s.regions)}});
  return {{"theta", m.theta}, {"events", events}, {"slabs", slabs}};
}

inline nlohmann::json events_json(const HullEvents& ev) {
  nlohmann::json initial = nlohmann::json::object();
  for (int k = 0; k < 4; ++k) initial[std::to_string(k + 5)] = ev.initial_below[static_cast<std::size_t>(k)];
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : ev.events) {
    nlohmann::json deltas = nlohmann::json::object();
    for (int k = 0; k < 8; ++k) {
      const auto& d = e.deltas[static_cast<std::size_t>(k)];
      if (d.empty()) continue;
      deltas[std::to_string(k + 1)] = {{"added", d.added}, {"removed", d.removed}};
    }
    arr.push_back({{"id", e.id}, {"z", e.z}, {"deltas", deltas}});
  }
  return {{"initial_below", initial}, {"events", arr}};
}

// Radians rounded to 12 significant digits.
inline double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline nlohmann::json intervals_json(const IntervalSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  // Rounding may carry 2pi just past the range.
  auto r = [](double v) { return std::min(round12(v), kTwoPi); };
  for (const auto& a : s.intervals()) arr.push_back({{"lo", r(a.lo)}, {"hi", r(a.hi)}, {"wraps", a.wraps}});
  return arr;
}

inline nlohmann::json activity_json(const ActivityTable& tab) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : tab.points) arr.push_back({{"id", a.id}, {"intervals", intervals_json(a.merged)}});
  return arr;
}

}  // namespace rectihull

#endif  // RECTIHULL_IO_HPP
