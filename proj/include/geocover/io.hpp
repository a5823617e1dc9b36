#pragma once

// File formats: point lists (JSON or CSV), prototype shapes (JSON) and the
// result document. Needs nlohmann/json (vendored as json.hpp).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/pipeline.hpp"
#include "json.hpp"

namespace geocover {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string location(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] inline void parse_fail(const std::string& name, std::string_view text, std::size_t offset,
                                    const std::string& msg) {
  throw Error(ErrorCode::Parse, name + ":" + location(text, offset) + ": " + msg);
}

/// Semantic errors carry no byte offset; point at the first mention of `key`.
[[noreturn]] inline void key_fail(const std::string& name, std::string_view text, const std::string& key,
                                  const std::string& msg) {
  const auto pos = text.find("\"" + key + "\"");
  parse_fail(name, text, pos == std::string_view::npos ? 0 : pos, msg);
}

inline Json parse_json(const std::string& name, std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(name, text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
}

inline Point to_point(const Json& j, const std::string& name, std::string_view text, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    key_fail(name, text, key, "expected a coordinate pair [x, y]");
  const Point p{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(p)) key_fail(name, text, key, "non-finite coordinate");
  return p;
}

inline Ring to_ring(const Json& j, const std::string& name, std::string_view text, const std::string& key) {
  if (!j.is_array()) key_fail(name, text, key, "expected a vertex list");
  Ring r;
  for (const auto& v : j) r.push_back(to_point(v, name, text, key));
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path + ":1:1: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace detail

inline std::vector<Point> parse_points_json(std::string_view text, const std::string& name = "<points>") {
  const Json j = detail::parse_json(name, text);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    detail::parse_fail(name, text, 0, "expected an object with a \"points\" array");
  std::vector<Point> out;
  for (const auto& p : j["points"]) out.push_back(detail::to_point(p, name, text, "points"));
  return out;
}

/// One `x,y` pair per line; blank lines, `#` comments and a non-numeric
/// first line (header) are skipped.
inline std::vector<Point> parse_points_csv(std::string_view text, const std::string& name = "<points>") {
  std::vector<Point> out;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t lead = line.find_first_not_of(" \t");
    if (lead != std::string_view::npos && line[lead] != '#') {
      double v[2];
      std::size_t pos = 0;
      bool ok = true;
      std::size_t bad = start;
      for (int f = 0; f < 2 && ok; ++f) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        const char* b = line.data() + pos;
        const auto [ptr, ec] = std::from_chars(b, line.data() + line.size(), v[f]);
        if (ec != std::errc() || !std::isfinite(v[f])) {
          ok = false;
          bad = start + pos;
          break;
        }
        pos = static_cast<std::size_t>(ptr - line.data());
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (f == 0) {
          if (pos >= line.size() || line[pos] != ',') {
            ok = false;
            bad = start + pos;
          } else {
            ++pos;
          }
        }
      }
      if (ok && pos != line.size()) {
        ok = false;
        bad = start + pos;
      }
      if (ok) {
        out.push_back({v[0], v[1]});
      } else if (!(first && out.empty())) {
        detail::parse_fail(name, text, bad, "expected a line of the form x,y");
      }
      first = false;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::vector<Point> read_points(const std::string& path) {
  const std::string text = detail::read_file(path);
  return detail::ends_with(path, ".csv") ? parse_points_csv(text, path) : parse_points_json(text, path);
}

/// {"type": "disk", "radius": R, "transform": [[a,b],[c,d]]} or
/// {"type": "polygon", "outer": [...], "holes": [[...], ...], "reference": [x,y]}
inline ShapeSpec parse_shape_json(std::string_view text, const std::string& name = "<shape>") {
  const Json j = detail::parse_json(name, text);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    detail::parse_fail(name, text, 0, "expected an object with a \"type\" string");
  const std::string type = j["type"].get<std::string>();
  ShapeSpec spec;
  try {
    if (type == "disk") {
      if (!j.contains("radius") || !j["radius"].is_number())
        detail::key_fail(name, text, "type", "disk needs a numeric \"radius\"");
      spec.shape = Shape::disk(j["radius"].get<double>());
      if (j.contains("transform")) {
        const Json& m = j["transform"];
        if (!m.is_array() || m.size() != 2) detail::key_fail(name, text, "transform", "expected a 2x2 matrix");
        AffineTransform t;
        for (std::size_t r = 0; r < 2; ++r) {
          const Point row = detail::to_point(m[r], name, text, "transform");
          t.linear[r] = {row.x, row.y};
        }
        if (std::abs(t.determinant()) <= Tolerance{}.epsilon)
          throw Error(ErrorCode::SingularTransform, "affine transform is not invertible");
        spec.transform = t;
      }
    } else if (type == "polygon") {
      if (!j.contains("outer")) detail::key_fail(name, text, "type", "polygon needs an \"outer\" ring");
      Ring outer = detail::to_ring(j["outer"], name, text, "outer");
      std::vector<Ring> holes;
      if (j.contains("holes")) {
        if (!j["holes"].is_array()) detail::key_fail(name, text, "holes", "expected a list of rings");
        for (const auto& h : j["holes"]) holes.push_back(detail::to_ring(h, name, text, "holes"));
      }
      if (outer.empty()) detail::key_fail(name, text, "outer", "empty outer ring");
      if (j.contains("reference")) {
        const Point ref = detail::to_point(j["reference"], name, text, "reference");
        spec.shape = Shape::polygon(std::move(outer), std::move(holes), ref);
      } else {
        spec.shape = Shape::polygon(std::move(outer), std::move(holes));
      }
    } else {
      detail::key_fail(name, text, "type", "unknown shape type \"" + type + "\"");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    detail::key_fail(name, text, "type", e.what());
  }
  return spec;
}

inline ShapeSpec read_shape(const std::string& path) { return parse_shape_json(detail::read_file(path), path); }

inline Json to_json(const DiscretizeResult& r) {
  Json doc;
  Json ts = Json::array();
  for (const auto& t : r.translates) {
    Json e;
    e["reference"] = {t.reference.x, t.reference.y};
    e["covered"] = t.covered;
    ts.push_back(std::move(e));
  }
  doc["translates"] = std::move(ts);
  doc["stats"] = {{"n", r.stats.n},
                  {"k", r.stats.k},
                  {"e0", r.stats.e0},
                  {"events", r.stats.events},
                  {"faces", r.stats.faces},
                  {"duplicates", r.stats.duplicates},
                  {"perturbation_applied", r.perturbation.applied}};
  if (r.solution) {
    doc["solution"] = {{"chosen", r.solution->chosen},
                       {"cardinality", r.solution->cardinality()},
                       {"solver", to_string(r.solution->solver)}};
  }
  doc["perturbation"] = {{"applied", r.perturbation.applied},
                         {"seed", r.perturbation.seed},
                         {"magnitude", r.perturbation.magnitude}};
  doc["algorithm"] = to_string(r.algorithm);
  return doc;
}

inline std::string dump_result(const DiscretizeResult& r) { return to_json(r).dump(2) + "\n"; }

/// Translates of a result document.
inline std::vector<CanonicalTranslate> translates_from_json(std::string_view text) {
  const Json j = detail::parse_json("<result>", text);
  std::vector<CanonicalTranslate> out;
  for (const auto& e : j.at("translates")) {
    CanonicalTranslate t;
    t.reference = {e.at("reference")[0].get<double>(), e.at("reference")[1].get<double>()};
    t.covered = e.at("covered").get<std::vector<std::size_t>>();
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace geocover
