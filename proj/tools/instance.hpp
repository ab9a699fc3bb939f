#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcsp/lcsp.hpp"

namespace lcsp::cli {

using json = nlohmann::ordered_json;

enum class Problem { OneCenter, Obnoxious, KCover };

inline std::string problem_name(Problem p) {
  switch (p) {
    case Problem::OneCenter: return "one-center";
    case Problem::Obnoxious: return "obnoxious-center";
    case Problem::KCover: return "k-cover";
  }
  return "?";
}

// Names the offending field, e.g. "segments[3][1]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct Instance {
  Problem problem = Problem::OneCenter;
  double p = 2.0;
  std::optional<Segment> constraint;
  std::vector<Segment> segments;
  std::vector<Point> points;
  std::size_t K = 1;
  double q = 1.0;
  Aggregate agg = Aggregate::Sum;
};

namespace detail {

inline double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw SchemaError(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(field, "expected a finite number");
  return d;
}

inline std::vector<double> tuple(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array() || v.size() != n) throw SchemaError(field, "expected an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(number(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

inline const json& array_field(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_array()) throw SchemaError(key, "expected an array");
  return v;
}

}  // namespace detail

inline Instance parse_instance(const json& doc) {
  using detail::number;
  using detail::tuple;
  if (!doc.is_object()) throw SchemaError("(root)", "expected a JSON object");
  if (!doc.contains("problem")) throw SchemaError("problem", "missing required field");
  if (!doc["problem"].is_string()) throw SchemaError("problem", "expected a string");

  Instance inst;
  const std::string kind = doc["problem"].get<std::string>();
  if (kind == "one-center") inst.problem = Problem::OneCenter;
  else if (kind == "obnoxious-center") inst.problem = Problem::Obnoxious;
  else if (kind == "k-cover") inst.problem = Problem::KCover;
  else throw SchemaError("problem", "expected one-center, obnoxious-center or k-cover, got \"" + kind + "\"");

  const bool centre = inst.problem != Problem::KCover;
  const std::vector<std::string> allowed = centre
      ? std::vector<std::string>{"problem", "name", "p", "constraint", "segments"}
      : std::vector<std::string>{"problem", "name", "p", "points", "K", "q", "agg"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(key, "field not allowed for problem " + kind);
    }
  }
  const std::vector<std::string> required = centre ? std::vector<std::string>{"p", "constraint", "segments"}
                                                   : std::vector<std::string>{"p", "points", "K"};
  for (const auto& key : required) {
    if (!doc.contains(key)) throw SchemaError(key, "missing required field");
  }
  if (doc.contains("name") && !doc["name"].is_string()) throw SchemaError("name", "expected a string");

  inst.p = number(doc["p"], "p");
  if (inst.p < 1.0) throw SchemaError("p", "must be >= 1");

  if (centre) {
    const auto c = tuple(doc["constraint"], 4, "constraint");
    inst.constraint = Segment{{c[0], c[1]}, {c[2], c[3]}};
    const json& segs = detail::array_field(doc, "segments");
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const auto s = tuple(segs[k], 4, "segments[" + std::to_string(k) + "]");
      inst.segments.push_back({{s[0], s[1]}, {s[2], s[3]}});
    }
    return inst;
  }

  const json& pts = detail::array_field(doc, "points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto v = tuple(pts[k], 2, "points[" + std::to_string(k) + "]");
    inst.points.push_back({v[0], v[1]});
  }
  const json& K = doc["K"];
  if (!K.is_number_integer()) throw SchemaError("K", "expected an integer");
  if (K.get<long long>() < 1) throw SchemaError("K", "must be >= 1");
  inst.K = K.get<std::size_t>();
  if (doc.contains("q")) {
    inst.q = number(doc["q"], "q");
    if (inst.q < 1.0) throw SchemaError("q", "must be >= 1");
  }
  if (doc.contains("agg")) {
    const json& a = doc["agg"];
    if (a == "sum") inst.agg = Aggregate::Sum;
    else if (a == "max") inst.agg = Aggregate::Max;
    else throw SchemaError("agg", "expected \"sum\" or \"max\"");
  }
  return inst;
}

// One segment or point per line so large instances stay diffable.
inline void write_instance(std::ostream& os, const Instance& inst) {
  auto num = [](double v) { return json(v).dump(); };
  os << "{\n  \"problem\": \"" << problem_name(inst.problem) << "\",\n  \"p\": " << num(inst.p) << ",\n";
  if (inst.problem != Problem::KCover) {
    const Segment& c = *inst.constraint;
    os << "  \"constraint\": [" << num(c.a.x) << ", " << num(c.a.y) << ", " << num(c.b.x) << ", " << num(c.b.y)
       << "],\n  \"segments\": [";
    for (std::size_t k = 0; k < inst.segments.size(); ++k) {
      const Segment& s = inst.segments[k];
      os << (k ? ",\n    [" : "\n    [") << num(s.a.x) << ", " << num(s.a.y) << ", " << num(s.b.x) << ", "
         << num(s.b.y) << "]";
    }
    os << (inst.segments.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return;
  }
  os << "  \"K\": " << inst.K << ",\n  \"q\": " << num(inst.q) << ",\n  \"agg\": \""
     << (inst.agg == Aggregate::Sum ? "sum" : "max") << "\",\n  \"points\": [";
  for (std::size_t k = 0; k < inst.points.size(); ++k) {
    os << (k ? ",\n    [" : "\n    [") << num(inst.points[k].x) << ", " << num(inst.points[k].y) << "]";
  }
  os << (inst.points.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace lcsp::cli
