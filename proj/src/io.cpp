#include "steiner/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace steiner {

namespace {

using nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

template <typename T>
T unsigned_at(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a nonnegative integer");
  return j.get<T>();
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  out.close();
  if (!out) throw IoError("write failed for " + path);
}

ConvexPolygond parse_polygon(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level: expected an object with key \"vertices\"");
  const auto it = doc.find("vertices");
  if (it == doc.end()) throw ParseError("missing key \"vertices\"");
  if (!it->is_array()) throw ParseError("vertices: expected a list of [x, y] pairs");
  std::vector<Point2d> pts;
  pts.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& v = (*it)[i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected an [x, y] number pair");
    pts.emplace_back(number_at(v[0], where + "[0]"), number_at(v[1], where + "[1]"));
  }
  return ConvexPolygond(std::move(pts));
}

ConvexPolygond read_polygon(const std::string& path) { return parse_polygon(read_text_file(path)); }

json polygon_to_json(const ConvexPolygond& P) {
  json vertices = json::array();
  for (const auto& v : P.vertices()) vertices.push_back({v.x(), v.y()});
  return json{{"vertices", vertices}};
}

std::string write_polygon(const ConvexPolygond& P, const json& metadata) {
  json doc = polygon_to_json(P);
  if (!metadata.is_null()) doc["metadata"] = metadata;
  return doc.dump(2) + "\n";
}

ScheduleConfig parse_schedule_config(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  ScheduleConfig config;
  if (!doc.contains("kind")) throw ParseError("missing key \"kind\"");
  const std::string kind = string_at(doc["kind"], "kind");
  if (kind == "prime") config.kind = ScheduleKind::prime;
  else if (kind == "gronchi") config.kind = ScheduleKind::gronchi;
  else if (kind == "random") config.kind = ScheduleKind::random;
  else if (kind == "greedy") config.kind = ScheduleKind::greedy;
  else if (kind == "explicit") config.kind = ScheduleKind::explicit_angles;
  else throw ScheduleConfigError("kind: unknown schedule kind \"" + kind + "\"");

  if (doc.contains("seed")) config.seed = unsigned_at<std::uint64_t>(doc["seed"], "seed");
  if (doc.contains("max_steps")) config.max_steps = unsigned_at<std::size_t>(doc["max_steps"], "max_steps");
  if (doc.contains("objective")) {
    const std::string objective = string_at(doc["objective"], "objective");
    if (objective == "hausdorff_to_ball") config.objective = Objective::hausdorff_to_ball;
    else if (objective == "origin_radius") config.objective = Objective::origin_radius;
    else throw ScheduleConfigError("objective: expected hausdorff_to_ball or origin_radius");
  }
  if (doc.contains("pool_growth")) {
    const json& pg = doc["pool_growth"];
    if (!pg.is_object()) throw ParseError("pool_growth: expected an object");
    if (pg.contains("initial")) config.pool.initial = unsigned_at<std::size_t>(pg["initial"], "pool_growth.initial");
    if (pg.contains("factor")) config.pool.factor = unsigned_at<std::size_t>(pg["factor"], "pool_growth.factor");
    if (pg.contains("max")) config.pool.max = unsigned_at<std::size_t>(pg["max"], "pool_growth.max");
    if (pg.contains("threshold")) config.pool.threshold = number_at(pg["threshold"], "pool_growth.threshold");
    if (pg.contains("resolution")) config.pool.resolution = number_at(pg["resolution"], "pool_growth.resolution");
    if (pg.contains("verify")) config.pool.verify = unsigned_at<std::size_t>(pg["verify"], "pool_growth.verify");
    if (pg.contains("vertex_cap"))
      config.pool.vertex_cap = unsigned_at<std::size_t>(pg["vertex_cap"], "pool_growth.vertex_cap");
    if (pg.contains("rule")) {
      const std::string rule = string_at(pg["rule"], "pool_growth.rule");
      if (rule == "prime_angle") config.pool.rule = PoolRule::prime_angle;
      else if (rule == "van_der_corput") config.pool.rule = PoolRule::van_der_corput;
      else throw ScheduleConfigError("pool_growth.rule: expected prime_angle or van_der_corput");
    }
  }
  if (doc.contains("gronchi")) {
    const json& g = doc["gronchi"];
    if (!g.is_object()) throw ParseError("gronchi: expected an object");
    if (g.contains("scale")) config.gronchi.scale = number_at(g["scale"], "gronchi.scale");
    if (g.contains("offset")) config.gronchi.offset = number_at(g["offset"], "gronchi.offset");
    if (g.contains("exponent")) config.gronchi.exponent = number_at(g["exponent"], "gronchi.exponent");
  }
  if (doc.contains("angles")) {
    const json& a = doc["angles"];
    if (!a.is_array()) throw ParseError("angles: expected a list of radians");
    for (std::size_t i = 0; i < a.size(); ++i) config.angles.push_back(number_at(a[i], "angles[" + std::to_string(i) + "]"));
  }
  config.validate();
  return config;
}

ScheduleConfig read_schedule_config(const std::string& path) { return parse_schedule_config(read_text_file(path)); }

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << kTraceHeader << "\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.step, r.angle, r.area, r.origin_radius,
                  r.diameter, r.hausdorff_to_ball);
    out << buf;
  }
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::ostringstream out;
  write_trace_csv(out, rows);
  return out.str();
}

}  // namespace steiner
