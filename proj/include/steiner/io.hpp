#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "steiner/experiments.hpp"
#include "steiner/schedule.hpp"
#include "steiner/types.hpp"

namespace steiner {

// Malformed text or a field of the wrong shape; what() names the line or
// the JSON path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"vertices": [[x, y], ...]} with counterclockwise convex vertices. Other
// top-level keys are ignored. Throws ParseError for malformed text and
// InvalidPolygon for a vertex list that breaks the polygon invariants.
ConvexPolygond parse_polygon(const std::string& text);
ConvexPolygond read_polygon(const std::string& path);

nlohmann::json polygon_to_json(const ConvexPolygond& P);
std::string write_polygon(const ConvexPolygond& P, const nlohmann::json& metadata = nullptr);

// {"kind": "prime|gronchi|random|greedy|explicit", "seed": 1,
//  "pool_growth": {"initial": 64, "factor": 2, "max": 4096, "threshold": 1e-6,
//                  "resolution": 1e-6, "verify": 16, "vertex_cap": 256,
//                  "rule": "prime_angle"},
//  "objective": "hausdorff_to_ball|origin_radius", "max_steps": 500,
//  "angles": [...], "gronchi": {"scale": 1, "offset": 1, "exponent": 1}}
// Every key but kind is optional. Throws ParseError or ScheduleConfigError.
ScheduleConfig parse_schedule_config(const std::string& text);
ScheduleConfig read_schedule_config(const std::string& path);

inline constexpr const char* kTraceHeader = "step,angle,area,origin_radius,diameter,hausdorff_to_ball";

// Header line then one row per step, every real printed with 17 significant
// digits.
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows);
std::string trace_csv(const std::vector<TraceRow>& rows);

// Both throw IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace steiner
