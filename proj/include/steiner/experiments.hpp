#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/bodies.hpp"
#include "steiner/schedule.hpp"
#include "steiner/symmetrize.hpp"
#include "steiner/types.hpp"

namespace steiner {

// Cigar areas at or above this admit a limit body.
inline constexpr double kDivergenceAreaThreshold =
    9.0 / (std::numbers::pi * std::numbers::pi * std::numbers::pi);
inline constexpr double kEulerLengthFloor = 6.0 / (std::numbers::pi * std::numbers::pi);

class DemoParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TraceRow {
  std::size_t step = 0;
  double angle = 0;  // NaN on the initial row
  double area = 0;
  double origin_radius = 0;
  double diameter = 0;
  double hausdorff_to_ball = 0;  // to the centered ball of the initial area
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Check>& checks);

TraceRow trace_row(std::size_t step, double angle, const ConvexPolygond& body, double ball_radius);

// Area constant to 1e-9 relative and origin_radius non-increasing to 1e-9.
std::vector<Check> trace_invariants(const std::vector<TraceRow>& rows);

using StepObserver = std::function<void(std::size_t step, const ConvexPolygond& body, std::optional<Directiond> u)>;

struct RunResult {
  std::vector<TraceRow> rows;  // rows[0] is the initial body
  ConvexPolygond final_body;
  bool truncated = false;  // explicit schedule ran out before `steps`
};

// Applies `steps` directions of the schedule to K0 (capped by
// config.max_steps), one trace row per state including the initial one.
RunResult run_schedule(const ConvexPolygond& K0, const ScheduleConfig& config, std::size_t steps,
                       const StepObserver& observer = {});

struct DivergeRow {
  std::size_t step = 0;
  double angle = 0;
  double cumulative_angle = 0;
  double segment_length = 0;    // composed segment symmetrals
  double cosine_product = 0;    // L_{m-1} cos(sqrt(2)/p_m)
  double diameter = 0;
  double area = 0;
  double ball_distance = 0;
  double distance_floor = 0;    // L_m / 2 - sqrt(eps / pi)
  bool segment_contained = false;
};

struct DivergeReport {
  double eps = 0;
  std::vector<DivergeRow> rows;  // rows[0] is the initial cigar
  std::vector<TraceRow> trace;
  std::vector<Check> checks;
  double cumulative_angle = 0;
  // Hausdorff distance between the bodies at the middle and final steps.
  double late_drift = 0;
  std::optional<ConvexPolygond> final_body;
  bool passed() const { return all_passed(checks); }
};

// Prime-angle schedule on the rhombus of area eps around the vertical unit
// segment. Requires 0 < eps < 9/pi^3 and steps >= 100.
DivergeReport diverge_demo(double eps, std::size_t steps, const StepObserver& observer = {});

struct GronchiRow {
  std::size_t step = 0;
  double angle = 0;
  double axis_ratio = 0;
  double orientation = 0;            // [0, pi)
  double unwrapped_orientation = 0;  // continuous lift of orientation
  double determinant = 0;
};

struct GronchiReport {
  double ratio = 0;
  std::vector<GronchiRow> rows;
  std::vector<TraceRow> trace;
  std::vector<Check> checks;
  double min_axis_ratio = 0;
  double winding = 0;  // unwrapped orientation travelled
  double max_determinant_drift = 0;
  CenteredEllipsed final_ellipse = CenteredEllipsed::circle(1);
  bool passed() const { return all_passed(checks); }
};

// Ellipse of area pi with semi-axis ratio `ratio`, major axis vertical,
// symmetrized along the Gronchi schedule. Requires ratio >= 1 and
// steps >= 100.
GronchiReport gronchi_demo(double ratio, std::size_t steps, const GronchiRule& rule = {},
                           const std::function<void(std::size_t, const CenteredEllipsed&, std::optional<Directiond>)>&
                               observer = {});

struct RandomReport {
  std::uint64_t seed = 0;
  std::vector<TraceRow> trace;
  std::vector<Check> checks;
  double initial_distance = 0;
  double final_distance = 0;
  double volume_radius = 0;
  bool passed() const { return all_passed(checks); }
};

RandomReport random_demo(const ConvexPolygond& K0, std::uint64_t seed, std::size_t steps,
                         const StepObserver& observer = {});

std::string format_report(const DivergeReport& report);
std::string format_report(const GronchiReport& report);
std::string format_report(const RandomReport& report);

}  // namespace steiner
