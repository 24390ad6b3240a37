#include "steiner/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "steiner/measure.hpp"

namespace steiner {

namespace {

constexpr double kAreaTolerance = 1e-9;
constexpr double kRadiusTolerance = 1e-9;
// Body-versus-segment comparisons carry the polygon's rounding.
constexpr double kGeometricSlack = 1e-9;

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double mean(const std::vector<TraceRow>& rows, std::size_t begin, std::size_t end) {
  double s = 0;
  for (std::size_t i = begin; i < end; ++i) s += rows[i].hausdorff_to_ball;
  return end > begin ? s / static_cast<double>(end - begin) : 0.0;
}

}  // namespace

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

TraceRow trace_row(std::size_t step, double angle, const ConvexPolygond& body, double ball_radius) {
  return {step, angle, area(body), origin_radius(body), diameter(body), ball_distance(body, CenteredBalld(ball_radius))};
}

std::vector<Check> trace_invariants(const std::vector<TraceRow>& rows) {
  if (rows.empty()) return {};
  const double a0 = rows.front().area;
  double area_drift = 0, radius_rise = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    area_drift = std::max(area_drift, std::abs(rows[i].area - a0) / a0);
    if (i > 0) radius_rise = std::max(radius_rise, rows[i].origin_radius - rows[i - 1].origin_radius);
  }
  return {
      {"area constant", area_drift <= kAreaTolerance, fmt("max relative drift %.3e (limit 1e-9)", area_drift)},
      {"origin_radius non-increasing", radius_rise <= kRadiusTolerance,
       fmt("largest single-step rise %.3e (limit 1e-9)", radius_rise)},
  };
}

RunResult run_schedule(const ConvexPolygond& K0, const ScheduleConfig& config, std::size_t steps,
                       const StepObserver& observer) {
  config.validate();
  if (config.max_steps) steps = std::min(steps, *config.max_steps);
  const double ball_radius = volume_radius(area(K0));

  RunResult result{{}, K0, false};
  result.rows.reserve(steps + 1);
  result.rows.push_back(trace_row(0, std::numeric_limits<double>::quiet_NaN(), K0, ball_radius));
  if (observer) observer(0, K0, std::nullopt);

  auto record = [&](std::size_t step, const Directiond& u) {
    result.rows.push_back(trace_row(step, u.angle(), result.final_body, ball_radius));
    if (observer) observer(step, result.final_body, u);
  };

  if (config.kind == ScheduleKind::greedy) {
    GreedyScheduler greedy(config.pool, config.objective, ball_radius);
    for (std::size_t step = 1; step <= steps; ++step) {
      GreedyChoice choice = greedy.step(result.final_body);
      result.final_body = std::move(choice.body);
      record(step, choice.direction);
    }
    return result;
  }

  DirectionSchedule schedule(config);
  for (std::size_t step = 1; step <= steps; ++step) {
    const auto u = schedule.next();
    if (!u) {
      result.truncated = true;
      break;
    }
    result.final_body = steiner_symmetral(result.final_body, *u);
    record(step, *u);
  }
  return result;
}

DivergeReport diverge_demo(double eps, std::size_t steps, const StepObserver& observer) {
  if (!(eps > 0) || !(eps < kDivergenceAreaThreshold))
    throw DemoParameterError(fmt("cigar area eps = %g must satisfy 0 < eps < 9/pi^3 = %.5f; at or above that "
                                 "threshold the symmetrals may have a limit",
                                 eps, kDivergenceAreaThreshold));
  if (steps < 100) throw DemoParameterError("diverge demo needs at least 100 steps");

  DivergeReport report;
  report.eps = eps;
  const CenteredSegmentd unit_segment(Directiond(std::numbers::pi / 2), 1.0);
  ConvexPolygond body = polygonize(unit_segment, eps);
  CenteredSegmentd segment = unit_segment;
  double recursion = 1.0;
  const double ball_radius = volume_radius(eps);

  ScheduleConfig config;
  config.kind = ScheduleKind::prime;
  DirectionSchedule schedule(config);

  double worst_recursion_gap = 0;
  auto observe = [&](std::size_t step, std::optional<Directiond> u) {
    DivergeRow row;
    row.step = step;
    row.angle = u ? u->angle() : std::numeric_limits<double>::quiet_NaN();
    row.cumulative_angle = schedule.cumulative_angle();
    row.segment_length = segment.length;
    row.cosine_product = recursion;
    row.diameter = diameter(body);
    row.area = area(body);
    row.ball_distance = ball_distance(body, CenteredBalld(ball_radius));
    row.distance_floor = segment.length / 2 - ball_radius;
    const ConvexPolygond thin = polygonize(segment, 1e-9 * segment.length * segment.length);
    row.segment_contained = contains(body, thin, Tolerance<double>::containment * body.scale());
    worst_recursion_gap = std::max(worst_recursion_gap, std::abs(row.segment_length - row.cosine_product));
    report.rows.push_back(row);
    report.trace.push_back(
        {step, row.angle, row.area, origin_radius(body), row.diameter, row.ball_distance});
    if (observer) observer(step, body, u);
  };

  observe(0, std::nullopt);
  ConvexPolygond midpoint = body;
  for (std::size_t step = 1; step <= steps; ++step) {
    const Directiond u = *schedule.next();
    body = steiner_symmetral(body, u);
    segment = steiner_symmetral(segment, u);
    recursion *= std::cos(schedule.last_increment());
    observe(step, u);
    if (step == steps / 2) midpoint = body;
  }
  report.cumulative_angle = schedule.cumulative_angle();
  report.late_drift = hausdorff(midpoint, body);
  report.final_body = body;

  double min_diameter = std::numeric_limits<double>::infinity();
  double worst_diameter_gap = -std::numeric_limits<double>::infinity();
  double min_margin = std::numeric_limits<double>::infinity();
  double min_floor = std::numeric_limits<double>::infinity();
  std::size_t uncontained = 0;
  for (const auto& row : report.rows) {
    min_diameter = std::min(min_diameter, row.diameter);
    worst_diameter_gap = std::max(worst_diameter_gap, row.cosine_product - row.diameter);
    min_margin = std::min(min_margin, row.ball_distance - row.distance_floor);
    min_floor = std::min(min_floor, row.distance_floor);
    if (!row.segment_contained) ++uncontained;
  }

  report.checks = trace_invariants(report.trace);
  report.checks.push_back({"diameter >= cosine product >= 6/pi^2",
                           worst_diameter_gap <= kGeometricSlack && min_diameter >= kEulerLengthFloor &&
                               report.rows.back().cosine_product > kEulerLengthFloor,
                           fmt("min diameter %.10f, floor 6/pi^2 = %.10f, worst shortfall below L_m %.3e (limit 1e-9)",
                               min_diameter, kEulerLengthFloor, worst_diameter_gap)});
  report.checks.push_back({"segment symmetral contained in body", uncontained == 0,
                           fmt("%zu of %zu steps violate containment", uncontained, report.rows.size())});
  report.checks.push_back({"distance to equal-area ball above L_m/2 - sqrt(eps/pi) > 0",
                           min_margin >= -kGeometricSlack && min_floor > 0,
                           fmt("smallest floor %.6f, smallest margin above floor %.3e (limit -1e-9)", min_floor, min_margin)});
  report.checks.push_back({"segment recursion matches composed symmetrals", worst_recursion_gap <= 1e-12,
                           fmt("max |L_m - prod cos| = %.3e (limit 1e-12)", worst_recursion_gap)});
  return report;
}

GronchiReport gronchi_demo(double ratio, std::size_t steps, const GronchiRule& rule,
                           const std::function<void(std::size_t, const CenteredEllipsed&, std::optional<Directiond>)>&
                               observer) {
  if (!(ratio >= 1)) throw DemoParameterError(fmt("axis ratio %g must be at least 1", ratio));
  if (steps < 100) throw DemoParameterError("gronchi demo needs at least 100 steps");
  rule.validate();

  GronchiReport report;
  report.ratio = ratio;
  CenteredEllipsed ellipse = CenteredEllipsed::from_axes(std::sqrt(ratio), 1 / std::sqrt(ratio), std::numbers::pi / 2);
  const double det0 = ellipse.determinant();

  ScheduleConfig config;
  config.kind = ScheduleKind::gronchi;
  config.gronchi = rule;
  DirectionSchedule schedule(config);

  double unwrapped = 0;
  auto observe = [&](std::size_t step, std::optional<Directiond> u) {
    const EllipseAxes<double> axes = ellipse_axes(ellipse);
    if (step == 0) {
      unwrapped = axes.orientation;
    } else {
      double delta = axes.orientation - report.rows.back().orientation;
      delta -= std::numbers::pi * std::round(delta / std::numbers::pi);
      unwrapped += delta;
    }
    GronchiRow row{step,
                   u ? u->angle() : std::numeric_limits<double>::quiet_NaN(),
                   axes.semi_major / axes.semi_minor,
                   axes.orientation,
                   unwrapped,
                   ellipse.determinant()};
    report.rows.push_back(row);
    // area pi, so the equal-area ball is the unit disc
    report.trace.push_back({step, row.angle, ellipse.area(), axes.semi_major, 2 * axes.semi_major,
                            std::max(axes.semi_major - 1.0, 1.0 - axes.semi_minor)});
    report.max_determinant_drift = std::max(report.max_determinant_drift, std::abs(row.determinant - det0) / det0);
    if (observer) observer(step, ellipse, u);
  };

  observe(0, std::nullopt);
  for (std::size_t step = 1; step <= steps; ++step) {
    const Directiond u = *schedule.next();
    ellipse = steiner_symmetral(ellipse, u);
    observe(step, u);
  }
  report.final_ellipse = ellipse;

  report.min_axis_ratio = std::numeric_limits<double>::infinity();
  for (const auto& row : report.rows) report.min_axis_ratio = std::min(report.min_axis_ratio, row.axis_ratio);
  report.winding = std::abs(report.rows.back().unwrapped_orientation - report.rows.front().unwrapped_orientation);

  report.checks.push_back({"form determinant constant", report.max_determinant_drift <= 1e-9,
                           fmt("max relative drift %.3e (limit 1e-9)", report.max_determinant_drift)});
  if (ratio > 1) {
    report.checks.push_back({"axis ratio bounded away from 1", report.min_axis_ratio > 1 + 1e-9,
                             fmt("min axis ratio %.9f (delta = %.3e)", report.min_axis_ratio,
                                 report.min_axis_ratio - 1)});
  } else {
    double worst = 0;
    for (const auto& row : report.rows) worst = std::max(worst, std::abs(row.axis_ratio - 1));
    report.checks.push_back({"circle stays a circle", worst <= 1e-12, fmt("max |ratio - 1| = %.3e", worst)});
  }
  return report;
}

RandomReport random_demo(const ConvexPolygond& K0, std::uint64_t seed, std::size_t steps, const StepObserver& observer) {
  ScheduleConfig config;
  config.kind = ScheduleKind::random;
  config.seed = seed;
  const RunResult run = run_schedule(K0, config, steps, observer);

  RandomReport report;
  report.seed = seed;
  report.trace = run.rows;
  report.volume_radius = volume_radius(area(K0));
  report.initial_distance = run.rows.front().hausdorff_to_ball;
  report.final_distance = run.rows.back().hausdorff_to_ball;
  report.checks = trace_invariants(report.trace);

  const std::size_t quarter = std::max<std::size_t>(1, run.rows.size() / 4);
  const double early = mean(run.rows, 0, quarter);
  const double late = mean(run.rows, run.rows.size() - quarter, run.rows.size());
  report.checks.push_back({"distance to equal-area ball trends down",
                           report.final_distance <= report.initial_distance + 1e-9 && late <= early + 1e-9,
                           fmt("initial %.6e, final %.6e, first-quarter mean %.6e, last-quarter mean %.6e",
                               report.initial_distance, report.final_distance, early, late)});
  return report;
}

namespace {

void write_checks(std::ostringstream& out, const std::vector<Check>& checks) {
  for (const auto& c : checks) out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  out << (all_passed(checks) ? "all checks passed\n" : "SOME CHECKS FAILED\n");
}

}  // namespace

std::string format_report(const DivergeReport& r) {
  std::ostringstream out;
  const auto& last = r.rows.back();
  out << "diverge demo: prime-angle schedule on a rhombus cigar\n";
  out << fmt("eps = %.6g (threshold 9/pi^3 = %.6f), steps = %zu\n", r.eps, kDivergenceAreaThreshold, last.step);
  out << fmt("final segment length L_n = %.12f (6/pi^2 = %.12f)\n", last.segment_length, kEulerLengthFloor);
  out << fmt("final diameter = %.12f, final distance to ball = %.6f\n", last.diameter, last.ball_distance);
  out << fmt("cumulative angle theta_n = %.6f rad = %.4f revolutions\n", r.cumulative_angle,
             r.cumulative_angle / (2 * std::numbers::pi));
  out << fmt("hausdorff(K_%zu, K_%zu) = %.6f\n", last.step / 2, last.step, r.late_drift);
  write_checks(out, r.checks);
  return out.str();
}

std::string format_report(const GronchiReport& r) {
  std::ostringstream out;
  out << "gronchi demo: eccentric ellipse under decreasing increments\n";
  out << fmt("initial axis ratio = %.6g, steps = %zu\n", r.ratio, r.rows.back().step);
  out << fmt("min axis ratio = %.9f, final axis ratio = %.9f\n", r.min_axis_ratio, r.rows.back().axis_ratio);
  out << fmt("orientation winding = %.6f rad (2pi = %.6f)\n", r.winding, 2 * std::numbers::pi);
  out << fmt("max determinant drift = %.3e\n", r.max_determinant_drift);
  write_checks(out, r.checks);
  return out.str();
}

std::string format_report(const RandomReport& r) {
  std::ostringstream out;
  out << "random demo: uniformly random directions\n";
  out << fmt("seed = %llu, steps = %zu\n", static_cast<unsigned long long>(r.seed), r.trace.back().step);
  out << fmt("volume radius = %.9f\n", r.volume_radius);
  out << fmt("distance to equal-area ball: initial %.6e, final %.6e (%.4f of volume radius)\n", r.initial_distance,
             r.final_distance, r.final_distance / r.volume_radius);
  write_checks(out, r.checks);
  return out.str();
}

}  // namespace steiner
