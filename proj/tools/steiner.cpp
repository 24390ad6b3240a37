// steiner: symmetrize polygons, run direction schedules, reproduce demos.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "steiner/experiments.hpp"
#include "steiner/io.hpp"
#include "steiner/measure.hpp"
#include "steiner/svg.hpp"
#include "steiner/symmetrize.hpp"

namespace fs = std::filesystem;
using namespace steiner;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParse = 3,
  kInvalidPolygon = 4,
  kIo = 5,
  kScheduleConfig = 6,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kEllipseVertices = 1024;

std::string default_out_dir() {
  const char* env = std::getenv("STEINER_OUT_DIR");
  return env && *env ? env : "steiner-out";
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) throw UsageError(what + ": \"" + s + "\" is not a number");
  return v;
}

// square | rhombus:eps | ellipse:a,b,phi | file:path
ConvexPolygond parse_body(const std::string& spec) {
  if (spec == "square") return ConvexPolygond({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "file" && !rest.empty()) return read_polygon(rest);
  if (head == "rhombus" && !rest.empty()) {
    const double eps = parse_number(rest, "rhombus area");
    if (!(eps > 0)) throw UsageError("rhombus area must be positive");
    return polygonize(CenteredSegmentd(Directiond(std::numbers::pi / 2), 1.0), eps);
  }
  if (head == "ellipse" && !rest.empty()) {
    std::vector<double> p;
    std::stringstream in(rest);
    for (std::string item; std::getline(in, item, ',');) p.push_back(parse_number(item, "ellipse parameter"));
    if (p.size() != 3) throw UsageError("ellipse body needs a,b,phi");
    if (!(p[0] > 0 && p[1] > 0)) throw UsageError("ellipse semi-axes must be positive");
    return polygonize(CenteredEllipsed::from_axes(std::max(p[0], p[1]), std::min(p[0], p[1]),
                                                  p[0] >= p[1] ? p[2] : p[2] + std::numbers::pi / 2),
                      kEllipseVertices);
  }
  throw UsageError("unknown body \"" + spec + "\" (expected square, rhombus:eps, ellipse:a,b,phi or file:path)");
}

// A schedule kind name or the path of a schedule configuration file.
ScheduleConfig parse_schedule(const std::string& arg) {
  ScheduleConfig config;
  if (arg == "prime") config.kind = ScheduleKind::prime;
  else if (arg == "gronchi") config.kind = ScheduleKind::gronchi;
  else if (arg == "random") config.kind = ScheduleKind::random;
  else if (arg == "greedy") config.kind = ScheduleKind::greedy;
  else if (fs::exists(arg)) config = read_schedule_config(arg);
  else throw UsageError("schedule \"" + arg + "\" is neither prime, gronchi, random, greedy nor a readable file");
  return config;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

std::string frame_name(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%06zu.svg", step);
  return buf;
}

// Writes a frame every `every` steps (and the initial state) with a
// viewport fixed by the first body seen.
class FrameWriter {
 public:
  FrameWriter(fs::path dir, std::size_t every, double ball_radius)
      : dir_(std::move(dir)), every_(every), ball_radius_(ball_radius) {
    if (every_ > 0) ensure_dir(dir_);
  }

  void operator()(std::size_t step, const ConvexPolygond& body, std::optional<Directiond> u) {
    if (every_ == 0 || step % every_ != 0) return;
    if (!view_) view_ = Viewport::around(body, ball_radius_);
    const std::string caption = "step " + std::to_string(step);
    write_text_file((dir_ / frame_name(step)).string(),
                    render_svg(*view_, {{&body, "#1f4e9c", "rgba(31,78,156,0.15)"}}, ball_radius_, u, caption));
  }

 private:
  fs::path dir_;
  std::size_t every_;
  double ball_radius_;
  std::optional<Viewport> view_;
};

int cmd_symmetrize(const std::string& in, double angle, bool degrees, const std::string& out_path,
                   const std::string& svg_path) {
  const ConvexPolygond P = read_polygon(in);
  const double radians = degrees ? angle * std::numbers::pi / 180 : angle;
  const Directiond u(radians);
  const ConvexPolygond S = steiner_symmetral(P, u);
  const nlohmann::json metadata = {{"angle", u.angle()}, {"input_angle", angle}, {"degrees", degrees},
                                   {"area", area(S)}};
  const std::string text = write_polygon(S, metadata);
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
  if (!svg_path.empty()) {
    const double r = volume_radius(area(P));
    const Viewport view = Viewport::around(P, r);
    write_text_file(svg_path, render_svg(view, {{&P, "#999", ""}, {&S, "#1f4e9c", "rgba(31,78,156,0.15)"}}, r, u,
                                         "angle " + std::to_string(u.angle())));
  }
  return kOk;
}

int cmd_run(const std::string& body_spec, const std::string& schedule_arg, std::size_t steps,
            std::optional<std::uint64_t> seed, const std::string& csv_path, std::size_t svg_every,
            const std::string& svg_dir) {
  const ConvexPolygond K0 = parse_body(body_spec);
  ScheduleConfig config = parse_schedule(schedule_arg);
  if (seed) config.seed = *seed;
  config.validate();

  const double r = volume_radius(area(K0));
  FrameWriter frames(svg_dir.empty() ? fs::path(default_out_dir()) / "frames" : fs::path(svg_dir), svg_every, r);
  const RunResult result = run_schedule(K0, config, steps, std::ref(frames));
  const std::string csv = trace_csv(result.rows);
  if (csv_path.empty()) std::cout << csv;
  else write_text_file(csv_path, csv);
  if (result.truncated)
    std::cerr << "schedule ended after " << result.rows.size() - 1 << " of " << steps << " steps\n";
  return kOk;
}

struct DemoOptions {
  std::string name;
  double eps = 0.1;
  double ratio = 10;
  std::size_t steps = 0;
  std::uint64_t seed = 1;
  std::string body = "square";
  std::string out;
  std::size_t svg_every = 0;
};

int cmd_demo(const DemoOptions& o) {
  const fs::path dir = o.out.empty() ? fs::path(default_out_dir()) : fs::path(o.out);
  std::string report;
  std::vector<TraceRow> trace;
  bool passed = false;

  if (o.name == "diverge") {
    const std::size_t steps = o.steps ? o.steps : 2000;
    FrameWriter frames(dir / "frames", o.svg_every, volume_radius(o.eps));
    const DivergeReport r = diverge_demo(o.eps, steps, std::ref(frames));
    report = format_report(r);
    trace = r.trace;
    passed = r.passed();
  } else if (o.name == "gronchi") {
    const std::size_t steps = o.steps ? o.steps : 10000;
    FrameWriter frames(dir / "frames", o.svg_every, 1.0);
    const GronchiReport r =
        gronchi_demo(o.ratio, steps, {}, [&](std::size_t step, const CenteredEllipsed& E, std::optional<Directiond> u) {
          if (o.svg_every == 0 || step % o.svg_every != 0) return;
          frames(step, polygonize(E, 256), u);
        });
    report = format_report(r);
    trace = r.trace;
    passed = r.passed();
  } else if (o.name == "random") {
    const std::size_t steps = o.steps ? o.steps : 5000;
    const ConvexPolygond K0 = parse_body(o.body);
    FrameWriter frames(dir / "frames", o.svg_every, volume_radius(area(K0)));
    const RandomReport r = random_demo(K0, o.seed, steps, std::ref(frames));
    report = format_report(r);
    trace = r.trace;
    passed = r.passed();
  } else {
    throw UsageError("unknown demo \"" + o.name + "\" (expected diverge, gronchi or random)");
  }

  ensure_dir(dir);
  write_text_file((dir / "report.txt").string(), report);
  write_text_file((dir / "trace.csv").string(), trace_csv(trace));
  std::cout << report;
  return passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner symmetrization of planar convex bodies"};
  app.require_subcommand(1);

  std::string in, out, svg;
  double angle = 0;
  bool degrees = false;
  auto* sym = app.add_subcommand("symmetrize", "Symmetrize one polygon file about the line u^perp");
  sym->add_option("--in", in, "Polygon file")->required();
  sym->add_option("--angle", angle, "Direction u in radians")->required();
  sym->add_flag("--degrees", degrees, "Read --angle in degrees");
  sym->add_option("--out", out, "Output polygon file (default: stdout)");
  sym->add_option("--svg", svg, "Also draw input, output and u^perp");

  std::string body = "square", schedule = "prime", csv, svg_dir;
  std::size_t steps = 100, svg_every = 0;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Apply a direction schedule and write the trace");
  run->add_option("--body", body, "square | rhombus:eps | ellipse:a,b,phi | file:path")->capture_default_str();
  run->add_option("--schedule", schedule, "prime | gronchi | random | greedy | config.json")->capture_default_str();
  run->add_option("--steps", steps, "Number of symmetrizations")->capture_default_str();
  run->add_option("--seed", seed, "Seed for the random schedule");
  run->add_option("--csv", csv, "Trace file (default: stdout)");
  run->add_option("--svg-every", svg_every, "Write a frame every k steps");
  run->add_option("--svg-dir", svg_dir, "Frame directory (default: $STEINER_OUT_DIR/frames)");

  DemoOptions demo;
  auto* dem = app.add_subcommand("demo", "Reproduce diverge, gronchi or random");
  dem->add_option("name", demo.name, "diverge | gronchi | random")->required();
  dem->add_option("--eps", demo.eps, "Cigar area for diverge")->capture_default_str();
  dem->add_option("--ratio", demo.ratio, "Axis ratio for gronchi")->capture_default_str();
  dem->add_option("--steps", demo.steps, "Steps (default 2000, 10000, 5000)");
  dem->add_option("--seed", demo.seed, "Seed for random")->capture_default_str();
  dem->add_option("--body", demo.body, "Initial body for random")->capture_default_str();
  dem->add_option("--out", demo.out, "Output directory (default: $STEINER_OUT_DIR or steiner-out)");
  dem->add_option("--svg-every", demo.svg_every, "Write a frame every k steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sym) return cmd_symmetrize(in, angle, degrees, out, svg);
    if (*run) return cmd_run(body, schedule, steps, seed, csv, svg_every, svg_dir);
    return cmd_demo(demo);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DemoParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ScheduleConfigError& e) {
    std::cerr << "schedule config error: " << e.what() << "\n";
    return kScheduleConfig;
  } catch (const GeometryError& e) {
    std::cerr << "invalid polygon: " << e.what() << "\n";
    return kInvalidPolygon;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  }
}
