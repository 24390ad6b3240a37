#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/primes.hpp"
#include "steiner/types.hpp"

namespace steiner {

enum class ScheduleKind { prime, gronchi, random, greedy, explicit_angles };
enum class Objective { hausdorff_to_ball, origin_radius };
enum class PoolRule { prime_angle, van_der_corput };

std::string to_string(ScheduleKind kind);
std::string to_string(Objective objective);
std::string to_string(PoolRule rule);

class ScheduleConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incremental angles theta_i = scale / (i + offset)^exponent, i >= 1.
// Sum theta_i diverges and sum theta_i^2 converges iff 1/2 < exponent <= 1.
struct GronchiRule {
  double scale = 1.0;
  double offset = 1.0;
  double exponent = 1.0;

  double increment(std::size_t i) const;
  void validate() const;
};

struct PoolGrowth {
  std::size_t initial = 64;
  std::size_t factor = 2;
  std::size_t max = 4096;
  // Grow the pool when a step improves the objective by less than this
  // fraction.
  double threshold = 1e-6;
  // Objectives below resolution * ball_radius sit at the polygon's rounding
  // floor; the pool stops growing there.
  double resolution = 1e-6;
  // When the decimated pick raises the full objective, up to this many
  // runners-up are scored on the full body.
  std::size_t verify = 16;
  // Candidates are scored on a copy decimated to this many vertices.
  std::size_t vertex_cap = 256;
  PoolRule rule = PoolRule::prime_angle;
};

struct ScheduleConfig {
  ScheduleKind kind = ScheduleKind::prime;
  std::uint64_t seed = 1;
  GronchiRule gronchi;
  PoolGrowth pool;
  Objective objective = Objective::hausdorff_to_ball;
  std::optional<std::size_t> max_steps;
  std::vector<double> angles;  // explicit schedules, radians

  void validate() const;
};

// Direction generator for every kind that does not look at the body.
//
// prime:    angle_m = sum_{i<=m} sqrt(2) / p_i
// gronchi:  angle_m = sum_{i<=m} theta_i
// random:   uniform on [0, 2pi) from std::mt19937_64(seed), using the top
//           53 bits of each draw, so sequences are identical on every
//           conforming standard library
// explicit: the configured list, then exhausted
class DirectionSchedule {
 public:
  explicit DirectionSchedule(const ScheduleConfig& config);

  // nullopt once an explicit list runs out.
  std::optional<Directiond> next();

  std::size_t steps_taken() const { return step_; }
  // Unwrapped sum of emitted increments (prime, gronchi); the raw emitted
  // angle for explicit and random schedules.
  double cumulative_angle() const { return cumulative_; }
  // Increment added at the most recent step (prime, gronchi).
  double last_increment() const { return last_increment_; }

 private:
  ScheduleConfig config_;
  PrimeStream primes_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
  double cumulative_ = 0;
  double last_increment_ = 0;
};

// Uniform angle in [0, 2pi) from one 64-bit draw.
double uniform_angle(std::uint64_t draw);

// Partial products prod_{i<=k} cos(sqrt(2)/p_i) for k = 1..m.
std::vector<double> cosine_products(std::size_t m);
double cosine_product(std::size_t m);

struct EulerBound {
  double lhs;  // prod (cos(sqrt(2)/p_i))^-1
  double rhs;  // prod (1 - 1/p_i^2)^-1
  bool holds(double tail_tolerance = 1e-12) const;
};

EulerBound euler_bound_check(std::size_t m);

// First `size` elements of a fixed enumeration of a dense direction set.
// Prefix-stable: dense_pool(n) is a prefix of dense_pool(n + 1).
std::vector<Directiond> dense_pool(std::size_t size, PoolRule rule = PoolRule::prime_angle);

double objective_value(const ConvexPolygond& body, Objective objective, double ball_radius);

struct GreedyChoice {
  Directiond direction;
  ConvexPolygond body;
  double objective;
};

// Scores s_u K for each u in the pool on a copy of K decimated to
// vertex_cap vertices and applies the best direction to K itself. Ties go
// to the smallest angle; the reduction is independent of evaluation order,
// and large pools are scored on several threads.
GreedyChoice greedy_step(const ConvexPolygond& body, std::span<const Directiond> pool, Objective objective,
                         double ball_radius, std::size_t vertex_cap = 256);

// Greedy descent over a growing pool drawn from a dense direction set.
// Each step never returns a body whose objective exceeds the input's when
// one of the `verify` best-ranked candidates avoids it.
class GreedyScheduler {
 public:
  GreedyScheduler(PoolGrowth growth, Objective objective, double ball_radius);

  GreedyChoice step(const ConvexPolygond& body);
  std::size_t pool_size() const { return pool_.size(); }

 private:
  PoolGrowth growth_;
  Objective objective_;
  double ball_radius_;
  std::vector<Directiond> pool_;
};

}  // namespace steiner
