#include "steiner/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "steiner/measure.hpp"
#include "steiner/symmetrize.hpp"

namespace steiner {

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::prime: return "prime";
    case ScheduleKind::gronchi: return "gronchi";
    case ScheduleKind::random: return "random";
    case ScheduleKind::greedy: return "greedy";
    case ScheduleKind::explicit_angles: return "explicit";
  }
  return "unknown";
}

std::string to_string(Objective objective) {
  return objective == Objective::origin_radius ? "origin_radius" : "hausdorff_to_ball";
}

std::string to_string(PoolRule rule) { return rule == PoolRule::van_der_corput ? "van_der_corput" : "prime_angle"; }

double GronchiRule::increment(std::size_t i) const {
  return scale / std::pow(static_cast<double>(i) + offset, exponent);
}

void GronchiRule::validate() const {
  if (!(scale > 0)) throw ScheduleConfigError("gronchi.scale must be positive");
  if (!(offset > -1)) throw ScheduleConfigError("gronchi.offset must exceed -1 so every increment is finite");
  if (!(exponent > 0.5 && exponent <= 1.0))
    throw ScheduleConfigError("gronchi.exponent must lie in (0.5, 1] so the increments diverge while their "
                              "squares converge");
}

void ScheduleConfig::validate() const {
  if (kind == ScheduleKind::gronchi) gronchi.validate();
  if (kind == ScheduleKind::explicit_angles) {
    if (angles.empty()) throw ScheduleConfigError("explicit schedule needs a nonempty angles list");
    for (double a : angles)
      if (!std::isfinite(a)) throw ScheduleConfigError("explicit schedule angles must be finite");
  }
  if (kind == ScheduleKind::greedy) {
    if (pool.initial < 1) throw ScheduleConfigError("pool_growth.initial must be at least 1");
    if (pool.factor < 2) throw ScheduleConfigError("pool_growth.factor must be at least 2");
    if (pool.max < pool.initial) throw ScheduleConfigError("pool_growth.max must be at least pool_growth.initial");
    if (!(pool.threshold >= 0)) throw ScheduleConfigError("pool_growth.threshold must be nonnegative");
    if (!(pool.resolution >= 0)) throw ScheduleConfigError("pool_growth.resolution must be nonnegative");
    if (pool.vertex_cap < 3) throw ScheduleConfigError("pool_growth.vertex_cap must be at least 3");
  }
}

double uniform_angle(std::uint64_t draw) {
  return 2 * std::numbers::pi * (static_cast<double>(draw >> 11) * 0x1.0p-53);
}

DirectionSchedule::DirectionSchedule(const ScheduleConfig& config) : config_(config), rng_(config.seed) {
  config_.validate();
  if (config_.kind == ScheduleKind::greedy)
    throw ScheduleConfigError("greedy schedules choose directions from the body; use GreedyScheduler");
}

std::optional<Directiond> DirectionSchedule::next() {
  switch (config_.kind) {
    case ScheduleKind::prime:
      last_increment_ = std::numbers::sqrt2 / static_cast<double>(primes_.next());
      cumulative_ += last_increment_;
      break;
    case ScheduleKind::gronchi:
      last_increment_ = config_.gronchi.increment(step_ + 1);
      cumulative_ += last_increment_;
      break;
    case ScheduleKind::random:
      cumulative_ = uniform_angle(rng_());
      break;
    case ScheduleKind::explicit_angles:
      if (step_ >= config_.angles.size()) return std::nullopt;
      cumulative_ = config_.angles[step_];
      break;
    case ScheduleKind::greedy:
      return std::nullopt;
  }
  ++step_;
  return Directiond(cumulative_);
}

std::vector<double> cosine_products(std::size_t m) {
  std::vector<double> out;
  out.reserve(m);
  PrimeStream primes;
  double product = 1;
  for (std::size_t i = 0; i < m; ++i) {
    product *= std::cos(std::numbers::sqrt2 / static_cast<double>(primes.next()));
    out.push_back(product);
  }
  return out;
}

double cosine_product(std::size_t m) {
  if (m == 0) return 1.0;
  return cosine_products(m).back();
}

bool EulerBound::holds(double tail_tolerance) const {
  constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  return lhs <= rhs && rhs <= zeta2 + tail_tolerance;
}

EulerBound euler_bound_check(std::size_t m) {
  EulerBound bound{1.0, 1.0};
  PrimeStream primes;
  for (std::size_t i = 0; i < m; ++i) {
    const double p = static_cast<double>(primes.next());
    bound.lhs /= std::cos(std::numbers::sqrt2 / p);
    bound.rhs /= 1.0 - 1.0 / (p * p);
  }
  return bound;
}

std::vector<Directiond> dense_pool(std::size_t size, PoolRule rule) {
  std::vector<Directiond> pool;
  pool.reserve(size);
  if (rule == PoolRule::prime_angle) {
    PrimeStream primes;
    double theta = 0;
    for (std::size_t i = 0; i < size; ++i) {
      theta += std::numbers::sqrt2 / static_cast<double>(primes.next());
      pool.emplace_back(theta);
    }
  } else {
    for (std::size_t i = 1; i <= size; ++i) {
      // base-2 radical inverse of i
      double inv = 0, digit = 0.5;
      for (std::size_t k = i; k > 0; k >>= 1, digit /= 2)
        if (k & 1) inv += digit;
      pool.emplace_back(2 * std::numbers::pi * inv);
    }
  }
  return pool;
}

double objective_value(const ConvexPolygond& body, Objective objective, double ball_radius) {
  if (objective == Objective::origin_radius) return origin_radius(body);
  return ball_distance(body, CenteredBalld(ball_radius));
}

namespace {

constexpr std::size_t kParallelWorkThreshold = 1 << 16;

std::vector<double> score_pool(const ConvexPolygond& probe, std::span<const Directiond> pool, Objective objective,
                               double ball_radius) {
  std::vector<double> scores(pool.size());
  auto score_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      scores[i] = objective_value(steiner_symmetral(probe, pool[i]), objective, ball_radius);
  };
  const std::size_t work = pool.size() * probe.size();
  const std::size_t threads =
      work < kParallelWorkThreshold ? 1 : std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), pool.size());
  if (threads <= 1) {
    score_range(0, pool.size());
    return scores;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (pool.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < pool.size(); begin += chunk)
    workers.emplace_back(score_range, begin, std::min(pool.size(), begin + chunk));
  workers.clear();  // join
  return scores;
}

// Pool indices by ascending probe score, ties to the smaller angle.
std::vector<std::size_t> rank_pool(const ConvexPolygond& body, std::span<const Directiond> pool, Objective objective,
                                   double ball_radius, std::size_t vertex_cap) {
  if (pool.empty()) throw ScheduleConfigError("greedy step needs a nonempty direction pool");
  const ConvexPolygond probe = decimate(body, vertex_cap);
  const std::vector<double> scores = score_pool(probe, pool, objective, ball_radius);
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    if (pool[a].angle() != pool[b].angle()) return pool[a].angle() < pool[b].angle();
    return a < b;
  });
  return order;
}

GreedyChoice apply_choice(const ConvexPolygond& body, const Directiond& u, Objective objective, double ball_radius) {
  ConvexPolygond next = steiner_symmetral(body, u);
  const double value = objective_value(next, objective, ball_radius);
  return {u, std::move(next), value};
}

}  // namespace

GreedyChoice greedy_step(const ConvexPolygond& body, std::span<const Directiond> pool, Objective objective,
                         double ball_radius, std::size_t vertex_cap) {
  const std::vector<std::size_t> order = rank_pool(body, pool, objective, ball_radius, vertex_cap);
  return apply_choice(body, pool[order.front()], objective, ball_radius);
}

GreedyScheduler::GreedyScheduler(PoolGrowth growth, Objective objective, double ball_radius)
    : growth_(growth), objective_(objective), ball_radius_(ball_radius), pool_(dense_pool(growth.initial, growth.rule)) {}

GreedyChoice GreedyScheduler::step(const ConvexPolygond& body) {
  const double before = objective_value(body, objective_, ball_radius_);
  const bool resolved = before <= growth_.resolution * ball_radius_;
  for (;;) {
    const std::vector<std::size_t> order = rank_pool(body, pool_, objective_, ball_radius_, growth_.vertex_cap);
    GreedyChoice choice = apply_choice(body, pool_[order.front()], objective_, ball_radius_);
    const double gain = before > 0 ? (before - choice.objective) / before : 0.0;
    if (!resolved && gain < growth_.threshold && pool_.size() < growth_.max) {
      pool_ = dense_pool(std::min(pool_.size() * growth_.factor, growth_.max), growth_.rule);
      continue;
    }
    for (std::size_t k = 1; k < order.size() && k <= growth_.verify && choice.objective > before; ++k) {
      GreedyChoice other = apply_choice(body, pool_[order[k]], objective_, ball_radius_);
      if (other.objective < choice.objective) choice = std::move(other);
    }
    return choice;
  }
}

}  // namespace steiner
