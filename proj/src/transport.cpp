#include "shiftmc/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "shiftmc/errors.hpp"

namespace shiftmc {

namespace {

void validate(const TransportParams& params) {
  if (!(params.lambda > 0.0)) throw ContractViolation("transport: lambda must be > 0");
  if (params.max_depth < 1) throw ContractViolation("transport: max_depth must be >= 1");
  if (params.max_particles < 1) throw ContractViolation("transport: max_particles must be >= 1");
}

double free_path(double u) { return -std::log1p(-u); }
double relative_angle(double u) { return std::numbers::pi * (u - 0.5); }

struct Particle {
  double x;
  double y;
  double dir;
  int depth;
};

}  // namespace

TransportOutcome simulate_tree(const TransportParams& params, TapeCursor& cursor) {
  validate(params);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  TransportOutcome out;
  out.particles = 1;
  const std::uint64_t pos0 = cursor.position();

  std::vector<Particle> stack;
  stack.reserve(2 * static_cast<std::size_t>(std::min(params.max_depth, 64)));
  stack.push_back(Particle{0.0, 0.0, 0.0, 0});

  while (!stack.empty()) {
    const Particle p = stack.back();
    stack.pop_back();
    out.depth_reached = std::max(out.depth_reached, p.depth);

    const double distance =
        params.lambda * cursor.next_transformed(kFreePathTransformId, free_path);
    const double dx = std::cos(p.dir);
    const double dy = std::sin(p.dir);
    const double t_right = dx > 0.0 ? (1.0 - p.x) / dx : kInf;
    const double t_left = dx < 0.0 ? -p.x / dx : kInf;
    const double t_top = dy > 0.0 ? (0.5 - p.y) / dy : kInf;
    const double t_bottom = dy < 0.0 ? (-0.5 - p.y) / dy : kInf;
    const double t_vertical = std::min(t_right, t_left);
    const double t_horizontal = std::min(t_top, t_bottom);

    if (std::min(t_vertical, t_horizontal) <= distance) {
      // Exits; corner ties resolve to the vertical sides.
      if (t_vertical <= t_horizontal) {
        if (t_right <= t_left) ++out.exits_right; else ++out.exits_left;
      } else {
        if (t_top <= t_bottom) ++out.exits_top; else ++out.exits_bottom;
      }
      continue;
    }

    if (p.depth + 1 > params.max_depth || out.particles + 2 > params.max_particles) {
      out.truncated = true;
      continue;
    }

    ++out.splittings;
    out.particles += 2;
    const double sx = p.x + distance * dx;
    const double sy = p.y + distance * dy;
    // Both angle cells are consumed at the split, before either subtree.
    const double phi1 = cursor.next_transformed(kAngleTransformId, relative_angle);
    const double phi2 = cursor.next_transformed(kAngleTransformId, relative_angle);
    stack.push_back(Particle{sx, sy, p.dir + phi2, p.depth + 1});
    stack.push_back(Particle{sx, sy, p.dir + phi1, p.depth + 1});  // simulated first
  }

  out.consumed = cursor.position() - pos0;
  return out;
}

ConsumptionModel transport_model(const TransportParams& params,
                                 std::shared_ptr<std::uint64_t> truncated_trees) {
  validate(params);
  ConsumptionModel model;
  model.payoff_names = {"splittings", "right_exits"};
  model.evaluate = [params, truncated_trees = std::move(truncated_trees)](
                       TapeCursor& cursor, std::span<double> out) {
    const TransportOutcome outcome = simulate_tree(params, cursor);
    out[0] = static_cast<double>(outcome.splittings);
    out[1] = static_cast<double>(outcome.exits_right);
    if (outcome.truncated && truncated_trees) ++*truncated_trees;
  };
  return model;
}

}  // namespace shiftmc
