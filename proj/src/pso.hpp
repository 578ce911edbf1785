// Constrained particle swarm optimizer with constriction (PSO-Co) over a
// three-dimensional design vector (tilt, azimuth, panel count).
//
// Constraints are box bounds applied through an exterior penalty whose
// weight grows with the iteration count, so particles fly unclamped and are
// scored where they land.  Candidate positions snap to the nearest integer
// lattice vertex before scoring (the design is discrete); the best
// penalty-free position ever scored is what the optimizer returns.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace pvopt {

using Vec3 = std::array<double, 3>;

struct ConstraintSet {
  Vec3 lower{0.0, -180.0, 0.0};
  Vec3 upper{90.0, 180.0, 30.0};

  static ConstraintSet bounds(double tilt_min, double tilt_max, double az_min,
                              double az_max, double z_min, double z_max);
  // Physical box: tilt 0..90, azimuth -180..180, 0..z_max panels.
  static ConstraintSet defaults(double z_max = 30.0);
  // Wider legacy box with tilt to 180 and double the panel ceiling.
  static ConstraintSet relaxed(double z_max = 30.0);

  // Violation magnitude of coordinate j: max(lower - x, x - upper), negative
  // inside the box.
  double violation(std::size_t j, const Vec3& x) const;
  bool feasible(const Vec3& x) const;
  void validate() const;  // throws std::invalid_argument
};

// Exterior penalty H(x, n) = h(n) * sum_j theta(y_j) y_j^gamma(y_j) with
// y_j = max(0, violation_j), h(n) = n sqrt(n), and the staged weights
// theta = 10/20/100/300 for y < 0.001 / < 0.1 / < 1 / >= 1, gamma = 1 below
// 1 and 2 at or above it.
double penalty(const ConstraintSet& cs, const Vec3& x, int iteration);

struct SwarmConfig {
  int particle_count = 50;
  int max_iterations = 200;
  double c1 = 2.05;
  double c2 = 2.05;
  double chi = 0.729;          // constriction factor
  std::uint64_t seed = 1;
  double tolerance = 0.0;      // 0 disables the stall stop
  int stall_window = 30;
  Vec3 v_max{0.0, 0.0, 0.0};   // per-axis speed limit; 0 = half box width
  bool discretize = true;      // snap to integer vertices before scoring
  void validate() const;       // throws std::invalid_argument
};

struct Particle {
  Vec3 position{};
  Vec3 velocity{};
  Vec3 best_position{};
  double best_score = std::numeric_limits<double>::infinity();
};

// One constricted velocity step: chi * (v + c1 r (pbest - x) + c2 R (gbest
// - x)), componentwise, clamped to +/- v_max.  r and R are the per-axis
// uniform draws.
Vec3 velocity_update(const Particle& p, const Vec3& global_best,
                     const SwarmConfig& cfg, const Vec3& v_max, const Vec3& r,
                     const Vec3& big_r);

struct SnapResult {
  Vec3 vertex{};
  double score = std::numeric_limits<double>::infinity();
};

// Scores every integer vertex of the unit cube containing x and returns the
// best; ties go to the lexicographically lowest vertex.
SnapResult nearest_vertex_snap(const Vec3& x,
                               const std::function<double(const Vec3&)>& score);

struct IterationStat {
  int iteration = 0;  // 1-based
  double best_score = std::numeric_limits<double>::infinity();
};

struct OptimizeResult {
  Vec3 best_position{};
  double best_score = std::numeric_limits<double>::infinity();
  bool feasible_found = false;
  std::vector<IterationStat> history;  // best feasible objective so far
  int iterations = 0;
  long evaluations = 0;
  // Fallback diagnostics when no penalty-free point was ever scored.
  Vec3 best_penalized_position{};
  double best_penalized_score = std::numeric_limits<double>::infinity();
};

// Minimizes objective over the constraint box.  Deterministic for a given
// seed: per-particle generators, synchronous updates.
OptimizeResult optimize(const std::function<double(const Vec3&)>& objective,
                        const ConstraintSet& cs, const SwarmConfig& cfg);

}  // namespace pvopt
