#include "pso.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace pvopt {

ConstraintSet ConstraintSet::bounds(double tilt_min, double tilt_max,
                                    double az_min, double az_max, double z_min,
                                    double z_max) {
  ConstraintSet cs;
  cs.lower = {tilt_min, az_min, z_min};
  cs.upper = {tilt_max, az_max, z_max};
  cs.validate();
  return cs;
}

ConstraintSet ConstraintSet::defaults(double z_max) {
  return bounds(0.0, 90.0, -180.0, 180.0, 0.0, z_max);
}

ConstraintSet ConstraintSet::relaxed(double z_max) {
  return bounds(0.0, 180.0, -180.0, 180.0, 0.0, 2.0 * z_max);
}

double ConstraintSet::violation(std::size_t j, const Vec3& x) const {
  return std::max(lower[j] - x[j], x[j] - upper[j]);
}

bool ConstraintSet::feasible(const Vec3& x) const {
  for (std::size_t j = 0; j < 3; ++j)
    if (violation(j, x) > 0.0) return false;
  return true;
}

void ConstraintSet::validate() const {
  static const char* axis[3] = {"tilt", "azimuth", "panel count"};
  for (std::size_t j = 0; j < 3; ++j)
    if (!(lower[j] < upper[j]))
      throw std::invalid_argument(std::string(axis[j]) + " bounds [" +
                                  std::to_string(lower[j]) + ", " +
                                  std::to_string(upper[j]) + "] are empty");
}

double penalty(const ConstraintSet& cs, const Vec3& x, int iteration) {
  if (iteration < 1)
    throw std::invalid_argument("penalty iteration " +
                                std::to_string(iteration) + " below 1");
  double sum = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    double y = std::max(0.0, cs.violation(j, x));
    if (y <= 0.0) continue;
    double theta = y < 0.001 ? 10.0 : y < 0.1 ? 20.0 : y < 1.0 ? 100.0 : 300.0;
    sum += theta * (y < 1.0 ? y : y * y);
  }
  double n = static_cast<double>(iteration);
  return n * std::sqrt(n) * sum;
}

void SwarmConfig::validate() const {
  if (particle_count < 1)
    throw std::invalid_argument("particle count " +
                                std::to_string(particle_count) +
                                " is not positive");
  if (max_iterations < 1)
    throw std::invalid_argument("iteration count " +
                                std::to_string(max_iterations) +
                                " is not positive");
  if (!(chi > 0.0 && chi < 1.0))
    throw std::invalid_argument("constriction factor " + std::to_string(chi) +
                                " outside (0, 1)");
  if (c1 < 0.0 || c2 < 0.0)
    throw std::invalid_argument("negative acceleration coefficient");
  if (stall_window < 1)
    throw std::invalid_argument("stall window " +
                                std::to_string(stall_window) +
                                " is not positive");
  if (tolerance < 0.0)
    throw std::invalid_argument("negative stall tolerance");
}

Vec3 velocity_update(const Particle& p, const Vec3& global_best,
                     const SwarmConfig& cfg, const Vec3& v_max, const Vec3& r,
                     const Vec3& big_r) {
  Vec3 v;
  for (std::size_t j = 0; j < 3; ++j) {
    double raw = cfg.chi * (p.velocity[j] +
                            cfg.c1 * r[j] * (p.best_position[j] - p.position[j]) +
                            cfg.c2 * big_r[j] * (global_best[j] - p.position[j]));
    v[j] = std::clamp(raw, -v_max[j], v_max[j]);
  }
  return v;
}

SnapResult nearest_vertex_snap(
    const Vec3& x, const std::function<double(const Vec3&)>& score) {
  Vec3 lo, hi;
  for (std::size_t j = 0; j < 3; ++j) {
    if (!std::isfinite(x[j]))
      throw std::invalid_argument("non-finite position in vertex snap");
    lo[j] = std::floor(x[j]);
    hi[j] = std::ceil(x[j]);
  }
  SnapResult best;
  Vec3 v;
  for (double b = lo[0];; b = hi[0]) {
    v[0] = b;
    for (double g = lo[1];; g = hi[1]) {
      v[1] = g;
      for (double z = lo[2];; z = hi[2]) {
        v[2] = z;
        double s = score(v);
        // Strict improvement with ascending enumeration keeps the
        // lexicographically lowest vertex on ties.
        if (s < best.score) {
          best.score = s;
          best.vertex = v;
        }
        if (z == hi[2]) break;
      }
      if (g == hi[1]) break;
    }
    if (b == hi[0]) break;
  }
  return best;
}

namespace {

// splitmix64; decorrelates per-particle seeds derived from one run seed.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d49bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

OptimizeResult optimize(const std::function<double(const Vec3&)>& objective,
                        const ConstraintSet& cs, const SwarmConfig& cfg) {
  cs.validate();
  cfg.validate();

  Vec3 width, v_max;
  for (std::size_t j = 0; j < 3; ++j) {
    width[j] = cs.upper[j] - cs.lower[j];
    v_max[j] = cfg.v_max[j] > 0.0 ? cfg.v_max[j] : width[j] / 2.0;
  }

  std::vector<std::mt19937_64> rng;
  rng.reserve(cfg.particle_count);
  for (int i = 0; i < cfg.particle_count; ++i)
    rng.emplace_back(mix64(cfg.seed + 0x51ed2701u) ^ mix64(i + 1));
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  std::vector<Particle> swarm(cfg.particle_count);
  for (int i = 0; i < cfg.particle_count; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      swarm[i].position[j] = cs.lower[j] + u01(rng[i]) * width[j];
      swarm[i].velocity[j] = (2.0 * u01(rng[i]) - 1.0) * 0.1 * width[j];
    }
  }

  OptimizeResult out;
  Vec3 gbest{};
  double gbest_score = std::numeric_limits<double>::infinity();

  for (int n = 1; n <= cfg.max_iterations; ++n) {
    for (Particle& p : swarm) {
      // Track the best penalty-free raw objective across every point
      // actually scored, vertices included.
      auto scored = [&](const Vec3& v) {
        double f = objective(v);
        ++out.evaluations;
        double h = penalty(cs, v, n);
        if (h == 0.0 && f < out.best_score) {
          out.best_score = f;
          out.best_position = v;
          out.feasible_found = true;
        }
        double total = f + h;
        if (total < out.best_penalized_score) {
          out.best_penalized_score = total;
          out.best_penalized_position = v;
        }
        return total;
      };

      Vec3 eval_pos;
      double score;
      if (cfg.discretize) {
        SnapResult snap = nearest_vertex_snap(p.position, scored);
        eval_pos = snap.vertex;
        score = snap.score;
      } else {
        eval_pos = p.position;
        score = scored(p.position);
      }
      if (score < p.best_score) {
        p.best_score = score;
        p.best_position = eval_pos;
      }
    }

    for (const Particle& p : swarm) {
      if (p.best_score < gbest_score) {
        gbest_score = p.best_score;
        gbest = p.best_position;
      }
    }

    for (int i = 0; i < cfg.particle_count; ++i) {
      Particle& p = swarm[i];
      Vec3 r, big_r;
      for (std::size_t j = 0; j < 3; ++j) r[j] = u01(rng[i]);
      for (std::size_t j = 0; j < 3; ++j) big_r[j] = u01(rng[i]);
      p.velocity = velocity_update(p, gbest, cfg, v_max, r, big_r);
      for (std::size_t j = 0; j < 3; ++j) p.position[j] += p.velocity[j];
    }

    out.iterations = n;
    out.history.push_back({n, out.best_score});

    if (cfg.tolerance > 0.0 && out.feasible_found && n > cfg.stall_window) {
      double then = out.history[n - cfg.stall_window - 1].best_score;
      if (std::isfinite(then) && then - out.best_score < cfg.tolerance) break;
    }
  }

  return out;
}

}  // namespace pvopt
