#pragma once

// Deterministic simulation loop.  Each iteration runs, in order:
//   1. environment phase with the previous exploration (toggles, food,
//      predator, schedule overrides)
//   2. exploration from the previous motivational state
//   3. subsystem updates using this iteration's exploration and percepts
//   4. caution update from the post-clamp change of s1
//   5. associative learning from the post-clamp changes
//   6. trace row
// The order is part of the reproducibility contract.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wanderer/dynamics.hpp"
#include "wanderer/environment.hpp"
#include "wanderer/errors.hpp"
#include "wanderer/learning.hpp"
#include "wanderer/model.hpp"
#include "wanderer/random.hpp"

namespace wanderer {

struct RunConfig {
  std::uint64_t seed = 0;
  int iterations = 200;
  Params params;
  EnvConfig env;
  EventSchedule schedule;
  bool freeze_k1 = false;
  bool learning_enabled = true;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline std::vector<std::string> check_run_config(const RunConfig& c) {
  auto errors = check_params(c.params);
  for (auto& e : check_env_config(c.env)) errors.push_back(std::move(e));
  if (c.iterations < 1) errors.push_back("iterations must be >= 1");
  if (c.schedule.last_iteration() > c.iterations) {
    errors.push_back("schedule: event at iteration " +
                     std::to_string(c.schedule.last_iteration()) +
                     " is beyond iterations = " + std::to_string(c.iterations));
  }
  return errors;
}

// Throws ConfigError listing every violated constraint.
inline void validate(const RunConfig& c) {
  const auto errors = check_run_config(c);
  if (errors.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw ConfigError(msg);
}

struct WorldState {
  int t = 0;  // iterations completed
  MotivationalState motivational;
  EnvState env;
  Percepts percepts;
  AssociativeWeights weights;
  double exploration_prev = 0.0;
  RandomStream rng;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

struct TraceRow {
  int t = 0;
  double E = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
  double k1 = 0.0;
  bool food = false;
  bool predator = false;
  EnvState env;
  AssociativeWeights weights;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

using Trace = std::vector<TraceRow>;

inline WorldState init(const RunConfig& config) {
  validate(config);
  WorldState w;
  w.rng = RandomStream(config.seed);
  w.motivational = {config.params.s0_init, config.params.s1_init,
                    config.params.k1_init};
  w.env = initial_environment(config.env, w.rng);
  w.percepts = Percepts{false, false, w.env};
  return w;
}

namespace detail {

inline void require_finite(const WorldState& w) {
  auto check = [&](double v, const char* name) {
    if (!std::isfinite(v)) {
      throw DivergenceError(std::string(name) +
                                " left the finite binary64 range at iteration " +
                                std::to_string(w.t),
                            w.t);
    }
  };
  check(w.motivational.s0, "s0");
  check(w.motivational.s1, "s1");
  check(w.motivational.k1, "k1");
  for (auto f : kFeatures) {
    check(w.weights.get(f, Subsystem::excitatory), "learned weight");
    check(w.weights.get(f, Subsystem::inhibitory), "learned weight");
  }
}

}  // namespace detail

inline std::pair<WorldState, TraceRow> step(WorldState world,
                                            const RunConfig& config) {
  const Params& p = config.params;
  const int t = world.t + 1;

  const EnvOutcome outcome =
      environment_phase(world.env, world.exploration_prev, config.env,
                        config.schedule, t, world.rng);
  const Percepts percepts{outcome.food, outcome.predator, outcome.env};

  const MotivationalState prev = world.motivational;
  const double E = compute_exploration(prev, p);

  const double net0 = net_input(Subsystem::excitatory, percepts, world.weights, p);
  const double net1 = net_input(Subsystem::inhibitory, percepts, world.weights, p);
  MotivationalState next;
  next.s0 = update_excitatory(prev.s0, E, net0, p);
  next.s1 = update_inhibitory(prev.s1, E, net1, prev.k1, p);
  next.k1 = config.freeze_k1 ? prev.k1 : update_caution(prev.k1, next.s1, prev.s1, p);

  if (config.learning_enabled) {
    world.weights = apply_learning(world.weights, percepts, next.s0 - prev.s0,
                                   next.s1 - prev.s1, p);
  }

  world.t = t;
  world.env = outcome.env;
  world.percepts = percepts;
  world.motivational = next;
  world.exploration_prev = E;
  detail::require_finite(world);

  TraceRow row{t,       E,         next.s0,    next.s1,      next.k1,
               outcome.food, outcome.predator, outcome.env, world.weights};
  return {std::move(world), row};
}

inline Trace run(const RunConfig& config) {
  WorldState world = init(config);
  Trace trace;
  trace.reserve(static_cast<std::size_t>(config.iterations));
  for (int i = 0; i < config.iterations; ++i) {
    auto [next, row] = step(std::move(world), config);
    world = std::move(next);
    trace.push_back(row);
  }
  return trace;
}

}  // namespace wanderer
