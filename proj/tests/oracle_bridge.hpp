#pragma once

// Conversion between engine state and the naive oracle, plus a generator of
// random world states for equivalence checks.

#include <cstring>
#include <random>

#include "naive_step.hpp"
#include "wanderer/engine.hpp"

namespace wanderer::testing {

inline naive::Model to_naive(const WorldState& w, const RunConfig& c) {
  const Params& p = c.params;
  naive::Model m{};
  m.w0 = p.w_excit_motor;
  m.w1 = p.w_inhib_motor;
  m.wf = p.w_feedback;
  m.k0 = p.k0;
  m.k1min = p.k1_min;
  m.dk = p.delta_caution;
  m.eta = p.eta;
  m.w00 = p.w_food_excit;
  m.w11 = p.w_pred_inhib;
  m.c1 = c.env.c1;
  m.c2 = c.env.c2;
  m.c3 = c.env.c3;
  m.learn = c.learning_enabled;
  m.freeze = c.freeze_k1;
  m.s0 = w.motivational.s0;
  m.s1 = w.motivational.s1;
  m.k1 = w.motivational.k1;
  m.Eprev = w.exploration_prev;
  m.a[0] = w.percepts.food;
  m.a[1] = w.percepts.predator;
  for (int i = 0; i < 3; ++i) {
    m.a[2 + i] = w.env.present[i];
    m.w[2 + i][0] = w.weights.w[i][0];
    m.w[2 + i][1] = w.weights.w[i][1];
  }
  m.rng = {w.rng.seed(), w.rng.counter()};
  return m;
}

inline bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

struct RandomCase {
  RunConfig config;
  WorldState world;
};

inline RandomCase random_case(std::mt19937_64& gen, int index) {
  std::uniform_real_distribution<double> s(0.0, 3.0), k(0.5, 1.5), w(0.0, 0.5), e(0.0, 0.999),
      c(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> skip(0, 20);
  RandomCase rc;
  rc.config.env.c1 = c(gen);
  rc.config.env.c2 = 2.0 * c(gen);
  rc.config.env.c3 = c(gen);
  rc.config.learning_enabled = coin(gen);
  rc.config.freeze_k1 = coin(gen);

  WorldState& world = rc.world;
  world.t = index % 50;
  world.motivational = {s(gen), coin(gen) ? s(gen) : 0.0, k(gen)};
  for (auto f : kFeatures) world.env.set(f, coin(gen));
  world.percepts.features = world.env;
  for (auto& row : world.weights.w) {
    for (auto& v : row) v = coin(gen) ? w(gen) : 0.0;
  }
  world.exploration_prev = coin(gen) ? e(gen) : 0.0;
  world.rng = RandomStream(gen());
  for (int i = skip(gen); i > 0; --i) world.rng.uniform();
  return rc;
}

// Empty string when the engine and the oracle agree bit-for-bit.
inline std::string compare_with_oracle(const RandomCase& rc) {
  auto m = to_naive(rc.world, rc.config);
  naive::step(m);
  const auto [next, row] = step(rc.world, rc.config);
  if (!same_bits(row.E, m.Eprev)) return "E";
  if (!same_bits(next.motivational.s0, m.s0)) return "s0";
  if (!same_bits(next.motivational.s1, m.s1)) return "s1";
  if (!same_bits(next.motivational.k1, m.k1)) return "k1";
  if (row.food != (m.a[0] == 1)) return "food";
  if (row.predator != (m.a[1] == 1)) return "predator";
  for (int i = 0; i < 3; ++i) {
    if (next.env.present[i] != (m.a[2 + i] == 1)) return "features";
    if (!same_bits(next.weights.w[i][0], m.w[2 + i][0])) return "excitatory weights";
    if (!same_bits(next.weights.w[i][1], m.w[2 + i][1])) return "inhibitory weights";
  }
  if (next.rng.counter() != m.rng.n) return "draw count";
  return "";
}

}  // namespace wanderer::testing
