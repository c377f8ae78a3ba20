#pragma once

// Motivational dynamics: the exploration output and the per-iteration updates
// of the two subsystems and of the caution (retention) factor.  All functions
// are pure.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "wanderer/model.hpp"

namespace wanderer {

// Exploration emitted by the motor unit.  Zero whenever the excitatory
// subsystem does not exceed the inhibitory one; logistic of the weighted sum
// otherwise.
inline double compute_exploration(const MotivationalState& state,
                                  const Params& params) noexcept {
  if (state.s0 <= state.s1) return 0.0;
  const double drive =
      params.w_excit_motor * state.s0 + params.w_inhib_motor * state.s1;
  return 1.0 / (1.0 + std::exp(-drive));
}

// Weight from perception unit `unit` to `target`.  Food and predator lines are
// fixed; the neutral-feature lines are the learned associations.
inline double perception_weight(std::size_t unit, Subsystem target,
                                const AssociativeWeights& learned,
                                const Params& params) noexcept {
  switch (unit) {
    case 0: return target == Subsystem::excitatory ? params.w_food_excit : 0.0;
    case 1: return target == Subsystem::inhibitory ? params.w_pred_inhib : 0.0;
    default:
      return learned.get(static_cast<Feature>(unit - 2), target);
  }
}

// Sum over the five perception units of weight times activation, in unit
// order 0..4.
inline double net_input(Subsystem target, const Percepts& percepts,
                        const AssociativeWeights& learned,
                        const Params& params) noexcept {
  double sum = 0.0;
  for (std::size_t unit = 0; unit < kPerceptionUnits; ++unit) {
    sum += perception_weight(unit, target, learned, params) *
           percepts.activation(unit);
  }
  return sum;
}

inline double update_excitatory(double s0_prev, double exploration, double net,
                                const Params& params) noexcept {
  return std::max(0.0, params.k0 * (s0_prev + params.w_feedback * exploration +
                                    net));
}

inline double update_inhibitory(double s1_prev, double exploration, double net,
                                double k1, const Params& params) noexcept {
  return std::max(0.0,
                  k1 * (s1_prev + params.w_feedback * exploration + net));
}

// Caution rises with any increase of s1 and relaxes back to the floor as s1
// decays.
inline double update_caution(double k1_prev, double s1_new, double s1_prev,
                             const Params& params) noexcept {
  return std::max(params.k1_min,
                  k1_prev + params.delta_caution * (s1_new - s1_prev));
}

// Field-level check of the Params invariants.  Returns one message per
// violated constraint.
inline std::vector<std::string> check_params(const Params& p) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };
  auto finite = [](double v) { return std::isfinite(v); };
  const std::array<std::pair<const char*, double>, 12> fields = {{
      {"w_excit_motor", p.w_excit_motor}, {"w_inhib_motor", p.w_inhib_motor},
      {"w_feedback", p.w_feedback},       {"k0", p.k0},
      {"k1_init", p.k1_init},             {"k1_min", p.k1_min},
      {"delta_caution", p.delta_caution}, {"eta", p.eta},
      {"w_food_excit", p.w_food_excit},   {"w_pred_inhib", p.w_pred_inhib},
      {"s0_init", p.s0_init},             {"s1_init", p.s1_init},
  }};
  for (const auto& [name, value] : fields) {
    require(finite(value), std::string(name) + " must be finite");
  }
  require(p.k0 > 0, "k0 must be > 0");
  require(p.k1_min > 0, "k1_min must be > 0");
  require(p.k1_init >= p.k1_min,
          "k1_init must be >= k1_min (k1_init in [k1_min, inf))");
  require(p.eta >= 0, "eta must be >= 0");
  require(p.delta_caution >= 0, "delta_caution must be >= 0");
  require(p.w_excit_motor > 0, "w_excit_motor must be > 0");
  require(p.w_inhib_motor < 0, "w_inhib_motor must be < 0");
  require(p.w_feedback < 0, "w_feedback must be < 0");
  require(p.w_food_excit < 0, "w_food_excit must be < 0");
  require(p.w_pred_inhib > 0, "w_pred_inhib must be > 0");
  require(p.s0_init >= 0, "s0_init must be >= 0");
  require(p.s1_init >= 0, "s1_init must be >= 0");
  return errors;
}

}  // namespace wanderer
