#pragma once

#include <cmath>

#include "wanderer/model.hpp"

namespace wanderer {

// Associative update for one iteration.
//
// A food event strengthens feature->excitatory lines by eta*|delta_s0| and a
// predator event strengthens feature->inhibitory lines by eta*|delta_s1|, for
// every neutral feature present at the time.  Deltas are the post-clamp
// activation changes.  Weights never decrease.
inline AssociativeWeights apply_learning(AssociativeWeights weights,
                                         const Percepts& percepts,
                                         double delta_s0, double delta_s1,
                                         const Params& params) noexcept {
  for (auto f : kFeatures) {
    if (!percepts.features.has(f)) continue;
    if (percepts.food) {
      weights.at(f, Subsystem::excitatory) += params.eta * std::abs(delta_s0);
    }
    if (percepts.predator) {
      weights.at(f, Subsystem::inhibitory) += params.eta * std::abs(delta_s1);
    }
  }
  return weights;
}

}  // namespace wanderer
