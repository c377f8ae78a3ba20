#pragma once

// Domain types shared by the dynamics, learning, environment and engine.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace wanderer {

enum class Subsystem : std::size_t { excitatory = 0, inhibitory = 1 };

// Neutral features in perception-unit order (units 2, 3, 4).
enum class Feature : std::size_t { tree = 0, rock = 1, sun = 2 };

inline constexpr std::size_t kFeatureCount = 3;
inline constexpr std::size_t kSubsystemCount = 2;
inline constexpr std::size_t kPerceptionUnits = 5;

inline constexpr std::array<Feature, kFeatureCount> kFeatures = {
    Feature::tree, Feature::rock, Feature::sun};

constexpr std::string_view to_string(Feature f) noexcept {
  switch (f) {
    case Feature::tree: return "tree";
    case Feature::rock: return "rock";
    case Feature::sun: return "sun";
  }
  return "?";
}

constexpr std::optional<Feature> parse_feature(std::string_view name) noexcept {
  for (auto f : kFeatures) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

// Fixed model constants.  The excitatory subsystem drives the motor unit and
// the inhibitory subsystem suppresses it.
struct Params {
  double w_excit_motor = 0.5;
  double w_inhib_motor = -0.5;
  double w_feedback = -0.1;
  double k0 = 1.05;
  double k1_init = 0.5;
  double k1_min = 0.5;
  double delta_caution = 0.2;
  double eta = 0.05;
  double w_food_excit = -0.5;
  double w_pred_inhib = 0.9;
  double s0_init = 0.9;
  double s1_init = 0.9;

  friend bool operator==(const Params&, const Params&) = default;
};

struct MotivationalState {
  double s0 = 0.0;  // excitatory (hunger)
  double s1 = 0.0;  // inhibitory (caution)
  double k1 = 0.0;  // current retention factor of s1

  friend bool operator==(const MotivationalState&,
                         const MotivationalState&) = default;
};

// Presence of the three neutral features.
struct EnvState {
  std::array<bool, kFeatureCount> present{};

  constexpr bool has(Feature f) const noexcept {
    return present[static_cast<std::size_t>(f)];
  }
  constexpr void set(Feature f, bool value) noexcept {
    present[static_cast<std::size_t>(f)] = value;
  }
  constexpr bool tree() const noexcept { return has(Feature::tree); }
  constexpr bool rock() const noexcept { return has(Feature::rock); }
  constexpr bool sun() const noexcept { return has(Feature::sun); }

  friend bool operator==(const EnvState&, const EnvState&) = default;
};

// Activations of the five binary perception units.
struct Percepts {
  bool food = false;      // unit 0
  bool predator = false;  // unit 1
  EnvState features;      // units 2 (tree), 3 (rock), 4 (sun)

  // Activation of unit i as 0.0 or 1.0.
  constexpr double activation(std::size_t unit) const noexcept {
    switch (unit) {
      case 0: return food ? 1.0 : 0.0;
      case 1: return predator ? 1.0 : 0.0;
      default: return features.present[unit - 2] ? 1.0 : 0.0;
    }
  }

  // Food needs a tree and a predator needs a rock in the same iteration.
  constexpr bool consistent() const noexcept {
    return (!food || features.tree()) && (!predator || features.rock());
  }

  friend bool operator==(const Percepts&, const Percepts&) = default;
};

// Learnable weights from the neutral features to the two subsystems.
struct AssociativeWeights {
  std::array<std::array<double, kSubsystemCount>, kFeatureCount> w{};

  constexpr double get(Feature f, Subsystem s) const noexcept {
    return w[static_cast<std::size_t>(f)][static_cast<std::size_t>(s)];
  }
  constexpr double& at(Feature f, Subsystem s) noexcept {
    return w[static_cast<std::size_t>(f)][static_cast<std::size_t>(s)];
  }

  friend bool operator==(const AssociativeWeights&,
                         const AssociativeWeights&) = default;
};

}  // namespace wanderer
