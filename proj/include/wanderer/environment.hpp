#pragma once

// Stochastic world driven by the previous iteration's exploration.  Food
// requires a tree; a predator requires a rock.  A scripted event schedule can
// override any outcome.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "wanderer/errors.hpp"
#include "wanderer/model.hpp"
#include "wanderer/random.hpp"

namespace wanderer {

struct EnvConfig {
  double c1 = 0.75;  // feature toggle coefficient
  double c2 = 0.0;   // food coefficient
  double c3 = 0.0;   // predator coefficient
  // nullopt means three fair-coin draws (tree, rock, sun) before iteration 1.
  std::optional<EnvState> initial_features;

  friend bool operator==(const EnvConfig&, const EnvConfig&) = default;
};

inline std::vector<std::string> check_env_config(const EnvConfig& c) {
  std::vector<std::string> errors;
  if (!(c.c1 >= 0 && c.c1 <= 1)) errors.push_back("c1 must be in [0, 1]");
  if (!(c.c2 >= 0 && std::isfinite(c.c2)))
    errors.push_back("c2 must be finite and >= 0");
  if (!(c.c3 >= 0 && c.c3 <= 1)) errors.push_back("c3 must be in [0, 1]");
  return errors;
}

// ---------------------------------------------------------------------------
// Scripted events

enum class Directive { force_food, force_predator, set_feature, suppress_stochastic };

constexpr std::string_view to_string(Directive d) noexcept {
  switch (d) {
    case Directive::force_food: return "force-food";
    case Directive::force_predator: return "force-predator";
    case Directive::set_feature: return "set-feature";
    case Directive::suppress_stochastic: return "suppress-stochastic";
  }
  return "?";
}

inline std::optional<Directive> parse_directive(std::string_view s) noexcept {
  for (auto d : {Directive::force_food, Directive::force_predator,
                 Directive::set_feature, Directive::suppress_stochastic}) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

struct ScheduledEvent {
  int at = 1;
  Directive directive = Directive::force_food;
  Feature feature = Feature::tree;  // set-feature only
  bool value = false;               // set-feature only

  friend bool operator==(const ScheduledEvent&, const ScheduledEvent&) = default;
};

// Ordered list of directives.  Iterations must be >= 1 and strictly
// increasing per directive type (per feature for set-feature) in insertion
// order.  suppress-stochastic switches stochastic outcomes off from its
// iteration until the end of the run.
class EventSchedule {
 public:
  EventSchedule() = default;

  void add(const ScheduledEvent& e) {
    if (e.at < 1) {
      throw ConfigError("schedule: iteration must be >= 1, got " +
                        std::to_string(e.at));
    }
    const auto key = std::make_pair(e.directive, e.directive == Directive::set_feature
                                                     ? static_cast<int>(e.feature)
                                                     : -1);
    if (auto it = last_at_.find(key); it != last_at_.end() && e.at <= it->second) {
      throw ConfigError("schedule: " + std::string(to_string(e.directive)) +
                        " iterations must be strictly increasing (" +
                        std::to_string(it->second) + " then " +
                        std::to_string(e.at) + ")");
    }
    last_at_[key] = e.at;
    events_.push_back(e);
  }

  const std::vector<ScheduledEvent>& events() const noexcept { return events_; }
  bool empty() const noexcept { return events_.empty(); }

  std::vector<ScheduledEvent> events_at(int t) const {
    std::vector<ScheduledEvent> out;
    for (const auto& e : events_) {
      if (e.at == t) out.push_back(e);
    }
    return out;
  }

  bool suppressed_at(int t) const noexcept {
    return std::any_of(events_.begin(), events_.end(), [t](const auto& e) {
      return e.directive == Directive::suppress_stochastic && e.at <= t;
    });
  }

  int last_iteration() const noexcept {
    int last = 0;
    for (const auto& e : events_) last = std::max(last, e.at);
    return last;
  }

  friend bool operator==(const EventSchedule& a, const EventSchedule& b) {
    return a.events_ == b.events_;
  }

 private:
  std::vector<ScheduledEvent> events_;
  std::map<std::pair<Directive, int>, int> last_at_;
};

// ---------------------------------------------------------------------------
// Sampling.  Each function consumes a fixed number of draws regardless of the
// outcome.

// Each feature flips independently with probability c1 * E_prev.  Three draws,
// in the order tree, rock, sun.
inline EnvState toggle_neutral_features(EnvState env, double exploration_prev,
                                        double c1, RandomStream& rng) noexcept {
  const double p = c1 * exploration_prev;
  for (auto f : kFeatures) {
    if (rng.bernoulli(p)) env.set(f, !env.has(f));
  }
  return env;
}

// One draw.  Probability min(1, c2 * E_prev) when a tree is present, else 0.
inline bool sample_food(const EnvState& env, double exploration_prev, double c2,
                        RandomStream& rng) noexcept {
  const double p = std::min(1.0, c2 * exploration_prev);
  const bool hit = rng.bernoulli(p);
  return env.tree() && hit;
}

// One draw.  Probability c3 when a rock is present, else 0.
inline bool sample_predator(const EnvState& env, double c3,
                            RandomStream& rng) noexcept {
  const bool hit = rng.bernoulli(c3);
  return env.rock() && hit;
}

struct EnvOutcome {
  EnvState env;
  bool food = false;
  bool predator = false;

  friend bool operator==(const EnvOutcome&, const EnvOutcome&) = default;
};

// Applies the directives registered for iteration t on top of the sampled
// outcome.  While suppression is active the sampled toggles and events are
// discarded (env reverts to `before`).  Feature settings are applied before
// forced events, and a forced event whose gating feature is absent after all
// settings is a schedule violation.
inline EnvOutcome apply_schedule(EnvOutcome sampled, const EnvState& before,
                                 const EventSchedule& schedule, int t) {
  if (schedule.empty()) return sampled;
  if (schedule.suppressed_at(t)) sampled = EnvOutcome{before, false, false};

  const auto events = schedule.events_at(t);
  for (const auto& e : events) {
    if (e.directive == Directive::set_feature) sampled.env.set(e.feature, e.value);
  }
  for (const auto& e : events) {
    if (e.directive == Directive::force_food) {
      if (!sampled.env.tree()) {
        throw ScheduleViolation("schedule: force-food at iteration " +
                                std::to_string(t) + " but no tree is present");
      }
      sampled.food = true;
    } else if (e.directive == Directive::force_predator) {
      if (!sampled.env.rock()) {
        throw ScheduleViolation("schedule: force-predator at iteration " +
                                std::to_string(t) + " but no rock is present");
      }
      sampled.predator = true;
    }
  }
  return sampled;
}

// Full environment phase of one iteration: toggles, food, predator, then the
// schedule.  Always consumes exactly five draws.
inline EnvOutcome environment_phase(const EnvState& before,
                                    double exploration_prev,
                                    const EnvConfig& config,
                                    const EventSchedule& schedule, int t,
                                    RandomStream& rng) {
  EnvOutcome out;
  out.env = toggle_neutral_features(before, exploration_prev, config.c1, rng);
  out.food = sample_food(out.env, exploration_prev, config.c2, rng);
  out.predator = sample_predator(out.env, config.c3, rng);
  return apply_schedule(out, before, schedule, t);
}

// Initial features: fixed by the config, or three fair-coin draws.
inline EnvState initial_environment(const EnvConfig& config, RandomStream& rng) {
  if (config.initial_features) return *config.initial_features;
  EnvState env;
  for (auto f : kFeatures) env.set(f, rng.bernoulli(0.5));
  return env;
}

}  // namespace wanderer
