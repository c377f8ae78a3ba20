#pragma once

// Named scenarios fig2..fig6.  Every preset runs 200 iterations with the
// default model constants.  Scripted twins replace sampling with a fixed event
// schedule.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wanderer/config.hpp"
#include "wanderer/engine.hpp"

namespace wanderer {

struct Preset {
  std::string name;
  std::string description;
  RunConfig config;
  std::vector<std::string> notes;
};

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4", "fig5", "fig6"};
  return names;
}

namespace detail {

inline EnvState features(bool tree, bool rock, bool sun) {
  EnvState env;
  env.set(Feature::tree, tree);
  env.set(Feature::rock, rock);
  env.set(Feature::sun, sun);
  return env;
}

class ScheduleBuilder {
 public:
  ScheduleBuilder& suppress(int at) { return push({at, Directive::suppress_stochastic}); }
  ScheduleBuilder& food(int at) { return push({at, Directive::force_food}); }
  ScheduleBuilder& predator(int at) { return push({at, Directive::force_predator}); }
  ScheduleBuilder& set(int at, Feature f, bool v) {
    return push({at, Directive::set_feature, f, v});
  }
  EventSchedule build() const {
    // Stable by iteration so per-type ordering holds regardless of how the
    // builder calls were grouped.
    auto sorted = events_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.at < b.at; });
    EventSchedule s;
    for (const auto& e : sorted) s.add(e);
    return s;
  }

 private:
  ScheduleBuilder& push(ScheduledEvent e) {
    events_.push_back(e);
    return *this;
  }
  std::vector<ScheduledEvent> events_;
};

}  // namespace detail

// Scripted fig3 predator iterations.
inline constexpr int kFig3Encounters[] = {15, 20, 33};

inline std::optional<Preset> make_preset(const std::string& name, bool scripted,
                                         std::uint64_t seed) {
  using detail::features;
  Preset p;
  p.name = scripted ? name + "-scripted" : name;
  RunConfig& c = p.config;
  c.seed = seed;
  c.iterations = 200;
  detail::ScheduleBuilder sched;
  sched.suppress(1);

  if (name == "fig2") {
    p.description = "satiety: food likely, no predators, learning off";
    c.env.c2 = 0.5;
    c.env.c3 = 0.0;
    c.learning_enabled = false;
    c.env.initial_features = features(true, false, false);
    if (scripted) {
      for (int t = 5; t <= 200; t += 10) sched.food(t);
      p.notes.push_back("scripted: food every 10 iterations from t=5, tree always present");
    }
  } else if (name == "fig3") {
    p.description = "caution: predators likely, no food, learning off";
    c.env.c2 = 0.0;
    c.env.c3 = 0.25;
    c.learning_enabled = false;
    c.env.initial_features = features(false, true, false);
    if (scripted) {
      for (int t : kFig3Encounters) sched.predator(t);
      p.notes.push_back("scripted: predators at t=15, 20, 33, rock always present");
    }
  } else if (name == "fig4") {
    p.description = "associative learning with food, no predators";
    c.env.c2 = 0.5;
    c.env.c3 = 0.0;
    c.env.initial_features = features(true, true, true);
    if (scripted) {
      sched.set(12, Feature::rock, false)
          .food(24)
          .food(80)
          .set(80, Feature::sun, false)
          .set(84, Feature::tree, false)
          .set(155, Feature::rock, true)
          .set(176, Feature::sun, true)
          .set(184, Feature::sun, false)
          .set(193, Feature::tree, true)
          .food(195);
      p.notes.push_back(
          "scripted: rocks leave at 12; food at 24, 80, 195; sun leaves at 80; tree leaves "
          "at 84; rocks return at 155; sun present 176-183; tree returns at 193");
    }
  } else if (name == "fig5") {
    p.description = "associative learning with predation, caution held constant";
    c.env.c2 = 0.5;
    c.env.c3 = 0.25;
    c.freeze_k1 = true;
    p.notes.push_back(
        "the fig5 caption repeats the fig4 caption (no predators); this preset uses the high "
        "predation rate described in the accompanying text");
    if (scripted) {
      c.env.initial_features = features(true, true, true);
      for (int t = 10; t <= 170; t += 20) sched.predator(t);
      sched.food(20).food(60).food(100).set(175, Feature::sun, false);
      p.notes.push_back(
          "scripted: all features present; predators every 20 iterations from t=10 to 170; "
          "food at 20, 60, 100; sun leaves at 175");
    }
  } else if (name == "fig6") {
    p.description = "associative learning with both food and predators";
    c.env.c2 = 0.5;
    c.env.c3 = 0.05;
    p.notes.push_back(
        "c3 = 0.05 keeps runs below the caution runaway (k1 > 1) that overflows binary64 in "
        "most runs at higher predation rates");
    if (scripted) {
      c.env.initial_features = features(true, true, false);
      for (int base = 0; base <= 150; base += 30) {
        sched.set(base + 5, Feature::rock, false)
            .food(base + 10)
            .set(base + 15, Feature::rock, true)
            .set(base + 17, Feature::tree, false)
            .predator(base + 20)
            .set(base + 25, Feature::tree, true);
      }
      sched.set(35, Feature::sun, true).set(55, Feature::sun, false);
      p.notes.push_back(
          "scripted: every 30 iterations from t=0 rocks leave at +5, food at +10, rocks return "
          "at +15, tree leaves at +17, predator at +20, tree returns at +25; sun present 35-54");
    }
  } else {
    return std::nullopt;
  }

  if (scripted) {
    c.schedule = sched.build();
    p.notes.push_back("scripted: stochastic toggles and events are suppressed from t=1");
  }
  p.notes.push_back("c2 and c3 are chosen values; only their high-or-zero level is given for these scenarios");
  validate(c);
  return p;
}

struct RunSummary {
  std::vector<int> food_iterations;
  std::vector<int> predator_iterations;
  double min_E = 0.0;
  int min_E_at = 0;
  double max_E = 0.0;
  int max_E_at = 0;
  double mean_E = 0.0;
  double total_E = 0.0;
  std::optional<int> first_cessation;  // first E == 0 after some E > 0
  AssociativeWeights final_weights;
};

inline RunSummary summarize(const Trace& trace) {
  RunSummary s;
  if (trace.empty()) return s;
  s.min_E = s.max_E = trace.front().E;
  s.min_E_at = s.max_E_at = trace.front().t;
  bool explored = false;
  for (const auto& r : trace) {
    if (r.food) s.food_iterations.push_back(r.t);
    if (r.predator) s.predator_iterations.push_back(r.t);
    if (r.E < s.min_E) { s.min_E = r.E; s.min_E_at = r.t; }
    if (r.E > s.max_E) { s.max_E = r.E; s.max_E_at = r.t; }
    s.total_E += r.E;
    if (r.E > 0) explored = true;
    if (explored && r.E == 0 && !s.first_cessation) s.first_cessation = r.t;
  }
  s.mean_E = s.total_E / static_cast<double>(trace.size());
  s.final_weights = trace.back().weights;
  return s;
}

inline std::string render_summary(const Preset& preset, const Trace& trace) {
  const auto s = summarize(trace);
  auto list = [](const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
  };
  std::ostringstream out;
  out << "preset: " << preset.name << "\n";
  out << "description: " << preset.description << "\n";
  out << "notes:\n";
  for (const auto& n : preset.notes) out << "  - \"" << n << "\"\n";
  out << "config:\n";
  std::istringstream cfg(render_config(preset.config));
  for (std::string line; std::getline(cfg, line);) out << "  " << line << "\n";
  out << "summary:\n";
  out << "  food_iterations: " << list(s.food_iterations) << "\n";
  out << "  predator_iterations: " << list(s.predator_iterations) << "\n";
  out << "  min_E: {value: " << format_real(s.min_E) << ", t: " << s.min_E_at << "}\n";
  out << "  max_E: {value: " << format_real(s.max_E) << ", t: " << s.max_E_at << "}\n";
  out << "  mean_E: " << format_real(s.mean_E) << "\n";
  out << "  first_cessation: "
      << (s.first_cessation ? std::to_string(*s.first_cessation) : std::string("none")) << "\n";
  out << "  final_weights:\n";
  for (auto f : kFeatures) {
    out << "    " << to_string(f)
        << ": {excitatory: " << format_real(s.final_weights.get(f, Subsystem::excitatory))
        << ", inhibitory: " << format_real(s.final_weights.get(f, Subsystem::inhibitory))
        << "}\n";
  }
  return out.str();
}

}  // namespace wanderer
