#pragma once

// Run-configuration files.
//
// A run configuration is a YAML mapping with flat keys.  Every key is
// optional; omitted keys keep the model defaults.  Unknown keys are rejected.
//
//   seed: 42
//   iterations: 200
//   k0: 1.05                 # any Params field by name
//   c1: 0.75                 # environment coefficients c1, c2, c3
//   c2: 0.5
//   c3: 0.0
//   initial_features: random # or {tree: 1, rock: 0, sun: 1}
//   freeze_k1: false
//   learning_enabled: true
//   schedule:
//     - {at: 1, event: suppress-stochastic}
//     - {at: 24, event: force-food}
//     - {at: 30, event: set-feature, feature: sun, value: 1}

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <system_error>

#include "wanderer/engine.hpp"
#include "wanderer/errors.hpp"

namespace wanderer {

// Shortest decimal text that parses back to exactly `v`.
inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace yaml {

inline std::string where(const YAML::Node& node) {
  const auto m = node.Mark();
  if (m.is_null()) return "";
  return " (line " + std::to_string(m.line + 1) + ", column " +
         std::to_string(m.column + 1) + ")";
}

inline YAML::Node load(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError("syntax error at line " + std::to_string(e.mark.line + 1) +
                      ", column " + std::to_string(e.mark.column + 1) + ": " +
                      e.msg);
  }
}

inline std::string scalar(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) throw ConfigError(key + ": expected a scalar" + where(node));
  return node.Scalar();
}

inline double real(const YAML::Node& node, const std::string& key) {
  const auto text = scalar(node, key);
  double v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ConfigError(key + ": expected a number, got '" + text + "'" + where(node));
  }
  return v;
}

template <typename Int>
Int integer(const YAML::Node& node, const std::string& key) {
  const auto text = scalar(node, key);
  Int v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'" + where(node));
  }
  return v;
}

inline bool boolean(const YAML::Node& node, const std::string& key) {
  const auto text = scalar(node, key);
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(key + ": expected true/false or 1/0, got '" + text + "'" + where(node));
}

// Iterates a mapping, rejecting keys without a handler.
inline void for_each_key(
    const YAML::Node& map, const std::string& context,
    const std::map<std::string, std::function<void(const YAML::Node&)>>& handlers) {
  if (!map || map.IsNull()) return;
  if (!map.IsMap()) throw ConfigError(context + ": expected a mapping" + where(map));
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    const auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw ConfigError(context + ": unknown key '" + key + "'" + where(kv.first));
    }
    it->second(kv.second);
  }
}

}  // namespace yaml

namespace detail {

inline std::map<std::string, double Params::*> param_fields() {
  return {
      {"w_excit_motor", &Params::w_excit_motor},
      {"w_inhib_motor", &Params::w_inhib_motor},
      {"w_feedback", &Params::w_feedback},
      {"k0", &Params::k0},
      {"k1_init", &Params::k1_init},
      {"k1_min", &Params::k1_min},
      {"delta_caution", &Params::delta_caution},
      {"eta", &Params::eta},
      {"w_food_excit", &Params::w_food_excit},
      {"w_pred_inhib", &Params::w_pred_inhib},
      {"s0_init", &Params::s0_init},
      {"s1_init", &Params::s1_init},
  };
}

inline std::optional<EnvState> parse_initial_features(const YAML::Node& node) {
  if (node.IsScalar()) {
    if (node.Scalar() == "random") return std::nullopt;
    throw ConfigError("initial_features: expected 'random' or a mapping" +
                      yaml::where(node));
  }
  EnvState env;
  std::set<std::string> seen;
  std::map<std::string, std::function<void(const YAML::Node&)>> handlers;
  for (auto f : kFeatures) {
    const std::string name(to_string(f));
    handlers[name] = [&env, &seen, f, name](const YAML::Node& v) {
      env.set(f, yaml::boolean(v, "initial_features." + name));
      seen.insert(name);
    };
  }
  yaml::for_each_key(node, "initial_features", handlers);
  if (seen.size() != kFeatureCount) {
    throw ConfigError("initial_features: tree, rock and sun are all required" +
                      yaml::where(node));
  }
  return env;
}

inline ScheduledEvent parse_event(const YAML::Node& node) {
  ScheduledEvent e;
  bool has_at = false, has_event = false, has_feature = false, has_value = false;
  yaml::for_each_key(node, "schedule entry",
      {{"at", [&](const YAML::Node& v) { e.at = yaml::integer<int>(v, "schedule.at"); has_at = true; }},
       {"event", [&](const YAML::Node& v) {
          const auto name = yaml::scalar(v, "schedule.event");
          const auto d = parse_directive(name);
          if (!d) throw ConfigError("schedule.event: unknown directive '" + name + "'" + yaml::where(v));
          e.directive = *d;
          has_event = true;
        }},
       {"feature", [&](const YAML::Node& v) {
          const auto name = yaml::scalar(v, "schedule.feature");
          const auto f = parse_feature(name);
          if (!f) throw ConfigError("schedule.feature: unknown feature '" + name + "'" + yaml::where(v));
          e.feature = *f;
          has_feature = true;
        }},
       {"value", [&](const YAML::Node& v) { e.value = yaml::boolean(v, "schedule.value"); has_value = true; }}});
  if (!has_at || !has_event) {
    throw ConfigError("schedule entry: 'at' and 'event' are required" + yaml::where(node));
  }
  const bool is_set = e.directive == Directive::set_feature;
  if (is_set != has_feature || is_set != has_value) {
    throw ConfigError(std::string("schedule entry: 'feature' and 'value' are ") +
                      (is_set ? "required for" : "only allowed with") +
                      " set-feature" + yaml::where(node));
  }
  return e;
}

}  // namespace detail

// Applies the keys of `map` on top of `config` without validating ranges.
inline void apply_config_keys(RunConfig& config, const YAML::Node& map,
                              const std::string& context = "config") {
  std::map<std::string, std::function<void(const YAML::Node&)>> handlers;
  handlers["seed"] = [&](const YAML::Node& v) { config.seed = yaml::integer<std::uint64_t>(v, "seed"); };
  handlers["iterations"] = [&](const YAML::Node& v) { config.iterations = yaml::integer<int>(v, "iterations"); };
  for (const auto& [name, member] : detail::param_fields()) {
    handlers[name] = [&config, member = member, name = name](const YAML::Node& v) {
      config.params.*member = yaml::real(v, name);
    };
  }
  handlers["c1"] = [&](const YAML::Node& v) { config.env.c1 = yaml::real(v, "c1"); };
  handlers["c2"] = [&](const YAML::Node& v) { config.env.c2 = yaml::real(v, "c2"); };
  handlers["c3"] = [&](const YAML::Node& v) { config.env.c3 = yaml::real(v, "c3"); };
  handlers["initial_features"] = [&](const YAML::Node& v) {
    config.env.initial_features = detail::parse_initial_features(v);
  };
  handlers["freeze_k1"] = [&](const YAML::Node& v) { config.freeze_k1 = yaml::boolean(v, "freeze_k1"); };
  handlers["learning_enabled"] = [&](const YAML::Node& v) {
    config.learning_enabled = yaml::boolean(v, "learning_enabled");
  };
  handlers["schedule"] = [&](const YAML::Node& v) {
    if (v.IsNull()) return;
    if (!v.IsSequence()) throw ConfigError("schedule: expected a list" + yaml::where(v));
    EventSchedule schedule;
    for (const auto& item : v) schedule.add(detail::parse_event(item));
    config.schedule = std::move(schedule);
  };
  yaml::for_each_key(map, context, handlers);
}

// Parses and validates a run configuration.  Omitted keys take defaults.
inline RunConfig parse_config(const std::string& text) {
  RunConfig config;
  apply_config_keys(config, yaml::load(text));
  validate(config);
  return config;
}

// Canonical text form; parse_config(render_config(c)) == c.
inline std::string render_config(const RunConfig& c) {
  std::ostringstream out;
  out << "seed: " << c.seed << "\n";
  out << "iterations: " << c.iterations << "\n";
  for (const auto& [name, member] : detail::param_fields()) {
    out << name << ": " << format_real(c.params.*member) << "\n";
  }
  out << "c1: " << format_real(c.env.c1) << "\n";
  out << "c2: " << format_real(c.env.c2) << "\n";
  out << "c3: " << format_real(c.env.c3) << "\n";
  if (c.env.initial_features) {
    const auto& f = *c.env.initial_features;
    out << "initial_features: {tree: " << f.tree() << ", rock: " << f.rock()
        << ", sun: " << f.sun() << "}\n";
  } else {
    out << "initial_features: random\n";
  }
  out << "freeze_k1: " << (c.freeze_k1 ? "true" : "false") << "\n";
  out << "learning_enabled: " << (c.learning_enabled ? "true" : "false") << "\n";
  if (c.schedule.empty()) {
    out << "schedule: []\n";
  } else {
    out << "schedule:\n";
    for (const auto& e : c.schedule.events()) {
      out << "  - {at: " << e.at << ", event: " << to_string(e.directive);
      if (e.directive == Directive::set_feature) {
        out << ", feature: " << to_string(e.feature) << ", value: " << e.value;
      }
      out << "}\n";
    }
  }
  return out.str();
}

}  // namespace wanderer
