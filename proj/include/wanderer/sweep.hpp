#pragma once

// Parameter sweeps over the cartesian product of per-parameter value lists,
// with independent replicate streams per cell.
//
// Spec file (YAML):
//
//   base:                 # run-config keys, same grammar as a run config
//     c3: 0.0
//   parameters:
//     - {path: k1_init, values: [0.5, 0.7, 0.9]}
//   replicates: 20
//   max_cells: 10000      # optional, default 10000
//   workers: 4            # optional, 0 = hardware concurrency
//   statistics: [mean_E, total_E, first_cessation, final_weights]  # optional
//
// Replicate r of every cell uses seed derive_seed(base.seed, r), so cells are
// compared on common random numbers.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "wanderer/config.hpp"
#include "wanderer/engine.hpp"
#include "wanderer/presets.hpp"
#include "wanderer/random.hpp"

namespace wanderer {

struct SweepAxis {
  std::string path;
  std::vector<std::string> values;  // scalar text, applied as `path: value`
};

inline const std::vector<std::string>& sweep_statistic_names() {
  static const std::vector<std::string> names = {
      "mean_E", "min_E", "max_E", "total_E", "first_cessation", "final_weights"};
  return names;
}

struct SweepSpec {
  RunConfig base;
  std::vector<SweepAxis> axes;
  int replicates = 1;
  std::size_t max_cells = 10000;
  unsigned workers = 0;
  std::vector<std::string> statistics = sweep_statistic_names();
};

inline std::size_t cell_count(const SweepSpec& spec) {
  std::size_t n = 1;
  for (const auto& a : spec.axes) n *= a.values.size();
  return n;
}

inline SweepSpec parse_sweep_spec(const std::string& text) {
  SweepSpec spec;
  const auto root = yaml::load(text);
  yaml::for_each_key(root, "sweep",
      {{"base", [&](const YAML::Node& v) { apply_config_keys(spec.base, v, "base"); }},
       {"parameters", [&](const YAML::Node& v) {
          if (!v.IsSequence()) throw ConfigError("parameters: expected a list" + yaml::where(v));
          for (const auto& item : v) {
            SweepAxis axis;
            yaml::for_each_key(item, "parameters entry",
                {{"path", [&](const YAML::Node& p) { axis.path = yaml::scalar(p, "path"); }},
                 {"values", [&](const YAML::Node& vals) {
                    if (!vals.IsSequence()) throw ConfigError("values: expected a list" + yaml::where(vals));
                    for (const auto& x : vals) axis.values.push_back(yaml::scalar(x, "values"));
                  }}});
            if (axis.path.empty() || axis.values.empty()) {
              throw ConfigError("parameters entry: 'path' and a non-empty 'values' are required" +
                                yaml::where(item));
            }
            spec.axes.push_back(std::move(axis));
          }
        }},
       {"replicates", [&](const YAML::Node& v) { spec.replicates = yaml::integer<int>(v, "replicates"); }},
       {"max_cells", [&](const YAML::Node& v) { spec.max_cells = yaml::integer<std::size_t>(v, "max_cells"); }},
       {"workers", [&](const YAML::Node& v) { spec.workers = yaml::integer<unsigned>(v, "workers"); }},
       {"statistics", [&](const YAML::Node& v) {
          if (!v.IsSequence()) throw ConfigError("statistics: expected a list" + yaml::where(v));
          spec.statistics.clear();
          const auto& known = sweep_statistic_names();
          for (const auto& x : v) {
            const auto name = yaml::scalar(x, "statistics");
            if (std::find(known.begin(), known.end(), name) == known.end()) {
              throw ConfigError("statistics: unknown statistic '" + name + "'" + yaml::where(x));
            }
            spec.statistics.push_back(name);
          }
        }}});
  if (spec.replicates < 1) throw ConfigError("replicates must be >= 1");
  validate(spec.base);
  return spec;
}

struct ReplicateResult {
  std::size_t cell = 0;
  int replicate = 0;
  std::uint64_t seed = 0;
  bool diverged = false;
  std::optional<int> diverged_at;
  RunSummary summary;
};

struct CellAggregate {
  std::size_t cell = 0;
  int completed = 0;
  int total = 0;
  double mean_E = 0, min_E = 0, max_E = 0, total_E = 0;
  std::optional<double> first_cessation;  // mean over replicates that ceased
  AssociativeWeights final_weights;       // mean over completed replicates
};

struct SweepResult {
  std::vector<std::vector<std::string>> cell_values;  // per cell, per axis
  std::vector<ReplicateResult> replicates;            // cell-major
  std::vector<CellAggregate> cells;
};

// Configuration of cell `index`, last axis varying fastest.
inline RunConfig cell_config(const SweepSpec& spec, std::size_t index,
                             std::vector<std::string>* values_out = nullptr) {
  RunConfig c = spec.base;
  std::vector<std::string> values(spec.axes.size());
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const auto& axis = spec.axes[a];
    values[a] = axis.values[index % axis.values.size()];
    index /= axis.values.size();
  }
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    if (spec.axes[a].path == "seed") {
      throw ConfigError("parameters: 'seed' cannot be swept; replicate seeds are derived");
    }
    YAML::Node node;
    node[spec.axes[a].path] = YAML::Load(values[a]);
    apply_config_keys(c, node, "parameters");
  }
  validate(c);
  if (values_out) *values_out = std::move(values);
  return c;
}

inline SweepResult sweep(const SweepSpec& spec) {
  const std::size_t n_cells = cell_count(spec);
  if (n_cells > spec.max_cells) {
    throw ConfigError("sweep has " + std::to_string(n_cells) + " cells, above the limit of " +
                      std::to_string(spec.max_cells));
  }
  const auto reps = static_cast<std::size_t>(spec.replicates);
  const auto seeds = derive_seeds(spec.base.seed, reps);

  SweepResult result;
  std::vector<RunConfig> configs(n_cells);
  result.cell_values.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    configs[i] = cell_config(spec, i, &result.cell_values[i]);
  }

  const std::size_t n_jobs = n_cells * reps;
  result.replicates.resize(n_jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t j = next++; j < n_jobs; j = next++) {
      ReplicateResult& out = result.replicates[j];
      out.cell = j / reps;
      out.replicate = static_cast<int>(j % reps);
      out.seed = seeds[j % reps];
      RunConfig c = configs[out.cell];
      c.seed = out.seed;
      try {
        out.summary = summarize(run(c));
      } catch (const DivergenceError& e) {
        out.diverged = true;
        out.diverged_at = e.iteration();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_jobs;
      }
    }
  };

  unsigned n_workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
  n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, n_jobs));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  result.cells.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    CellAggregate& agg = result.cells[i];
    agg.cell = i;
    agg.total = spec.replicates;
    double ceased_sum = 0;
    int ceased = 0;
    bool first = true;
    for (std::size_t r = 0; r < reps; ++r) {
      const auto& rep = result.replicates[i * reps + r];
      if (rep.diverged) continue;
      const auto& s = rep.summary;
      ++agg.completed;
      agg.mean_E += s.mean_E;
      agg.total_E += s.total_E;
      agg.min_E = first ? s.min_E : std::min(agg.min_E, s.min_E);
      agg.max_E = first ? s.max_E : std::max(agg.max_E, s.max_E);
      first = false;
      if (s.first_cessation) {
        ceased_sum += *s.first_cessation;
        ++ceased;
      }
      for (auto f : kFeatures) {
        for (auto sub : {Subsystem::excitatory, Subsystem::inhibitory}) {
          agg.final_weights.at(f, sub) += s.final_weights.get(f, sub);
        }
      }
    }
    if (agg.completed > 0) {
      const double n = agg.completed;
      agg.mean_E /= n;
      agg.total_E /= n;
      for (auto& row : agg.final_weights.w) {
        for (auto& v : row) v /= n;
      }
    }
    if (ceased > 0) agg.first_cessation = ceased_sum / ceased;
  }
  return result;
}

// One CSV: a `run` row per (cell, replicate) followed by a `cell` row per
// cell with the aggregates.
inline std::string sweep_to_csv(const SweepSpec& spec, const SweepResult& result) {
  auto has = [&](const char* name) {
    return std::find(spec.statistics.begin(), spec.statistics.end(), name) != spec.statistics.end();
  };
  std::string out = "kind,cell,replicate,seed";
  for (const auto& a : spec.axes) out += "," + a.path;
  out += ",status";
  for (const char* name : {"mean_E", "min_E", "max_E", "total_E", "first_cessation"}) {
    if (has(name)) out += std::string(",") + name;
  }
  if (has("final_weights")) out += ",w_tree_ex,w_tree_in,w_rock_ex,w_rock_in,w_sun_ex,w_sun_in";
  out += "\n";

  auto stats = [&](double mean, double mn, double mx, double total,
                   const std::string& cessation, const AssociativeWeights& w) {
    std::string s;
    if (has("mean_E")) s += "," + format_real(mean);
    if (has("min_E")) s += "," + format_real(mn);
    if (has("max_E")) s += "," + format_real(mx);
    if (has("total_E")) s += "," + format_real(total);
    if (has("first_cessation")) s += "," + cessation;
    if (has("final_weights")) {
      for (auto f : kFeatures) {
        s += "," + format_real(w.get(f, Subsystem::excitatory));
        s += "," + format_real(w.get(f, Subsystem::inhibitory));
      }
    }
    return s;
  };
  const std::size_t n_stats =
      (has("mean_E") + has("min_E") + has("max_E") + has("total_E") + has("first_cessation")) +
      (has("final_weights") ? 6 : 0);
  auto blanks = [&] { return std::string(n_stats, ','); };
  auto values = [&](std::size_t cell) {
    std::string s;
    for (const auto& v : result.cell_values[cell]) s += "," + v;
    return s;
  };

  for (const auto& r : result.replicates) {
    out += "run," + std::to_string(r.cell) + "," + std::to_string(r.replicate) + "," +
           std::to_string(r.seed) + values(r.cell);
    if (r.diverged) {
      out += ",diverged@" + std::to_string(*r.diverged_at) + blanks() + "\n";
      continue;
    }
    const auto& s = r.summary;
    out += ",ok" + stats(s.mean_E, s.min_E, s.max_E, s.total_E,
                         s.first_cessation ? std::to_string(*s.first_cessation) : "",
                         s.final_weights) +
           "\n";
  }
  for (const auto& c : result.cells) {
    out += "cell," + std::to_string(c.cell) + ",," + values(c.cell) + "," +
           std::to_string(c.completed) + "/" + std::to_string(c.total);
    if (c.completed == 0) {
      out += blanks() + "\n";
      continue;
    }
    out += stats(c.mean_E, c.min_E, c.max_E, c.total_E,
                 c.first_cessation ? format_real(*c.first_cessation) : "", c.final_weights) +
           "\n";
  }
  return out;
}

}  // namespace wanderer
